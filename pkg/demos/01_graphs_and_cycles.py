"""
Bipartite graphs and their even cycles
======================================

Graphs are stored as one bit row per X-vertex and printed 0-based (the file
format and the command line count from 1).  This script builds a few small
graphs, reads and writes the plain-text ``bip`` format, and asks the exact
cycle routines about them.
"""

from bipturan import (
    block_decomposition,
    complete,
    even_spectrum,
    find_cycle_of_length,
    format_graph,
    from_edge_list,
    is_bipancyclic,
    is_hamilton_biconnected,
    longest_cycle,
    parse_graph,
    rho,
    xv,
)

# An 8-cycle x0 y0 x1 y1 x2 y2 x3 y3.
c8 = from_edge_list(4, 4, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (0, 3)])
print("8-cycle:", c8)
print("  spectrum:", sorted(even_spectrum(c8).present_lengths))
print("  bipancyclic:", is_bipancyclic(c8))
print("  Hamilton-biconnected:", is_hamilton_biconnected(c8))

# Adding a chord x0 y1 splits it into a 4-cycle and a 6-cycle as well.
chorded = c8.with_edges([(0, 1)])
print("with chord x0y1:", sorted(even_spectrum(chorded).present_lengths))

# The complete graph K_{3,3} has every even length.
K = complete(3, 3)
C = longest_cycle(K)
print("K_{3,3} longest cycle:", " ".join(map(str, C.vertices)))
print("  a 4-cycle:", find_cycle_of_length(K, 4).edges())

# rho(S) counts the edges that touch S.
print("rho(K_{3,3}, {x0, x1}) =", rho(K, [xv(0), xv(1)]))

# Two squares glued at x0: two end-blocks and one cut vertex.
glued = from_edge_list(3, 4, [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (0, 3), (2, 2), (2, 3)])
D = block_decomposition(glued)
print("blocks:", [sorted(map(str, b)) for b in D.blocks])
print("cut vertices:", sorted(map(str, D.cut_vertices)))

# The file format round-trips exactly.
text = format_graph(glued, ["two squares sharing x0"])
print(text, end="")
assert parse_graph(text) == glued
