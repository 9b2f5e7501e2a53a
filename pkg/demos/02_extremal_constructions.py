"""
Extremal constructions
======================

Two families of graphs show that the edge thresholds for long cycles cannot
be lowered: the graphs L(a, b, c) with no cycle longer than 2c, and the Gyori
graphs with no cycle of length 2m - 2k.
"""

from bipturan import build_gyori_extremal, build_L, circumference, known_bounds, rho, varrho
from bipturan.constructions import l_case, ExtremalParamsL
from bipturan.cycles import longest_cycle

print("L(a, b, c): edges, case, circumference, rho(L - C) vs varrho")
for a, b, c in [(4, 4, 3), (5, 5, 2), (7, 4, 3), (9, 8, 3)]:
    G = build_L(a, b, c)
    C = longest_cycle(G)
    outside = G.all_mask & ~G.mask_of(C.vertices)
    print(
        f"  L({a},{b},{c}): {G.edge_count:3d} edges, case {l_case(ExtremalParamsL(a, b, c))},"
        f" c(L) = {circumference(G)}, rho = {rho(G, outside)}, varrho = {varrho(a, b, c)}"
    )

print()
print("Gyori graphs: K_{m-k-1,n} with k+1 pendant edges at one vertex")
for m, n, k in [(6, 6, 1), (4, 5, 1), (8, 10, 2)]:
    G = build_gyori_extremal(m, n, k)
    print(f"  ({m},{n},{k}): {G.edge_count} edges, circumference {circumference(G)} < {2 * m - 2 * k}")

print()
for m, n, t in [(4, 4, 3), (5, 5, 3)]:
    table = known_bounds(m, n, t)
    print(f"bounds for m={m}, n={n}, t={t}:")
    for name, row in table.items():
        if name != "flags":
            value = row["value"]
            shown = f"{value:.2f}" if isinstance(value, float) else value
            print(f"  {name:30s} {shown:>8}  applicable={row['applicable']}")
