"""Naive reference implementations used to cross-check the fast code.

Nothing here imports the search code of the package; graphs are handled as
flat edge masks over K_{m,n} (edge x_i y_j is bit i*n + j).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx


def edge_bit(n: int, i: int, j: int) -> int:
    return 1 << (i * n + j)


def flat_mask(G) -> int:
    return sum(edge_bit(G.n, i, j) for i, j in G.edges())


@lru_cache(maxsize=None)
def complete_cycles(m: int, n: int) -> dict[int, tuple[int, ...]]:
    """Edge masks of every cycle of K_{m,n}, keyed by cycle length."""
    out: dict[int, set[int]] = {}
    for s in range(2, min(m, n) + 1):
        found = set()
        for xs in itertools.combinations(range(m), s):
            for ys in itertools.permutations(range(n), s):
                for rest in itertools.permutations(xs[1:]):
                    order = (xs[0],) + rest
                    mask = 0
                    for k in range(s):
                        mask |= edge_bit(n, order[k], ys[k])
                        mask |= edge_bit(n, order[(k + 1) % s], ys[k])
                    found.add(mask)
        out[2 * s] = found
    return {L: tuple(sorted(v)) for L, v in out.items()}


def cycle_lengths(m: int, n: int, mask: int) -> set[int]:
    return {
        L
        for L, masks in complete_cycles(m, n).items()
        if any(c & mask == c for c in masks)
    }


def turan_bruteforce(m: int, n: int, two_t: int) -> int:
    """Largest edge count of a labeled subgraph of K_{m,n} with no C_2t."""
    cyc = complete_cycles(m, n).get(two_t, ())
    total = m * n
    for e in range(total, -1, -1):
        for keep in itertools.combinations(range(total), e):
            mask = sum(1 << b for b in keep)
            if not any(c & mask == c for c in cyc):
                return e
    return 0


def to_networkx(G) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(("x", i) for i in range(G.m))
    H.add_nodes_from(("y", j) for j in range(G.n))
    H.add_edges_from((("x", i), ("y", j)) for i, j in G.edges())
    return H


def cut_vertices_bruteforce(G) -> set:
    H = to_networkx(G)
    base = nx.number_connected_components(H)
    out = set()
    for v in list(H.nodes):
        K = H.copy()
        K.remove_node(v)
        # isolated v disappears with its own component
        if nx.number_connected_components(K) > base - (H.degree(v) == 0):
            out.add(v)
    return out


def blocks_networkx(G) -> set[frozenset]:
    return {frozenset(b) for b in nx.biconnected_components(to_networkx(G))}


def has_hamiltonian_path(G, x: int, y: int) -> bool:
    if G.m != G.n:
        return False
    others_x = [i for i in range(G.m) if i != x]
    others_y = [j for j in range(G.n) if j != y]
    for px in itertools.permutations(others_x):
        xs = (x,) + px
        for py in itertools.permutations(others_y):
            ys = py + (y,)
            ok = all(G.has_edge(xs[k], ys[k]) for k in range(G.m)) and all(
                G.has_edge(xs[k + 1], ys[k]) for k in range(G.m - 1)
            )
            if ok:
                return True
    return False


def _neighbour_sets(G) -> dict:
    nb = {("x", i): set() for i in range(G.m)}
    nb.update({("y", j): set() for j in range(G.n)})
    for i, j in G.edges():
        nb[("x", i)].add(("y", j))
        nb[("y", j)].add(("x", i))
    return nb


def _simple_paths(nb, start, avoid):
    stack = [[start]]
    while stack:
        p = stack.pop()
        yield p
        for w in nb[p[-1]]:
            if w not in p and w not in avoid:
                stack.append(p + [w])


def best_detached_dpp(G, s1, s2) -> int:
    """Largest order of a detached maximal {s1, s2}-DPP (0 if none)."""
    nb = _neighbour_sets(G)
    best = 0
    for p1 in _simple_paths(nb, s1, {s2}):
        for p2 in _simple_paths(nb, s2, set(p1)):
            if p1[-1][0] == p2[-1][0]:
                continue
            inside = set(p1) | set(p2)
            if nb[p1[-1]] <= inside and nb[p2[-1]] <= inside:
                best = max(best, len(inside))
    return best


def longest_path_between(G, s, t) -> int:
    nb = _neighbour_sets(G)
    return max((len(p) for p in _simple_paths(nb, s, set()) if p[-1] == t), default=0)
