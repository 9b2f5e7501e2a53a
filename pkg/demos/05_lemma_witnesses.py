"""
Witnesses for the structural lemmas
===================================

Each lemma promises a path, a pair of paths, or a fan of a certain size.  The
witness searches are exhaustive, so if a witness is missing the lemma is
false on that graph and ``LemmaFalsified`` is raised.  The sweep draws
random graphs that meet the hypotheses and checks the promised size.
"""

from bipturan import (
    complete,
    detached_maximal_dpp,
    dpp_good_pair,
    find_fan,
    from_edge_list,
    long_path_between,
    longest_cycle,
    maximal_path_with_terminus,
    xv,
    yv,
)
from bipturan.bigraph import min_pair_rho
from bipturan.sweeps import LEMMAS, sweep

K32 = complete(3, 2)
W = maximal_path_with_terminus(K32, yv(0), 2)
print("maximal path from y0 in K_{3,2}:", W, f"(order {W.order})")

K33 = complete(3, 3)
D = detached_maximal_dpp(K33, xv(0), yv(0))
print("detached maximal DPP in K_{3,3}:", D.path1, "|", D.path2, f"(order {D.order})")

square_tail = from_edge_list(3, 3, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 2)])
D = dpp_good_pair(square_tail, xv(0), xv(2))
print("good-pair DPP:", D.path1, "|", D.path2, f"(order {D.order} >= {min_pair_rho(square_tail) + 1})")

K34 = complete(3, 4)
C = longest_cycle(K34)
F = find_fan(K34, yv(3), C, 3)
print("fan from y3 onto", " ".join(map(str, C.vertices)), "->", [str(p) for p in F.paths])

P = long_path_between(K33, xv(0), xv(1))
print("long x0-x1 path in K_{3,3}:", P)

print()
for lemma in LEMMAS:
    rep = sweep(lemma, samples=100, seed=3, max_order=10)
    print(f"{lemma}: {rep.successes}/{rep.instances} random instances meet the bound")
