"""
Exact bipartite Turan numbers
=============================

``turan_exact(m, n, 2t)`` finds the largest number of edges in a graph with
parts of sizes m and n and no cycle of length 2t.  In the range
n >= m >= t >= m/2 + 1 it agrees with (t - 1) n + m - t + 1; outside that
range the formula can fail, and the probe shows by how much.
"""

from bipturan import probe_outside_range, turan_exact
from bipturan.cycles import find_cycle_of_length

print(" m  n 2t  exact  formula  proven  nodes")
for m, n, t in [(2, 3, 2), (3, 5, 3), (4, 4, 3), (4, 6, 4), (5, 5, 4), (5, 6, 5)]:
    res = turan_exact(m, n, 2 * t)
    assert find_cycle_of_length(res.witness, 2 * t) is None
    print(
        f"{m:2d} {n:2d} {2 * t:2d} {res.value:6d} {res.formula_value:8d}"
        f"  {str(res.in_proven_range):6s} {res.stats.nodes:6d}"
    )

print()
print("outside the proven range:")
for m, n, two_t in [(3, 3, 4), (4, 4, 4), (5, 5, 6)]:
    rep = probe_outside_range(m, n, two_t)
    print(f"  ex({m},{n},C_{two_t}) = {rep['value']}, formula {rep['formula_value']}, excess {rep['excess']}")

best = turan_exact(5, 5, 6).witness
print()
print("a C_6-free witness on (5, 5):")
for i, row in enumerate(best.rows):
    print("  x%d " % (i + 1) + "".join("#" if row >> j & 1 else "." for j in range(best.n)))
