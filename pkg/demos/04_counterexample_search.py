"""
Searching for counterexamples
=============================

``verify_theorem`` enumerates every labeled graph above a theorem's edge
threshold (or samples them at random) and returns the graphs that break its
conclusion.  For true theorems the list is empty.  A deliberately weakened
claim shows what a hit looks like.
"""

import time

from bipturan import verify_theorem
from bipturan.enumeration import THEOREMS, turan_exact

runs = [
    ("T1.2", dict(m=4, n=[4, 5], t=3)),
    ("T1.4", dict(m=4, n=5, k=[0, 1])),
    ("T1.5ii", dict(m=4, n=4, k=[0, 1])),
    ("ES", dict(m=4, n=4)),
    ("L2.8", dict(m=range(2, 4), n=range(2, 5))),
]
for tid, params in runs:
    start = time.perf_counter()
    found = verify_theorem(tid, **params)
    print(f"{tid:7s} {THEOREMS[tid].clause}")
    print(f"        violations: {len(found)}  ({time.perf_counter() - start:.1f}s)")

start = time.perf_counter()
found = verify_theorem("T1.7", range(2, 7), range(2, 7), exhaustive=False, samples=2000, seed=1)
print(f"T1.7 on 2000 random graphs: {len(found)} violations ({time.perf_counter() - start:.1f}s)")

# Drop the edge threshold of T1.2 and the extremal graph itself is reported.
th = THEOREMS["T1.2"]()
G = turan_exact(4, 4, 6).witness
weak = type("NoThreshold", (type(th),), {"min_edges": lambda self, m, n, p: 0})()
print("extremal graph vs the thresholded claim:", th.check(G, {"t": 3}))
print("extremal graph vs the claim without threshold:", weak.check(G, {"t": 3}))
