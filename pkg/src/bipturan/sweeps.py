"""Seeded random sweeps of the witness searches.

``lemma_instance(lemma, rng)`` draws a random graph together with anchors that
satisfy the lemma's hypotheses (rejection sampling); ``sweep`` runs the
matching witness search on many such instances and checks the bound.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import witnesses as W
from .bigraph import (
    BipartiteGraph,
    component_masks,
    cut_vertex_mask,
    is_2connected,
    is_connected,
    is_good_pair,
    iter_bits,
    min_pair_rho,
    xv,
    yv,
)
from .cycles import longest_cycle
from .errors import LemmaFalsified

LEMMAS = ("L2.1", "L2.2", "L2.3", "L2.6", "L2.9")


def _random_rows(rng: random.Random, m: int, n: int, p: float) -> BipartiteGraph:
    rows = tuple(sum(1 << j for j in range(n) if rng.random() < p) for _ in range(m))
    return BipartiteGraph(m, n, rows)


def _instance_l21(rng, max_order):
    while True:
        from_x = rng.random() < 0.5
        n = rng.randint(1, (max_order - 1) // 2 if from_x else max_order // 2)
        m = rng.randint(n + 1 if from_x else n, max_order - n)
        G = _random_rows(rng, m, n, rng.uniform(0.2, 0.9))
        if not is_connected(G):
            continue
        d = min(r.bit_count() for r in G.rows)
        if d < 1:
            continue
        origin = xv(rng.randrange(m)) if from_x else yv(rng.randrange(n))
        return G, {"origin": origin, "min_deg_d": d}


def _instance_l22(rng, max_order):
    while True:
        n = rng.randint(1, max_order // 2)
        G = _random_rows(rng, n, n, rng.uniform(0.2, 0.9))
        if is_connected(G):
            return G, {"x0": xv(rng.randrange(n)), "y0": yv(rng.randrange(n))}


def _instance_l23(rng, max_order):
    while True:
        n = rng.randint(2, max_order // 2)
        G = _random_rows(rng, n, n, rng.uniform(0.2, 0.7))
        if not is_connected(G) or cut_vertex_mask(G) == 0:
            continue
        pairs = [
            (a, b)
            for a in range(n)
            for b in range(a + 1, n)
            if is_good_pair(G, xv(a), xv(b))
        ]
        if not pairs:
            continue
        a, b = rng.choice(pairs)
        if rng.random() < 0.5:
            a, b = b, a
        return G, {"x0": xv(a), "x0p": xv(b)}


def _instance_l26(rng, max_order):
    while True:
        n = rng.randint(2, max_order - 2)
        m = rng.randint(2, max_order - n)
        G = _random_rows(rng, m, n, rng.uniform(0.3, 0.9))
        if not is_2connected(G):
            continue
        C = longest_cycle(G)
        on_c = G.mask_of(C.vertices)
        outside = G.all_mask & ~on_c
        if not outside:
            continue
        g = rng.choice(list(iter_bits(outside)))
        H = next(c for c in component_masks(G, outside) if c >> g & 1)
        d = min(G.adjacency[v].bit_count() for v in iter_bits(H))
        return G, {"x": G.ref(g), "C": C, "d": d}


def _instance_l29(rng, max_order):
    while True:
        n = rng.randint(2, max_order // 2)
        G = _random_rows(rng, n, n, rng.uniform(0.3, 0.9))
        if not is_2connected(G):
            continue
        a, b = rng.sample(range(n), 2)
        return G, {"x1": xv(a), "x2": xv(b)}


_GENERATORS = {
    "L2.1": _instance_l21,
    "L2.2": _instance_l22,
    "L2.3": _instance_l23,
    "L2.6": _instance_l26,
    "L2.9": _instance_l29,
}


def lemma_instance(lemma: str, rng: random.Random, max_order: int = 12):
    """(graph, keyword anchors) meeting the hypotheses of ``lemma``."""
    return _GENERATORS[lemma](rng, max_order)


def run_lemma(lemma: str, G: BipartiteGraph, anchors: dict):
    """Run the witness search for ``lemma``; return (witness, size, bound)."""
    if lemma == "L2.1":
        w = W.maximal_path_with_terminus(G, **anchors)
        d = anchors["min_deg_d"]
        bound = 2 * d if anchors["origin"].side == "Y" else 2 * d + 1
        inside = G.mask_of(w.vertices)
        if G.adjacency[G.gid(w.terminus)] & ~inside or w.terminus.side != "X":
            raise AssertionError(f"{w} is not a maximal path ending in X")
        return w, w.order, bound
    if lemma == "L2.2":
        w = W.detached_maximal_dpp(G, **anchors)
        return w, w.order, min_pair_rho(G) + 1
    if lemma == "L2.3":
        w = W.dpp_good_pair(G, **anchors)
        return w, w.order, min_pair_rho(G) + 1
    if lemma == "L2.6":
        w = W.find_fan(G, **anchors)
        return w, w.edge_count, anchors["d"]
    if lemma == "L2.9":
        w = W.long_path_between(G, **anchors)
        return w, w.order, min_pair_rho(G)
    raise KeyError(lemma)


@dataclass
class SweepReport:
    lemma: str
    instances: int = 0
    successes: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.instances > 0 and self.successes == self.instances


def sweep(lemma: str, samples: int = 500, seed: int = 0, max_order: int = 12) -> SweepReport:
    rep = SweepReport(lemma)
    for i in range(samples):
        rng = random.Random(f"{lemma}/{seed}/{i}")
        G, anchors = lemma_instance(lemma, rng, max_order)
        rep.instances += 1
        try:
            _, size, bound = run_lemma(lemma, G, anchors)
        except LemmaFalsified as exc:
            rep.failures.append((i, G, anchors, str(exc)))
            continue
        if size >= bound:
            rep.successes += 1
        else:
            rep.failures.append((i, G, anchors, f"size {size} < bound {bound}"))
    return rep
