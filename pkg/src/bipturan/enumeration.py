"""Exhaustive and randomized search over bipartite graphs.

* :func:`enumerate_graphs` walks every labeled subgraph of ``K_{m,n}`` with
  at least ``min_edges`` edges.
* :func:`turan_exact` computes ``ex(m, n, C_2t)`` exactly.
* :func:`verify_theorem` sweeps a theorem's hypothesis range and collects
  every graph that breaks its conclusion.  The expected output is ``[]``.

Work can be split into shards that share nothing; results are merged in shard
order so a parallel run reports exactly what a sequential one does.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import cycles
from .bigraph import (
    BipartiteGraph,
    format_graph,
    is_2connected,
    iter_bits,
    rho,
)
from .constructions import (
    build_gyori_extremal,
    gyori_lower_bound_graph,
    longest_cycle_outside_bound,
)
from .errors import InvalidParams, TooLarge, UnknownTheorem

MAX_EXHAUSTIVE_MN = 36
MAX_TURAN_MN = 36


# -- labeled enumeration ---------------------------------------------------

def _rows_from_flat(mask: int, m: int, n: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple((mask >> (i * n)) & full for i in range(m))


def iter_graphs(
    m: int,
    n: int,
    min_edges: int = 0,
    *,
    shard: tuple[int, int] | None = None,
    override: bool = False,
) -> Iterable[BipartiteGraph]:
    """Every labeled graph on parts (m, n) with >= ``min_edges`` edges.

    Graphs are produced by descending edge count, and within one edge count
    by the lexicographic order of the set of missing edges (edge ``x_i y_j``
    has number ``i * n + j``).  ``shard = (index, p)`` restricts to graphs whose
    first ``p`` edges are present exactly where ``index`` has a 1 bit; the
    ``2**p`` shards partition the whole space.
    """
    total = m * n
    if total > MAX_EXHAUSTIVE_MN and not override:
        raise TooLarge(f"m*n = {total} exceeds the exhaustive guard {MAX_EXHAUSTIVE_MN}")
    index, p = shard if shard is not None else (0, 0)
    if not 0 <= p <= total or not 0 <= index < 1 << p:
        raise InvalidParams(f"bad shard {shard}")
    fixed_on = index
    fixed_missing = [e for e in range(p) if not fixed_on >> e & 1]
    free = list(range(p, total))
    base = ((1 << total) - 1) ^ sum(1 << e for e in fixed_missing)
    have = total - len(fixed_missing)
    for missing in range(0, have - min_edges + 1):
        for drop in itertools.combinations(free, missing):
            mask = base
            for e in drop:
                mask ^= 1 << e
            yield BipartiteGraph(m, n, _rows_from_flat(mask, m, n))


def enumerate_graphs(
    m: int,
    n: int,
    min_edges: int,
    visitor: Callable[[BipartiteGraph], object] | None = None,
    *,
    shard: tuple[int, int] | None = None,
    override: bool = False,
) -> int:
    """Call ``visitor`` on each graph of :func:`iter_graphs`; return the count."""
    count = 0
    for G in iter_graphs(m, n, min_edges, shard=shard, override=override):
        if visitor is not None:
            visitor(G)
        count += 1
    return count


def random_graph(rng: random.Random, m: int, n: int, edges: int) -> BipartiteGraph:
    """Uniform random labeled graph with exactly ``edges`` edges."""
    chosen = rng.sample(range(m * n), edges)
    rows = [0] * m
    for e in chosen:
        rows[e // n] |= 1 << (e % n)
    return BipartiteGraph(m, n, tuple(rows))


# -- exact Turan numbers ---------------------------------------------------

@dataclass
class SearchStats:
    nodes: int = 0
    seconds: float = 0.0


@dataclass
class TuranResult:
    m: int
    n: int
    cycle_length: int
    value: int
    witness: BipartiteGraph
    formula_value: int
    in_proven_range: bool
    stats: SearchStats = field(default_factory=SearchStats)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "cycle_length": self.cycle_length,
            "value": self.value,
            "formula_value": self.formula_value,
            "in_proven_range": self.in_proven_range,
            "witness": [[i + 1, j + 1] for i, j in self.witness.edges()],
        }


def _pair_reach(rows: list[int], ncols: int, t: int) -> list[int]:
    """reach[a] = Y-vertices b != a joined to a by a path with t-1 inner X's.

    A new X-vertex adjacent to both a and b would close a cycle on 2t
    vertices.
    """
    colx = [0] * ncols
    for i, r in enumerate(rows):
        for j in iter_bits(r):
            colx[j] |= 1 << i
    reach = [0] * ncols
    if t == 2:
        for a in range(ncols):
            acc = 0
            for i in iter_bits(colx[a]):
                acc |= rows[i]
            reach[a] = acc & ~(1 << a)
        return reach

    for a in range(ncols):
        acc = 0
        stack = [(a, 0, 1 << a, 0)]  # (y, used X, used Y, X count)
        while stack:
            y, ux, uy, k = stack.pop()
            for i in iter_bits(colx[y] & ~ux):
                nxt = rows[i] & ~uy
                if k + 1 == t - 1:
                    acc |= nxt
                else:
                    for j in iter_bits(nxt):
                        stack.append((j, ux | 1 << i, uy | 1 << j, k + 1))
        reach[a] = acc
    return reach


def _class_choices(classes: list[int], d: int):
    """Rows taking the lowest k_c columns of every class with sum k_c = d."""
    sizes = [c.bit_count() for c in classes]
    tail = [0] * (len(classes) + 1)
    for idx in range(len(classes) - 1, -1, -1):
        tail[idx] = tail[idx + 1] + sizes[idx]

    def rec(idx: int, left: int, row: int):
        if idx == len(classes):
            if left == 0:
                yield row
            return
        if left > tail[idx]:
            return
        cls = classes[idx]
        hi = min(sizes[idx], left)
        lo = max(0, left - tail[idx + 1])
        for k in range(hi, lo - 1, -1):
            part = 0
            rest = cls
            for _ in range(k):
                low = rest & -rest
                part |= low
                rest ^= low
            yield from rec(idx + 1, left - k, row | part)

    yield from rec(0, d, 0)


def _row_ok(row: int, reach: list[int]) -> bool:
    for j in iter_bits(row):
        if reach[j] & row:
            return False
    return True


def _refine(classes: list[int], row: int) -> list[int]:
    out = []
    for c in classes:
        a, b = c & row, c & ~row
        if a:
            out.append(a)
        if b:
            out.append(b)
    return out


def _search_rows(
    nrows: int,
    ncols: int,
    t: int,
    target: int,
    stats: SearchStats,
    prefix: list[int],
    classes: list[int],
    prev_d: int,
) -> list[int] | None:
    """Complete ``prefix`` to a C_2t-free graph with >= target edges.

    Rows are kept in non-increasing degree order and each row takes an initial
    segment of every column class (columns identical on earlier rows); both
    conditions only remove relabelings of graphs that are still searched.
    """
    stats.nodes += 1
    depth = len(prefix)
    if depth == nrows:
        edges = sum(r.bit_count() for r in prefix)
        return list(prefix) if edges >= target else None
    edges = sum(r.bit_count() for r in prefix)
    left = nrows - depth
    d_min = max(0, -(-(target - edges) // left))
    if d_min > prev_d:
        return None
    reach = _pair_reach(prefix, ncols, t) if depth else [0] * ncols
    for d in range(prev_d, d_min - 1, -1):
        for row in _class_choices(classes, d):
            if depth and not _row_ok(row, reach):
                continue
            prefix.append(row)
            found = _search_rows(
                nrows, ncols, t, target, stats, prefix, _refine(classes, row), d
            )
            prefix.pop()
            if found is not None:
                return found
    return None


def _top_branches(nrows: int, ncols: int, target: int) -> list[int]:
    """First-row choices (the first row is fixed up to its degree)."""
    d_min = max(0, -(-target // nrows))
    return [(1 << d) - 1 for d in range(ncols, d_min - 1, -1)]


def _search_branch(args) -> tuple[list[int] | None, int]:
    nrows, ncols, t, target, first = args
    stats = SearchStats()
    classes = [c for c in (first, ((1 << ncols) - 1) & ~first) if c]
    found = _search_rows(
        nrows, ncols, t, target, stats, [first], classes, first.bit_count()
    )
    return found, stats.nodes


def find_free_graph(
    m: int, n: int, t: int, target: int, *, jobs: int = 1, stats: SearchStats | None = None
) -> BipartiteGraph | None:
    """Some graph on parts (m, n) with >= ``target`` edges and no C_2t."""
    stats = stats if stats is not None else SearchStats()
    if target > m * n:
        return None
    transpose = m > n
    nrows, ncols = (n, m) if transpose else (m, n)
    tasks = [(nrows, ncols, t, target, first) for first in _top_branches(nrows, ncols, target)]
    found = None
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for rows, nodes in pool.map(_search_branch, tasks):
                stats.nodes += nodes
                if rows is not None and found is None:
                    found = rows
    else:
        for task in tasks:
            rows, nodes = _search_branch(task)
            stats.nodes += nodes
            if rows is not None:
                found = rows
                break
    if found is None:
        return None
    G = BipartiteGraph(nrows, ncols, tuple(found))
    return G.transpose() if transpose else G


def turan_formula(m: int, n: int, t: int) -> int:
    return (t - 1) * n + m - t + 1


def in_proven_range(m: int, n: int, t: int) -> bool:
    return n >= m >= t and 2 * t >= m + 2


def turan_exact(m: int, n: int, two_t: int, *, jobs: int = 1, override: bool = False) -> TuranResult:
    """ex(m, n, C_2t) by a descending search from the Gyori lower bound."""
    if two_t % 2:
        raise InvalidParams("cycle length must be even")
    t = two_t // 2
    if not 2 <= t <= min(m, n):
        raise InvalidParams(f"need 2 <= t <= min(m, n), got m={m}, n={n}, t={t}")
    if m * n > MAX_TURAN_MN and not override:
        raise TooLarge(f"m*n = {m * n} exceeds the Turan guard {MAX_TURAN_MN}")
    start = time.perf_counter()
    stats = SearchStats()
    if m <= n:
        best = gyori_lower_bound_graph(m, n, t)
    else:
        best = gyori_lower_bound_graph(n, m, t).transpose()
    while True:
        G = find_free_graph(m, n, t, best.edge_count + 1, jobs=jobs, stats=stats)
        if G is None:
            break
        best = G
    stats.seconds = time.perf_counter() - start
    if cycles.find_cycle_of_length(best, two_t) is not None:
        raise AssertionError(f"witness for ex({m},{n},C_{two_t}) contains C_{two_t}")
    return TuranResult(
        m, n, two_t, best.edge_count, best,
        turan_formula(m, n, t), in_proven_range(m, n, t), stats,
    )


def probe_outside_range(m: int, n: int, two_t: int, *, jobs: int = 1) -> dict:
    """Exact value against the closed formula where the formula is unproven.

    Only ``value >= formula`` is guaranteed (the Gyori graph); excess is
    recorded, not asserted either way.
    """
    t = two_t // 2
    if 2 * t > m + 1:
        raise InvalidParams(f"t={t} is not <= (m+1)/2 for m={m}")
    res = turan_exact(m, n, two_t, jobs=jobs)
    return {
        "m": m,
        "n": n,
        "cycle_length": two_t,
        "value": res.value,
        "formula_value": res.formula_value,
        "excess": res.value - res.formula_value,
        "strict_excess": res.value > res.formula_value,
        "lower_bound_holds": res.value >= res.formula_value,
        "witness": res.to_json()["witness"],
        "stats": {"nodes": res.stats.nodes, "seconds": res.stats.seconds},
    }


# -- theorem falsification -------------------------------------------------

@dataclass
class Violation:
    graph: BipartiteGraph
    theorem_id: str
    clause: str
    details: dict

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "clause": self.clause,
            "m": self.graph.m,
            "n": self.graph.n,
            "edges": [[i + 1, j + 1] for i, j in self.graph.edges()],
            "details": self.details,
        }

    def graph_file(self) -> str:
        return format_graph(self.graph, [f"{self.theorem_id}: {self.clause}"])


def _need(params: dict, *names: str) -> None:
    for name in names:
        if params.get(name) is None:
            raise InvalidParams(f"parameter {name!r} is required")


def _spectrum_missing(G: BipartiteGraph, upto: int) -> list[int]:
    return [L for L in range(4, upto + 1, 2) if cycles.find_cycle_of_length(G, L) is None]


class _Theorem:
    id = ""
    clause = ""
    extra: tuple[str, ...] = ()

    def applies(self, m: int, n: int, p: dict) -> bool:
        return True

    def min_edges(self, m: int, n: int, p: dict) -> int:
        return 0

    def check(self, G: BipartiteGraph, p: dict) -> dict | None:
        raise NotImplementedError


class _ExactCycle(_Theorem):
    id = "T1.2"
    clause = "n >= m, t <= m <= 2t-2, e(G) > (t-1)(n-1)+m  =>  G contains C_2t"
    extra = ("t",)

    def applies(self, m, n, p):
        t = p["t"]
        return n >= m and t <= m <= 2 * t - 2 and t >= 2

    def min_edges(self, m, n, p):
        return (p["t"] - 1) * (n - 1) + m + 1

    def check(self, G, p):
        t = p["t"]
        if G.edge_count < self.min_edges(G.m, G.n, p):
            return None
        if cycles.find_cycle_of_length(G, 2 * t) is None:
            return {"edges": G.edge_count, "missing_length": 2 * t}
        return None


class _Consecutive(_Theorem):
    id = "T1.4"
    clause = "n >= m >= 2k+2, e(G) >= n(m-k-1)+k+2  =>  all even lengths 4..2m-2k"
    extra = ("k",)

    def applies(self, m, n, p):
        return p["k"] >= 0 and n >= m >= 2 * p["k"] + 2

    def min_edges(self, m, n, p):
        k = p["k"]
        return n * (m - k - 1) + k + 2

    def check(self, G, p):
        if G.edge_count < self.min_edges(G.m, G.n, p):
            return None
        missing = _spectrum_missing(G, 2 * G.m - 2 * p["k"])
        if missing:
            return {"edges": G.edge_count, "missing_lengths": missing}
        return None


class _BalancedCircumference(_Theorem):
    id = "T1.5i"
    clause = "balanced, n >= 2k+2, e(G) >= (n-k-1)n+k+2  =>  c(G) >= 2n-2k"
    extra = ("k",)

    def applies(self, m, n, p):
        return m == n and p["k"] >= 0 and n >= 2 * p["k"] + 2

    def min_edges(self, m, n, p):
        k = p["k"]
        return (n - k - 1) * n + k + 2

    def check(self, G, p):
        if G.edge_count < self.min_edges(G.m, G.n, p):
            return None
        c = cycles.circumference(G)
        if c < 2 * G.n - 2 * p["k"]:
            return {"edges": G.edge_count, "circumference": c, "bound": 2 * G.n - 2 * p["k"]}
        return None


class _BalancedSpectrum(_BalancedCircumference):
    id = "T1.5ii"
    clause = "balanced, n >= 2k+2, e(G) >= (n-k-1)n+k+2  =>  all even lengths 4..c(G)"

    def check(self, G, p):
        if G.edge_count < self.min_edges(G.m, G.n, p):
            return None
        spec = cycles.even_spectrum(G)
        want = set(range(4, spec.circumference + 1, 2))
        if spec.circumference < 4 or want != spec.present_lengths:
            return {
                "edges": G.edge_count,
                "circumference": spec.circumference,
                "missing_lengths": sorted(want - spec.present_lengths),
            }
        return None


def iter_longest_cycles(G: BipartiteGraph):
    """Every longest cycle of G once (up to rotation and direction)."""
    c = cycles.circumference(G)
    if c:
        yield from cycles.iter_cycles_of_length(G, c)


class _OutsideLongestCycle(_Theorem):
    id = "T1.7"
    clause = "C longest cycle on 2c vertices, a >= b part sizes  =>  rho(G - C) <= varrho"

    def __init__(self, all_longest: bool = False):
        self.all_longest = all_longest

    def _one(self, G, C):
        a, b = max(G.m, G.n), min(G.m, G.n)
        c = C.length // 2
        outside = G.all_mask & ~G.mask_of(C.vertices)
        value = rho(G, outside)
        bounds = longest_cycle_outside_bound(a, b, c)
        broken = {k: v for k, v in bounds.items() if value > v}
        if broken:
            return {
                "rho_outside": value,
                "bounds": bounds,
                "a": a, "b": b, "c": c,
                "cycle": [str(v) for v in C.vertices],
            }
        return None

    def check(self, G, p):
        C = cycles.longest_cycle(G)
        if C is None:
            return None
        bad = self._one(G, C)
        if bad or not self.all_longest:
            return bad
        for C in iter_longest_cycles(G):
            bad = self._one(G, C)
            if bad:
                return bad
        return None


class _EntringerSchmeichel(_Theorem):
    id = "ES"
    clause = "balanced, hamiltonian, e(G) > n^2/2  =>  bipancyclic"

    def applies(self, m, n, p):
        return m == n and n >= 2

    def min_edges(self, m, n, p):
        return n * n // 2 + 1

    def check(self, G, p):
        if 2 * G.edge_count <= G.n * G.n or not cycles.is_hamiltonian(G):
            return None
        missing = _spectrum_missing(G, 2 * G.n)
        if missing:
            return {"edges": G.edge_count, "missing_lengths": missing}
        return None


def _orientations(G: BipartiteGraph):
    """(graph, larger-side-first) views used by the side-asymmetric lemmas."""
    if G.m > G.n:
        return [G]
    if G.m < G.n:
        return [G.transpose()]
    return [G, G.transpose()]


class _JacksonLongCycle(_Theorem):
    id = "L2.4"
    clause = "2-connected, |X| >= |Y|, d(X) >= k, d(Y) >= l  =>  c(G) >= 2 min{|Y|, k+l-1, 2k-2}"

    def check(self, G, p):
        if not is_2connected(G):
            return None
        c = cycles.circumference(G)
        for H in _orientations(G):
            k = min(r.bit_count() for r in H.rows)
            l = min(col.bit_count() for col in H.cols)
            bound = 2 * min(H.n, k + l - 1, 2 * k - 2)
            if H.m == H.n and k == l:
                bound = max(bound, 2 * min(H.n, 2 * k - 1))
            if c < bound:
                return {"circumference": c, "bound": bound, "k": k, "l": l}
        return None


class _BaggaVarma(_Theorem):
    id = "L2.5"
    clause = "balanced, d(x)+d(y) >= n+2 for all (x,y)  =>  Hamilton-biconnected"

    def applies(self, m, n, p):
        return m == n

    def check(self, G, p):
        n = G.n
        dx = min(r.bit_count() for r in G.rows)
        dy = min(c.bit_count() for c in G.cols)
        if dx + dy < n + 2:
            return None
        if not cycles.is_hamilton_biconnected(G):
            return {"min_degree_sum": dx + dy}
        return None


def iter_maximal_paths(G: BipartiteGraph):
    """Every maximal path (both end-neighbourhoods on the path), as gid lists.

    Each path is produced once per direction.
    """
    adj = G.adjacency
    path: list[int] = []

    def walk(v: int, used: int):
        path.append(v)
        used |= 1 << v
        if adj[v] & ~used == 0 and adj[path[0]] & ~used == 0:
            yield list(path)
        for w in iter_bits(adj[v] & ~used):
            yield from walk(w, used)
        path.pop()

    for s in range(G.order):
        if adj[s]:
            yield from walk(s, 0)


class _JacksonMaximalPath(_Theorem):
    id = "L2.7"
    clause = "2-connected, P maximal path with ends u, v  =>  c(G) >= Jackson path bound"

    def check(self, G, p):
        if not is_2connected(G):
            return None
        c = cycles.circumference(G)
        adj = G.adjacency
        for P in iter_maximal_paths(G):
            u, v = P[0], P[-1]
            du, dv = adj[u].bit_count(), adj[v].bit_count()
            if (u < G.m) != (v < G.m):
                bound = min(len(P), 2 * (du + dv - 1))
            else:
                bound = min(len(P) - 1, 2 * (du + dv - 2))
            if c < bound:
                return {
                    "circumference": c,
                    "bound": bound,
                    "path": [str(G.ref(g)) for g in P],
                }
        return None


class _CycleThroughX(_Theorem):
    id = "L2.8"
    clause = "|X| <= |Y|, d(x) >= max{|X|, |Y|/2+1} on X  =>  a cycle contains X"

    def check(self, G, p):
        views = [G] if G.m < G.n else [G.transpose()] if G.m > G.n else [G, G.transpose()]
        for H in views:
            if H.m < 2:
                continue
            need = max(H.m, H.n / 2 + 1)
            if all(r.bit_count() >= need for r in H.rows):
                if cycles.cycle_through_X(H) is None:
                    return {"side_size": H.m, "other_size": H.n}
        return None


THEOREMS: dict[str, type[_Theorem]] = {
    cls.id: cls
    for cls in (
        _ExactCycle,
        _Consecutive,
        _BalancedCircumference,
        _BalancedSpectrum,
        _OutsideLongestCycle,
        _EntringerSchmeichel,
        _JacksonLongCycle,
        _BaggaVarma,
        _JacksonMaximalPath,
        _CycleThroughX,
    )
}


def _as_range(v) -> list[int] | list[None]:
    if v is None:
        return [None]
    if isinstance(v, int):
        return [v]
    return list(v)


def _make(theorem_id: str, all_longest: bool) -> _Theorem:
    if theorem_id not in THEOREMS:
        raise UnknownTheorem(theorem_id)
    cls = THEOREMS[theorem_id]
    return cls(all_longest) if cls is _OutsideLongestCycle else cls()


def _cases(th: _Theorem, m, n, t, k) -> list[tuple[int, int, dict]]:
    out = []
    for mm, nn, tt, kk in itertools.product(_as_range(m), _as_range(n), _as_range(t), _as_range(k)):
        p = {"t": tt, "k": kk}
        _need(p, *th.extra)
        if mm < 1 or nn < 1:
            raise InvalidParams("part sizes must be >= 1")
        if th.applies(mm, nn, p):
            out.append((mm, nn, p))
    return out


def _exhaustive_shard(args) -> list[Violation]:
    theorem_id, all_longest, m, n, p, shard, override = args
    th = _make(theorem_id, all_longest)
    found = []
    for G in iter_graphs(m, n, th.min_edges(m, n, p), shard=shard, override=override):
        bad = th.check(G, p)
        if bad is not None:
            found.append(Violation(G, th.id, th.clause, dict(bad, **_params_json(m, n, p))))
    return found


def _random_chunk(args) -> list[Violation]:
    theorem_id, all_longest, cases, seed, lo, hi = args
    th = _make(theorem_id, all_longest)
    found = []
    for i in range(lo, hi):
        rng = random.Random(f"{seed}/{i}")
        m, n, p = cases[rng.randrange(len(cases))]
        e = rng.randint(min(th.min_edges(m, n, p), m * n), m * n)
        G = random_graph(rng, m, n, e)
        bad = th.check(G, p)
        if bad is not None:
            found.append(Violation(G, th.id, th.clause, dict(bad, **_params_json(m, n, p), sample=i)))
    return found


def _params_json(m, n, p) -> dict:
    out = {"m": m, "n": n}
    out.update({k: v for k, v in p.items() if v is not None})
    return out


def _run(fn, tasks: list, jobs: int) -> list[Violation]:
    out: list[Violation] = []
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(fn, tasks):
                out.extend(part)
    else:
        for task in tasks:
            out.extend(fn(task))
    return out


def verify_theorem(
    theorem_id: str,
    m,
    n,
    t=None,
    k=None,
    *,
    exhaustive: bool = True,
    samples: int = 1000,
    seed: int = 0,
    jobs: int = 1,
    shard_bits: int = 0,
    all_longest: bool = False,
    override: bool = False,
) -> list[Violation]:
    """Check one theorem on every graph in range (or on random samples).

    ``m``, ``n``, ``t``, ``k`` are ints or iterables of ints; combinations
    outside the theorem's parameter range are skipped.  In exhaustive mode
    each (m, n) space is split into ``2**shard_bits`` shards.
    """
    th = _make(theorem_id, all_longest)
    cases = _cases(th, m, n, t, k)
    if exhaustive:
        tasks = []
        for mm, nn, p in cases:
            if mm * nn > MAX_EXHAUSTIVE_MN and not override:
                raise TooLarge(f"m*n = {mm * nn} exceeds the exhaustive guard")
            bits = min(shard_bits, mm * nn)
            for idx in range(1 << bits):
                tasks.append((th.id, all_longest, mm, nn, p, (idx, bits), override))
        return _run(_exhaustive_shard, tasks, jobs)
    if not cases:
        return []
    chunks = max(1, jobs * 4) if jobs > 1 else 1
    size = math.ceil(samples / chunks)
    tasks = [
        (th.id, all_longest, cases, seed, lo, min(samples, lo + size))
        for lo in range(0, samples, size)
    ]
    return _run(_random_chunk, tasks, jobs)


def gyori_is_extremal_witness(m: int, n: int, t: int) -> bool:
    """The Gyori graph for k = m - t is C_2t-free with the formula edge count."""
    G = build_gyori_extremal(m, n, m - t)
    return (
        G.edge_count == turan_formula(m, n, t)
        and cycles.find_cycle_of_length(G, 2 * t) is None
    )

