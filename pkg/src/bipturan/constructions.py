"""Extremal graphs and closed-form edge thresholds.

Two families are built here:

* ``L(a, b, c)``: the densest graph with parts of sizes ``a`` (X) and ``b`` (Y)
  whose longest cycle has at most ``2c`` vertices;
* the Gyori graph ``K_{m-k-1,n}`` with a ``K_{1,k+1}`` hung on one of its
  ``n``-side vertices, which has no cycle of length ``2(m-k)``.

Identified vertices always get index 0 of their side; pendant leaves take the
highest indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bigraph import BipartiteGraph
from .errors import InvalidParams


@dataclass(frozen=True)
class ExtremalParamsL:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or self.c < 1:
            raise InvalidParams(f"L needs a, b, c >= 1, got {self}")


@dataclass(frozen=True)
class ExtremalParamsGyori:
    m: int
    n: int
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise InvalidParams("k must be non-negative")
        if not self.n >= self.m >= 2 * self.k + 2:
            raise InvalidParams(f"need n >= m >= 2k + 2, got {self}")


def _params_L(p, b=None, c=None) -> ExtremalParamsL:
    if isinstance(p, ExtremalParamsL):
        return p
    return ExtremalParamsL(p, b, c)


def l_case(p: ExtremalParamsL) -> int:
    """Which of the four shapes of L(a, b, c) applies.

    1. ``a <= c`` or ``b <= c``: complete ``K_{a,b}``.
    2. ``c < b <= min(a, 2c)``: ``K_{a,c}`` plus ``b - c`` pendant Y-leaves.
    3. ``c < a <= min(b, 2c)``: ``K_{c,b}`` plus ``a - c`` pendant X-leaves.
    4. otherwise (``2c < min(a, b)``): ``K_{c,b-c}`` and ``K_{a-c+1,c}``
       sharing one X-vertex.
    """
    a, b, c = p.a, p.b, p.c
    if a <= c or b <= c:
        return 1
    if b <= min(a, 2 * c):
        return 2
    if a <= min(b, 2 * c):
        return 3
    return 4


def build_L(p: ExtremalParamsL | int, b: int | None = None, c: int | None = None) -> BipartiteGraph:
    p = _params_L(p, b, c)
    a, b, c = p.a, p.b, p.c
    case = l_case(p)
    if case == 1:
        rows = [(1 << b) - 1] * a
    elif case == 2:
        # Y = c core vertices, then b - c leaves on x0
        rows = [(1 << c) - 1] * a
        rows[0] |= ((1 << (b - c)) - 1) << c
    elif case == 3:
        # X = c core vertices, then a - c leaves on y0
        rows = [(1 << b) - 1] * c + [1] * (a - c)
    else:
        # x0 .. x_{c-1} joined to y0 .. y_{b-c-1};
        # x0, x_c .. x_{a-1} joined to y_{b-c} .. y_{b-1}
        first = (1 << (b - c)) - 1
        second = ((1 << c) - 1) << (b - c)
        rows = [first] * c + [second] * (a - c)
        rows[0] |= second
    return BipartiteGraph(a, b, tuple(rows))


def edge_count_L(p: ExtremalParamsL | int, b: int | None = None, c: int | None = None) -> int:
    p = _params_L(p, b, c)
    a, b, c = p.a, p.b, p.c
    return {
        1: a * b,
        2: a * c + (b - c),
        3: b * c + (a - c),
        4: c * (b - c) + (a - c + 1) * c,
    }[l_case(p)]


def varrho(p: ExtremalParamsL | int, b: int | None = None, c: int | None = None) -> int:
    """e(L(a, b, c)) - c^2, the largest possible rho(G - C) for c <= b <= a."""
    p = _params_L(p, b, c)
    if not p.c <= p.b <= p.a:
        raise InvalidParams(f"varrho is only defined for c <= b <= a, got {p}")
    return edge_count_L(p) - p.c * p.c


def longest_cycle_outside_bound(a: int, b: int, c: int) -> dict[str, int]:
    """Upper bounds on rho(G - C) for a longest cycle C on 2c vertices.

    ``a >= b`` are the part sizes.  Keys are the applicable cases: ``"1"``
    when ``b <= 2c`` and ``"2"`` when ``b >= 2c`` (both at ``b == 2c``).
    """
    out = {}
    if b <= 2 * c:
        out["1"] = c * (a - 1 - c) + b
    if b >= 2 * c:
        out["2"] = c * (a + b + 1 - 3 * c)
    return out


def _gyori(m: int, n: int, k: int) -> BipartiteGraph:
    core = m - k - 1
    if core < 1 or k < 0 or n < 1:
        raise InvalidParams(f"Gyori graph needs m - k - 1 >= 1 and k >= 0, got {(m, n, k)}")
    # X = core vertices of K_{core,n}, then k + 1 leaves hung on y0
    rows = [(1 << n) - 1] * core + [1] * (k + 1)
    return BipartiteGraph(m, n, tuple(rows))


def build_gyori_extremal(p: ExtremalParamsGyori | int, n: int | None = None, k: int | None = None) -> BipartiteGraph:
    if not isinstance(p, ExtremalParamsGyori):
        p = ExtremalParamsGyori(p, n, k)
    return _gyori(p.m, p.n, p.k)


def gyori_lower_bound_graph(m: int, n: int, t: int) -> BipartiteGraph:
    """The Gyori graph with ``k = m - t`` outside the proven regime as well.

    Its blocks are ``K_{t-1,n}`` and pendant edges, so it never contains a
    cycle on ``2t`` vertices whenever ``1 <= t - 1`` and ``t <= m``.
    """
    return _gyori(m, n, m - t)


def gyori_edge_count(m: int, n: int, k: int) -> int:
    return (m - k - 1) * n + k + 1


def known_bounds(m: int, n: int, t: int) -> dict:
    """Threshold and bound table for cycle length ``2t`` in an (m, n) graph.

    X has size ``m`` and Y size ``n``.  Each entry carries the value and an
    ``applicable`` flag telling whether (m, n, t) lies in the range where the
    statement is proven; nothing is refused.
    """
    if min(m, n, t) < 2:
        raise InvalidParams("known_bounds needs m, n, t >= 2")
    small, big = min(m, n), max(m, n)
    k = m - t
    table: dict = {}

    # Jackson: more edges force a cycle of length >= 2t
    if small <= 2 * t - 2:
        jackson = (big - 1) * (t - 1) + small
    else:
        jackson = (small + big - 2 * t + 3) * (t - 1)
    table["jackson_long_cycle"] = {
        "value": jackson,
        "kind": "edges above this force a cycle of length >= 2t",
        "applicable": big >= small >= t >= 2,
    }
    table["exact_cycle_threshold"] = {
        "value": (t - 1) * (n - 1) + m,
        "kind": "edges above this force a cycle of length exactly 2t",
        "applicable": n >= m and t <= m <= 2 * t - 2,
    }
    table["consecutive_cycles_threshold"] = {
        "value": n * (m - k - 1) + k + 2,
        "kind": "edges at or above this force all even lengths 4..2m-2k, k = m - t",
        "applicable": k >= 0 and n >= m >= 2 * k + 2,
    }
    kb = n - t
    table["balanced_threshold"] = {
        "value": (n - kb - 1) * n + kb + 2,
        "kind": "balanced: edges at or above this force c(G) >= 2n-2k, k = n - t",
        "applicable": m == n and kb >= 0 and n >= 2 * kb + 2,
    }
    table["turan_formula"] = {
        "value": (t - 1) * n + m - t + 1,
        "kind": "ex(m, n, C_2t)",
        "applicable": n >= m >= t and 2 * t >= m + 2,
    }
    lo, hi = small, big
    if t % 2:
        nv = (2 * t - 3) * ((lo * hi) ** ((t + 1) / (2 * t)) + lo + hi)
    else:
        nv = (2 * t - 3) * (lo ** ((t + 2) / (2 * t)) * math.sqrt(hi) + lo + hi)
    table["naor_verstraete"] = {
        "value": nv,
        "kind": "upper bound on ex(m, n, C_2t), " + ("odd t" if t % 2 else "even t"),
        "applicable": t >= 2,
    }
    table["flags"] = {
        "t_ge_half_m_plus_1": 2 * t >= m + 2,
        "m_le_2t_minus_2": m <= 2 * t - 2,
        "n_ge_m_ge_t": n >= m >= t,
    }
    return table
