"""Exact even-cycle computations.

Everything here is exhaustive backtracking over bit masks, split along the
block structure (every cycle lives inside one block).  Neighbours are tried in
ascending index order, so the witness returned for a given graph never changes
between runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bigraph import (
    X,
    BipartiteGraph,
    VertexRef,
    block_masks,
    iter_bits,
    xv,
    yv,
)
from .errors import Acyclic, BadLength, NotBalanced, XLargerThanY


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[VertexRef, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self, G: BipartiteGraph) -> None:
        vs = self.vertices
        if len(vs) < 4 or len(vs) % 2:
            raise ValueError(f"cycle length {len(vs)} is not an even number >= 4")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle repeats a vertex")
        for k, v in enumerate(vs):
            G.check_vertex(v)
            w = vs[(k + 1) % len(vs)]
            if v.side == w.side:
                raise ValueError(f"{v} and {w} are on the same side")
            if not G.adjacent(v, w):
                raise ValueError(f"{v}{w} is not an edge")

    def edges(self) -> list[tuple[int, int]]:
        """The cycle's edges as (x-index, y-index) pairs."""
        out = []
        for k, v in enumerate(self.vertices):
            w = self.vertices[(k + 1) % len(self.vertices)]
            out.append((v.index, w.index) if v.side == X else (w.index, v.index))
        return out


@dataclass(frozen=True)
class SpectrumReport:
    girth: int | None
    circumference: int
    present_lengths: frozenset[int]


@lru_cache(maxsize=8192)
def cyclic_blocks(G: BipartiteGraph) -> tuple[tuple[int, int], ...]:
    """(X-mask, Y-mask) of every block that contains a cycle."""
    out = []
    xm = G.x_mask
    for b in block_masks(G):
        if b.bit_count() >= 4:
            out.append((b & xm, b >> G.m))
    return tuple(out)


def _cycle_in(G: BipartiteGraph, s: int, allow_x: int, allow_y: int):
    """A cycle with ``s`` X-vertices inside the given vertex sets, or None.

    The cycle is returned as the alternating index list
    ``[x0, y0, x1, y1, ...]`` with x0 its smallest X-vertex.
    """
    rows, cols = G.rows, G.cols
    if allow_x.bit_count() < s or allow_y.bit_count() < s:
        return None
    path: list[int] = []

    def extend(x: int, depth: int, free_x: int, free_y: int, x0: int) -> bool:
        # depth = number of X-vertices on the path, x the last one
        closers = rows[x0] & free_y
        if not closers:
            return False
        if depth == s:
            last = rows[x] & closers
            if last:
                path.append((last & -last).bit_length() - 1)
                return True
            return False
        if free_x.bit_count() < s - depth:
            return False
        ys = rows[x] & free_y
        if closers & (closers - 1) == 0:
            # stepping on the only closer would leave no way back to x0
            ys &= ~closers
        for y in iter_bits(ys):
            fy = free_y & ~(1 << y)
            path.append(y)
            for nx in iter_bits(cols[y] & free_x):
                path.append(nx)
                if extend(nx, depth + 1, free_x & ~(1 << nx), fy, x0):
                    return True
                path.pop()
            path.pop()
        return False

    rest_x = allow_x
    while rest_x.bit_count() >= s:
        x0 = (rest_x & -rest_x).bit_length() - 1
        rest_x &= ~(1 << x0)
        if (rows[x0] & allow_y).bit_count() >= 2:
            path.clear()
            path.append(x0)
            if extend(x0, 1, rest_x, allow_y, x0):
                return path
    return None


def _to_witness(G: BipartiteGraph, seq: list[int]) -> CycleWitness:
    return CycleWitness(
        tuple(xv(v) if k % 2 == 0 else yv(v) for k, v in enumerate(seq))
    )


def _check_length(G: BipartiteGraph, L: int) -> None:
    if L % 2 or L < 4 or L > 2 * min(G.m, G.n):
        raise BadLength(f"no cycle length {L} is possible in a ({G.m},{G.n}) bipartite graph")


def find_cycle_of_length(G: BipartiteGraph, L: int) -> CycleWitness | None:
    """A cycle on exactly ``L`` vertices, or None when there is none."""
    _check_length(G, L)
    s = L // 2
    for bx, by in cyclic_blocks(G):
        seq = _cycle_in(G, s, bx, by)
        if seq is not None:
            return _to_witness(G, seq)
    return None


def has_cycle_of_length(G: BipartiteGraph, L: int) -> bool:
    return find_cycle_of_length(G, L) is not None


def longest_cycle(G: BipartiteGraph) -> CycleWitness | None:
    best = None
    best_s = 1
    blocks = sorted(
        cyclic_blocks(G), key=lambda b: -min(b[0].bit_count(), b[1].bit_count())
    )
    for bx, by in blocks:
        top = min(bx.bit_count(), by.bit_count())
        for s in range(top, best_s, -1):
            seq = _cycle_in(G, s, bx, by)
            if seq is not None:
                best, best_s = seq, s
                break
    return None if best is None else _to_witness(G, best)


def circumference(G: BipartiteGraph) -> int:
    """Length of a longest cycle, 0 for forests."""
    c = longest_cycle(G)
    return 0 if c is None else c.length


def even_spectrum(G: BipartiteGraph) -> SpectrumReport:
    blocks = cyclic_blocks(G)
    present = set()
    for bx, by in blocks:
        top = min(bx.bit_count(), by.bit_count())
        for s in range(2, top + 1):
            if 2 * s not in present and _cycle_in(G, s, bx, by) is not None:
                present.add(2 * s)
    return SpectrumReport(
        min(present) if present else None,
        max(present) if present else 0,
        frozenset(present),
    )


def is_bipancyclic(G: BipartiteGraph) -> bool:
    if not G.is_balanced:
        raise NotBalanced("bipancyclicity is defined for balanced graphs")
    if G.m < 2:
        return False
    for L in range(2 * G.m, 2, -2):
        if find_cycle_of_length(G, L) is None:
            return False
    return True


def is_weakly_bipancyclic(G: BipartiteGraph) -> bool:
    spec = even_spectrum(G)
    if spec.girth is None:
        raise Acyclic("graph has no cycle")
    return len(spec.present_lengths) == (spec.circumference - spec.girth) // 2 + 1


def is_weakly_bipancyclic_from4(G: BipartiteGraph) -> bool:
    """Every even length 4, 6, ..., c(G) occurs."""
    return is_weakly_bipancyclic(G) and even_spectrum(G).girth == 4


def is_hamiltonian(G: BipartiteGraph) -> bool:
    if not G.is_balanced:
        raise NotBalanced("hamiltonicity test expects a balanced graph")
    return G.m >= 2 and find_cycle_of_length(G, 2 * G.m) is not None


def hamiltonian_path(G: BipartiteGraph, x: int, y: int) -> list[VertexRef] | None:
    """A Hamiltonian path from X-vertex ``x`` to Y-vertex ``y`` (balanced G)."""
    rows, cols, m = G.rows, G.cols, G.m
    full_x, full_y = G.x_mask, (1 << G.n) - 1
    path = [x]

    def extend(cur: int, free_x: int, free_y: int) -> bool:
        # cur is an X-vertex; next is a Y-vertex
        if not free_x:
            return bool(rows[cur] >> y & 1) and free_y == 1 << y
        for ny in iter_bits(rows[cur] & free_y & ~(1 << y)):
            path.append(ny)
            for nx in iter_bits(cols[ny] & free_x):
                path.append(nx)
                if extend(nx, free_x & ~(1 << nx), free_y & ~(1 << ny)):
                    return True
                path.pop()
            path.pop()
        return False

    if m == 1:
        ok = bool(rows[x] >> y & 1)
    else:
        ok = extend(x, full_x & ~(1 << x), full_y)
    if not ok:
        return None
    if m > 1:
        path.append(y)
    else:
        path = [x, y]
    return [xv(v) if k % 2 == 0 else yv(v) for k, v in enumerate(path)]


def is_hamilton_biconnected(G: BipartiteGraph) -> bool:
    if not G.is_balanced:
        raise NotBalanced("Hamilton-biconnectedness expects a balanced graph")
    return all(
        hamiltonian_path(G, x, y) is not None for x in range(G.m) for y in range(G.n)
    )


def cycle_through_X(G: BipartiteGraph) -> CycleWitness | None:
    """A cycle containing every X-vertex, or None.

    Such a cycle has exactly ``m`` X-vertices, hence length ``2m``.
    """
    if G.m > G.n:
        raise XLargerThanY("cycle_through_X expects m <= n")
    if G.m < 2:
        return None
    return find_cycle_of_length(G, 2 * G.m)


def iter_cycles_of_length(G: BipartiteGraph, L: int):
    """Every cycle on exactly ``L`` vertices, each once.

    A cycle is reported starting at its smallest X-vertex, in the direction
    whose first Y-vertex is smaller than its last.
    """
    _check_length(G, L)
    s = L // 2
    rows, cols = G.rows, G.cols
    for bx, by in cyclic_blocks(G):
        rest_x = bx
        while rest_x:
            x0 = (rest_x & -rest_x).bit_length() - 1
            rest_x &= ~(1 << x0)
            path = [x0]

            def extend(x, depth, free_x, free_y):
                if depth == s:
                    for y in iter_bits(rows[x] & rows[x0] & free_y):
                        if y > path[1]:
                            yield path + [y]
                    return
                for y in iter_bits(rows[x] & free_y):
                    path.append(y)
                    for nx in iter_bits(cols[y] & free_x):
                        path.append(nx)
                        yield from extend(nx, depth + 1, free_x & ~(1 << nx), free_y & ~(1 << y))
                        path.pop()
                    path.pop()

            for seq in extend(x0, 1, rest_x, by):
                yield _to_witness(G, seq)
