"""Witness search for the structural path, path-pair and fan lemmas.

Each search is exhaustive backtracking over simple paths (lowest index
first) and returns the first object meeting the lemma's conclusion.  If the
hypotheses hold and nothing is found, :class:`LemmaFalsified` is raised with
the instance attached.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigraph import (
    X,
    Y,
    BipartiteGraph,
    VertexRef,
    component_masks,
    cut_vertex_mask,
    is_2connected,
    is_connected,
    is_good_pair,
    iter_bits,
    min_pair_rho,
)
from .cycles import CycleWitness, circumference
from .errors import InvalidPath, LemmaFalsified, PreconditionViolated


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[VertexRef, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def origin(self) -> VertexRef:
        return self.vertices[0]

    @property
    def terminus(self) -> VertexRef:
        return self.vertices[-1]

    def validate(self, G: BipartiteGraph) -> None:
        vs = self.vertices
        if not vs:
            raise InvalidPath("empty path")
        if len(set(vs)) != len(vs):
            raise InvalidPath("path repeats a vertex")
        for v in vs:
            G.check_vertex(v)
        for u, v in zip(vs, vs[1:]):
            if not G.adjacent(u, v):
                raise InvalidPath(f"{u}{v} is not an edge")

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.vertices)


@dataclass(frozen=True)
class DppWitness:
    path1: PathWitness
    path2: PathWitness
    detached: bool

    @property
    def order(self) -> int:
        return self.path1.order + self.path2.order

    @property
    def termini(self) -> tuple[VertexRef, VertexRef]:
        return self.path1.terminus, self.path2.terminus

    def is_maximal(self, G: BipartiteGraph) -> bool:
        inside = G.mask_of(self.path1.vertices + self.path2.vertices)
        adj = G.adjacency
        return all(adj[G.gid(t)] & ~inside == 0 for t in self.termini)

    def validate(self, G: BipartiteGraph) -> None:
        self.path1.validate(G)
        self.path2.validate(G)
        if set(self.path1.vertices) & set(self.path2.vertices):
            raise InvalidPath("the two paths of a DPP share a vertex")
        t1, t2 = self.termini
        if self.detached != (t1.side != t2.side):
            raise InvalidPath("detached flag disagrees with the termini sides")
        if self.detached and self.is_maximal(G):
            # both terminus neighbourhoods lie inside D
            tx, ty = (t1, t2) if t1.side == X else (t2, t1)
            bound = G.degree(tx) + G.degree(ty) + (0 if G.adjacent(tx, ty) else 2)
            if self.order < bound:
                raise InvalidPath(f"maximal DPP of order {self.order} < {bound}")


@dataclass(frozen=True)
class FanWitness:
    center: VertexRef
    paths: tuple[PathWitness, ...]

    @property
    def edge_count(self) -> int:
        return sum(p.order - 1 for p in self.paths)

    def validate(self, G: BipartiteGraph, C: CycleWitness) -> None:
        if len(self.paths) < 2:
            raise InvalidPath("a fan needs at least two paths")
        on_cycle = set(C.vertices)
        seen = {self.center}
        for p in self.paths:
            p.validate(G)
            if p.origin != self.center or p.order < 2:
                raise InvalidPath("fan path does not leave the centre")
            body = set(p.vertices[:-1])
            if body & on_cycle or p.terminus not in on_cycle:
                raise InvalidPath("fan path must meet the cycle exactly at its end")
            rest = set(p.vertices[1:])
            if rest & seen:
                raise InvalidPath("fan paths must share only the centre")
            seen |= rest


def _as_path(G: BipartiteGraph, P) -> PathWitness:
    P = P if isinstance(P, PathWitness) else PathWitness(tuple(P))
    P.validate(G)
    return P


def _path_refs(G: BipartiteGraph, gids: list[int]) -> PathWitness:
    return PathWitness(tuple(G.ref(g) for g in gids))


def _walks(adj: tuple[int, ...], start: int, blocked: int):
    """Every simple path from ``start`` avoiding ``blocked`` (prefixes first).

    Yields (path, used-mask); the list is shared, so copy before keeping it.
    """
    path = [start]

    def rec(v: int, used: int):
        yield path, used
        for w in iter_bits(adj[v] & ~used):
            path.append(w)
            yield from rec(w, used | 1 << w)
            path.pop()

    yield from rec(start, blocked | 1 << start)


def is_maximal_path(G: BipartiteGraph, P) -> bool:
    P = _as_path(G, P)
    inside = G.mask_of(P.vertices)
    adj = G.adjacency
    return adj[G.gid(P.origin)] & ~inside == 0 and adj[G.gid(P.terminus)] & ~inside == 0


def extend_to_maximal(G: BipartiteGraph, P) -> PathWitness:
    """Grow ``P`` at its ends by lowest-index outside neighbours until maximal.

    The terminus end is grown first, then the origin end; ``P`` stays a
    subpath of the result.
    """
    P = _as_path(G, P)
    adj = G.adjacency
    seq = [G.gid(v) for v in P.vertices]
    used = G.mask_of(P.vertices)
    while True:
        out = adj[seq[-1]] & ~used
        if out:
            w = (out & -out).bit_length() - 1
            seq.append(w)
            used |= 1 << w
            continue
        out = adj[seq[0]] & ~used
        if out:
            w = (out & -out).bit_length() - 1
            seq.insert(0, w)
            used |= 1 << w
            continue
        return _path_refs(G, seq)


def maximal_path_with_terminus(G: BipartiteGraph, origin: VertexRef, min_deg_d: int) -> PathWitness:
    """A maximal ``origin``-path ending in X of order >= 2d (+1 from X).

    Needs G connected with every X-degree >= d >= 1, and ``|X| >= |Y|`` for a
    Y origin or ``|X| > |Y|`` for an X origin.
    """
    origin = G.check_vertex(origin)
    d = min_deg_d
    if d < 1:
        raise PreconditionViolated("d must be >= 1")
    if not is_connected(G):
        raise PreconditionViolated("graph is not connected")
    if any(r.bit_count() < d for r in G.rows):
        raise PreconditionViolated(f"some X-vertex has degree < {d}")
    if origin.side == Y and G.m < G.n:
        raise PreconditionViolated("a Y origin needs |X| >= |Y|")
    if origin.side == X and G.m <= G.n:
        raise PreconditionViolated("an X origin needs |X| > |Y|")
    need = 2 * d if origin.side == Y else 2 * d + 1
    adj, m = G.adjacency, G.m
    for path, used in _walks(adj, G.gid(origin), 0):
        end = path[-1]
        if end < m and len(path) >= need and adj[end] & ~used == 0:
            W = _path_refs(G, path)
            W.validate(G)
            return W
    raise LemmaFalsified("maximal-path-with-terminus", G, origin=origin, d=d)


def _rho_target(G: BipartiteGraph, rho: int | None) -> int:
    floor = min_pair_rho(G)
    if rho is None:
        return floor
    if rho > floor:
        raise PreconditionViolated(f"rho(x, y) >= {rho} fails: minimum is {floor}")
    return rho


def _detached_pair(G: BipartiteGraph, s1: int, s2: int, need: int):
    """First detached maximal {s1, s2}-DPP of order >= need, as two gid lists."""
    adj, m = G.adjacency, G.m
    for p1, used1 in _walks(adj, s1, 1 << s2):
        t1 = p1[-1]
        side1 = t1 < m
        for p2, used in _walks(adj, s2, used1 & ~(1 << s2)):
            t2 = p2[-1]
            if (t2 < m) == side1:
                continue
            if adj[t1] & ~used or adj[t2] & ~used:
                continue
            if len(p1) + len(p2) >= need:
                return list(p1), list(p2)
    return None


def detached_maximal_dpp(
    G: BipartiteGraph, x0: VertexRef, y0: VertexRef, rho: int | None = None
) -> DppWitness:
    """Detached maximal {x0, y0}-DPP of order >= rho + 1.

    G must be connected and balanced; ``rho`` defaults to the minimum of
    rho(x, y) over all cross pairs.
    """
    x0, y0 = G.check_vertex(x0), G.check_vertex(y0)
    if x0.side != X or y0.side != Y:
        raise PreconditionViolated("anchors must be an X-vertex and a Y-vertex")
    if not G.is_balanced or not is_connected(G):
        raise PreconditionViolated("graph must be connected and balanced")
    target = _rho_target(G, rho)
    found = _detached_pair(G, G.gid(x0), G.gid(y0), target + 1)
    if found is None:
        raise LemmaFalsified("detached-maximal-dpp", G, x0=x0, y0=y0, rho=target)
    W = DppWitness(_path_refs(G, found[0]), _path_refs(G, found[1]), True)
    W.validate(G)
    return W


def dpp_good_pair(
    G: BipartiteGraph, x0: VertexRef, x0p: VertexRef, rho: int | None = None
) -> DppWitness:
    """Detached maximal {x0, x0'}-DPP of order >= rho + 1 for a good pair in X."""
    x0, x0p = G.check_vertex(x0), G.check_vertex(x0p)
    if x0.side != X or x0p.side != X or x0 == x0p:
        raise PreconditionViolated("anchors must be two distinct X-vertices")
    if not G.is_balanced:
        raise PreconditionViolated("graph must be balanced")
    if not is_connected(G) or G.order < 3 or cut_vertex_mask(G) == 0:
        raise PreconditionViolated("graph must have connectivity exactly 1")
    if not is_good_pair(G, x0, x0p):
        raise PreconditionViolated(f"{{{x0}, {x0p}}} is not a good pair")
    target = _rho_target(G, rho)
    found = _detached_pair(G, G.gid(x0), G.gid(x0p), target + 1)
    if found is None:
        raise LemmaFalsified("dpp-good-pair", G, x0=x0, x0p=x0p, rho=target)
    W = DppWitness(_path_refs(G, found[0]), _path_refs(G, found[1]), True)
    W.validate(G)
    return W


def find_fan(G: BipartiteGraph, x: VertexRef, C: CycleWitness, d: int) -> FanWitness:
    """An (x, C)-fan with at least ``d`` edges.

    G must be 2-connected, C a longest cycle, and every vertex of the
    component of G - C holding ``x`` must have degree >= d.
    """
    x = G.check_vertex(x)
    if not is_2connected(G):
        raise PreconditionViolated("graph must be 2-connected")
    try:
        C.validate(G)
    except ValueError as exc:
        raise PreconditionViolated(f"bad cycle: {exc}") from exc
    if C.length != circumference(G):
        raise PreconditionViolated("C is not a longest cycle")
    on_c = G.mask_of(C.vertices)
    gx = G.gid(x)
    if on_c >> gx & 1:
        raise PreconditionViolated(f"{x} lies on C")
    H = next(c for c in component_masks(G, G.all_mask & ~on_c) if c >> gx & 1)
    adj = G.adjacency
    if any(adj[v].bit_count() < d for v in iter_bits(H)):
        raise PreconditionViolated(f"a vertex of the component of {x} has degree < {d}")

    # all x-paths through G - C that end on C, as (end, used-mask, gids)
    arms = []
    for path, used in _walks(adj, gx, on_c):
        body = used & ~on_c & ~(1 << gx)
        for end in iter_bits(adj[path[-1]] & on_c):
            arms.append((end, body, path + [end]))
    arms.sort(key=lambda a: (a[0], -len(a[2])))
    chosen: list[list[int]] = []

    def pick(start: int, used: int, edges: int) -> bool:
        if len(chosen) >= 2 and edges >= d:
            return True
        for idx in range(start, len(arms)):
            end, body, gids = arms[idx]
            if used & (body | 1 << end):
                continue
            chosen.append(gids)
            if pick(idx + 1, used | body | 1 << end, edges + len(gids) - 1):
                return True
            chosen.pop()
        return False

    if not pick(0, 0, 0):
        raise LemmaFalsified("fan", G, x=x, d=d)
    W = FanWitness(x, tuple(_path_refs(G, g) for g in chosen))
    W.validate(G, C)
    if W.edge_count < d:
        raise AssertionError("fan search returned too few edges")
    return W


def long_path_between(
    G: BipartiteGraph, x1: VertexRef, x2: VertexRef, rho: int | None = None
) -> PathWitness:
    """An (x1, x2)-path of order >= rho in a 2-connected balanced graph."""
    x1, x2 = G.check_vertex(x1), G.check_vertex(x2)
    if x1.side != X or x2.side != X or x1 == x2:
        raise PreconditionViolated("ends must be two distinct X-vertices")
    if not G.is_balanced or not is_2connected(G):
        raise PreconditionViolated("graph must be 2-connected and balanced")
    target = _rho_target(G, rho)
    adj = G.adjacency
    g1, g2 = G.gid(x1), G.gid(x2)
    for path, used in _walks(adj, g1, 1 << g2):
        if adj[path[-1]] >> g2 & 1 and len(path) + 1 >= target:
            W = _path_refs(G, path + [g2])
            W.validate(G)
            return W
    raise LemmaFalsified("long-path-between", G, x1=x1, x2=x2, rho=target)
