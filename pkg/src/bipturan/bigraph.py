"""Bipartite graphs with bit-row adjacency.

A :class:`BipartiteGraph` has parts ``X = {0..m-1}`` and ``Y = {0..n-1}``;
``rows[i]`` is an ``int`` whose bit ``j`` is set when ``x_i y_j`` is an edge.
Graphs are immutable values, so every operation here is a pure function.

Vertices are addressed with :class:`VertexRef` (``side``, 0-based ``index``).
Internally a vertex set is a bitmask over ``m + n`` bits where X-vertex ``i``
is bit ``i`` and Y-vertex ``j`` is bit ``m + j``.

The on-disk format is plain text, 1-based::

    c optional comment
    p bip <m> <n>
    e <i> <j>
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, TextIO

from .errors import (
    DisconnectedInput,
    DuplicateEdge,
    GraphFormatError,
    IndexOutOfRange,
    NotConnectivityOne,
    OverlappingSets,
)

X = "X"
Y = "Y"


class VertexRef(NamedTuple):
    side: str
    index: int

    def __str__(self) -> str:
        return f"{self.side.lower()}{self.index}"


def xv(i: int) -> VertexRef:
    return VertexRef(X, i)


def yv(j: int) -> VertexRef:
    return VertexRef(Y, j)


def iter_bits(mask: int):
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BipartiteGraph:
    m: int
    n: int
    rows: tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("part sizes must be non-negative")
        rows = tuple(self.rows)
        if len(rows) != self.m:
            raise ValueError(f"expected {self.m} rows, got {len(rows)}")
        full = (1 << self.n) - 1
        for i, r in enumerate(rows):
            if r < 0 or r & ~full:
                raise IndexOutOfRange(f"row {i} references a Y-index >= n={self.n}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "edge_count", sum(r.bit_count() for r in rows))

    def __repr__(self) -> str:
        return f"BipartiteGraph(m={self.m}, n={self.n}, edges={self.edges()})"

    @cached_property
    def cols(self) -> tuple[int, ...]:
        """X-neighbourhood mask of every Y-vertex."""
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            for j in iter_bits(r):
                cols[j] |= 1 << i
        return tuple(cols)

    @property
    def order(self) -> int:
        return self.m + self.n

    @property
    def is_balanced(self) -> bool:
        return self.m == self.n

    @property
    def all_mask(self) -> int:
        return (1 << (self.m + self.n)) - 1

    @property
    def x_mask(self) -> int:
        return (1 << self.m) - 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self.rows) for j in iter_bits(r)]

    def vertices(self) -> list[VertexRef]:
        return [xv(i) for i in range(self.m)] + [yv(j) for j in range(self.n)]

    def check_vertex(self, v: VertexRef) -> VertexRef:
        side, index = v
        size = self.m if side == X else self.n if side == Y else None
        if size is None:
            raise ValueError(f"unknown side {side!r}")
        if not 0 <= index < size:
            raise IndexOutOfRange(f"{v} is not a vertex of a ({self.m},{self.n}) graph")
        return VertexRef(side, index)

    def degree(self, v: VertexRef) -> int:
        side, index = self.check_vertex(v)
        return (self.rows[index] if side == X else self.cols[index]).bit_count()

    def neighbors(self, v: VertexRef) -> list[VertexRef]:
        side, index = self.check_vertex(v)
        if side == X:
            return [yv(j) for j in iter_bits(self.rows[index])]
        return [xv(i) for i in iter_bits(self.cols[index])]

    def adjacent(self, u: VertexRef, v: VertexRef) -> bool:
        if u.side == v.side:
            return False
        if u.side == Y:
            u, v = v, u
        return self.has_edge(u.index, v.index)

    # -- global ids -------------------------------------------------------
    def gid(self, v: VertexRef) -> int:
        side, index = self.check_vertex(v)
        return index if side == X else self.m + index

    def ref(self, g: int) -> VertexRef:
        return xv(g) if g < self.m else yv(g - self.m)

    def mask_of(self, vertices: Iterable[VertexRef]) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self.gid(v)
        return mask

    def refs_of(self, mask: int) -> frozenset[VertexRef]:
        return frozenset(self.ref(g) for g in iter_bits(mask))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood of every vertex as a global-id mask."""
        m = self.m
        return tuple(r << m for r in self.rows) + self.cols

    def transpose(self) -> BipartiteGraph:
        """The same graph with the roles of X and Y exchanged."""
        return BipartiteGraph(self.n, self.m, self.cols)

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        rows = list(self.rows)
        for i, j in edges:
            rows[i] |= 1 << j
        return BipartiteGraph(self.m, self.n, tuple(rows))


def from_edge_list(m: int, n: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    if m < 1 or n < 1:
        raise ValueError("both parts must be non-empty")
    rows = [0] * m
    for i, j in edges:
        if not (0 <= i < m and 0 <= j < n):
            raise IndexOutOfRange(f"edge ({i}, {j}) outside a ({m},{n}) graph")
        bit = 1 << j
        if rows[i] & bit:
            raise DuplicateEdge(f"edge ({i}, {j}) given twice")
        rows[i] |= bit
    return BipartiteGraph(m, n, tuple(rows))


def complete(m: int, n: int) -> BipartiteGraph:
    return BipartiteGraph(m, n, ((1 << n) - 1,) * m)


def empty(m: int, n: int) -> BipartiteGraph:
    return BipartiteGraph(m, n, (0,) * m)


def _as_mask(G: BipartiteGraph, S) -> int:
    return S if isinstance(S, int) else G.mask_of(S)


def _remaining_edges(G: BipartiteGraph, mask: int) -> int:
    """Number of edges of G - mask."""
    ys_out = mask >> G.m
    return sum(
        (r & ~ys_out).bit_count() for i, r in enumerate(G.rows) if not mask >> i & 1
    )


def rho(G: BipartiteGraph, S) -> int:
    """Number of edges incident to at least one vertex of ``S``.

    ``S`` is an iterable of :class:`VertexRef` or a global-id mask.
    """
    return G.edge_count - _remaining_edges(G, _as_mask(G, S))


def pair_rho(G: BipartiteGraph, i: int, j: int) -> int:
    """rho({x_i, y_j}) = d(x_i) + d(y_j) - [x_i y_j in E]."""
    return G.rows[i].bit_count() + G.cols[j].bit_count() - (G.rows[i] >> j & 1)


def min_pair_rho(G: BipartiteGraph) -> int:
    """Minimum of rho(x, y) over all cross pairs (x, y) in X x Y."""
    return min(pair_rho(G, i, j) for i in range(G.m) for j in range(G.n))


def e_between(G: BipartiteGraph, S1, S2) -> int:
    """Number of edges with one end in ``S1`` and the other in ``S2``."""
    a, b = _as_mask(G, S1), _as_mask(G, S2)
    if a & b:
        raise OverlappingSets("e_between needs disjoint vertex sets")
    m = G.m
    ax, ay, bx, by = a & G.x_mask, a >> m, b & G.x_mask, b >> m
    total = 0
    for i in iter_bits(ax):
        total += (G.rows[i] & by).bit_count()
    for i in iter_bits(bx):
        total += (G.rows[i] & ay).bit_count()
    return total


def induced_edges(G: BipartiteGraph, S) -> int:
    """e(G[S])."""
    mask = _as_mask(G, S)
    ys = mask >> G.m
    return sum((G.rows[i] & ys).bit_count() for i in iter_bits(mask & G.x_mask))


def remove_vertices(G: BipartiteGraph, S) -> BipartiteGraph:
    """G - S, with the surviving vertices renumbered in ascending order.

    Either part may become empty.
    """
    mask = _as_mask(G, S)
    keep_x = [i for i in range(G.m) if not mask >> i & 1]
    keep_y = [j for j in range(G.n) if not mask >> (G.m + j) & 1]
    rows = []
    for i in keep_x:
        r = G.rows[i]
        rows.append(sum(1 << k for k, j in enumerate(keep_y) if r >> j & 1))
    return BipartiteGraph(len(keep_x), len(keep_y), tuple(rows))


def component_masks(G: BipartiteGraph, within: int | None = None) -> list[int]:
    """Connected components of G[within] as global-id masks, by lowest id."""
    adj = G.adjacency
    rest = G.all_mask if within is None else within
    comps = []
    while rest:
        frontier = rest & -rest
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for g in iter_bits(frontier):
                nxt |= adj[g]
            frontier = nxt & rest & ~comp
        comps.append(comp)
        rest &= ~comp
    return comps


def components(G: BipartiteGraph) -> list[frozenset[VertexRef]]:
    return [G.refs_of(c) for c in component_masks(G)]


def is_connected(G: BipartiteGraph) -> bool:
    return G.order > 0 and len(component_masks(G)) == 1


def _dfs_blocks(G: BipartiteGraph, within: int) -> tuple[list[int], int]:
    """Blocks (as masks) and cut-vertex mask of G[within].

    Iterative Hopcroft-Tarjan.  Isolated vertices form no block.
    """
    adj = G.adjacency
    disc = [-1] * G.order
    low = [0] * G.order
    blocks: list[int] = []
    cuts = 0
    counter = 0
    rest = within
    while rest:
        root = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        # frames: [vertex, parent, neighbours not yet scanned]
        stack = [[root, -1, adj[root] & within]]
        while stack:
            frame = stack[-1]
            v, parent, todo = frame
            descended = False
            while todo:
                w = (todo & -todo).bit_length() - 1
                todo &= todo - 1
                if disc[w] < 0:
                    frame[2] = todo
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append([w, v, adj[w] & within])
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if parent < 0:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cuts |= 1 << parent
                block = 0
                while True:
                    a, b = edge_stack.pop()
                    block |= 1 << a | 1 << b
                    if (a, b) == (parent, v):
                        break
                blocks.append(block)
        if root_children >= 2:
            cuts |= 1 << root
    return blocks, cuts


def block_masks(G: BipartiteGraph, within: int | None = None) -> list[int]:
    """Vertex masks of the blocks of G[within]; bridges are 2-vertex blocks."""
    return _dfs_blocks(G, G.all_mask if within is None else within)[0]


def cut_vertex_mask(G: BipartiteGraph) -> int:
    return _dfs_blocks(G, G.all_mask)[1]


def is_2connected(G: BipartiteGraph) -> bool:
    return G.order >= 3 and is_connected(G) and cut_vertex_mask(G) == 0


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[VertexRef], ...]
    cut_vertices: frozenset[VertexRef]
    end_block_flags: tuple[bool, ...]

    @property
    def end_blocks(self) -> list[frozenset[VertexRef]]:
        return [b for b, end in zip(self.blocks, self.end_block_flags) if end]


def block_decomposition(G: BipartiteGraph) -> BlockDecomposition:
    if not is_connected(G):
        raise DisconnectedInput("block decomposition needs a connected graph")
    blocks, cuts = _dfs_blocks(G, G.all_mask)
    if not blocks:  # single vertex
        blocks = [G.all_mask]
    blocks.sort(key=lambda b: (b & -b, b))
    flags = tuple((b & cuts).bit_count() == 1 for b in blocks)
    return BlockDecomposition(
        tuple(G.refs_of(b) for b in blocks), G.refs_of(cuts), flags
    )


def is_good_pair(G: BipartiteGraph, u: VertexRef, v: VertexRef) -> bool:
    """Some end-block has exactly one of ``u``, ``v`` as an inner vertex.

    An inner vertex of a block is one that is not a cut vertex of G.
    """
    if not is_connected(G):
        raise NotConnectivityOne("graph is disconnected")
    blocks, cuts = _dfs_blocks(G, G.all_mask)
    if not cuts:
        raise NotConnectivityOne("graph has no cut vertex")
    bu, bv = 1 << G.gid(u), 1 << G.gid(v)
    for b in blocks:
        if (b & cuts).bit_count() != 1:
            continue
        inner = b & ~cuts
        if bool(inner & bu) != bool(inner & bv):
            return True
    return False


# -- file format -----------------------------------------------------------

def format_graph(G: BipartiteGraph, comments: Iterable[str] = ()) -> str:
    out = io.StringIO()
    for c in comments:
        out.write(f"c {c}\n")
    out.write(f"p bip {G.m} {G.n}\n")
    for i, j in G.edges():
        out.write(f"e {i + 1} {j + 1}\n")
    return out.getvalue()


def parse_graph(text: str) -> BipartiteGraph:
    m = n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if m is not None:
                    raise GraphFormatError(f"line {lineno}: second header")
                if len(parts) != 4 or parts[1] != "bip":
                    raise GraphFormatError(f"line {lineno}: expected 'p bip <m> <n>'")
                m, n = int(parts[2]), int(parts[3])
                if m < 1 or n < 1:
                    raise GraphFormatError(f"line {lineno}: part sizes must be >= 1")
            elif parts[0] == "e":
                if m is None:
                    raise GraphFormatError(f"line {lineno}: edge before header")
                if len(parts) != 3:
                    raise GraphFormatError(f"line {lineno}: expected 'e <i> <j>'")
                i, j = int(parts[1]), int(parts[2])
                if not (1 <= i <= m and 1 <= j <= n):
                    raise IndexOutOfRange(f"line {lineno}: edge ({i}, {j}) out of range")
                edges.append((i - 1, j - 1))
            else:
                raise GraphFormatError(f"line {lineno}: unknown record {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError | IndexOutOfRange):
                raise
            raise GraphFormatError(f"line {lineno}: {exc}") from exc
    if m is None:
        raise GraphFormatError("missing 'p bip' header")
    return from_edge_list(m, n, edges)


def read_graph(source: str | TextIO) -> BipartiteGraph:
    if isinstance(source, str):
        with open(source) as fh:
            return parse_graph(fh.read())
    return parse_graph(source.read())


def write_graph(G: BipartiteGraph, target: str | TextIO, comments: Iterable[str] = ()) -> None:
    text = format_graph(G, comments)
    if isinstance(target, str):
        with open(target, "w", newline="\n") as fh:
            fh.write(text)
    else:
        target.write(text)
