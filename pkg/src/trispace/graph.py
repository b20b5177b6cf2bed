"""Simple graphs on [n] with bit-row adjacency, random generation and triangle bookkeeping.

Vertices are 0-based.  Edges are kept as ``(u, v)`` with ``u < v`` in
lexicographic order, and the position of an edge in that list is its index in
every edge-space vector built elsewhere in the package.

Random graphs come from :func:`numpy.random.default_rng` (PCG64 seeded through
``SeedSequence``); a sampler consumes exactly one ``random()`` double per vertex
pair, pairs visited in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

Pair = tuple[int, int]


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph on ``range(n)``."""

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        pairs = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} outside [0, {n})")
            if u > v:
                u, v = v, u
            if (u, v) in pairs:
                raise ValueError(f"duplicate edge {(u, v)}")
            pairs.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges: tuple[Pair, ...] = tuple(sorted(pairs))
        self.adj: tuple[int, ...] = tuple(adj)
        self._index = {e: i for i, e in enumerate(self.edges)}

    @classmethod
    def _from_sorted(cls, n: int, edges: list[Pair]) -> "Graph":
        # trusted fast path: edges already lexicographic, unique, u < v
        g = object.__new__(cls)
        adj = [0] * n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        g.n = n
        g.edges = tuple(edges)
        g.adj = tuple(adj)
        g._index = {e: i for i, e in enumerate(g.edges)}
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adj[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self._index[(u, v)]
        except KeyError:
            raise KeyError(f"{(u, v)} is not an edge") from None

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def components(self) -> list[int]:
        """Component label (smallest vertex of the component) for every vertex."""
        label = [-1] * self.n
        for s in range(self.n):
            if label[s] >= 0:
                continue
            seen = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~seen
                seen |= nxt
            for v in _bits(seen):
                label[v] = s
        return label

    def n_components(self) -> int:
        return len(set(self.components()))

    def edge_set(self, pairs: Iterable[Sequence[int]]) -> frozenset[int]:
        """Edge indices of ``pairs``; raises ``KeyError`` for a non-edge."""
        return frozenset(self.edge_index(int(u), int(v)) for u, v in pairs)

    def subgraph(self, edge_ids: Iterable[int]) -> "Graph":
        return Graph._from_sorted(self.n, [self.edges[i] for i in sorted(set(edge_ids))])

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        if self.edges:
            e = np.asarray(self.edges)
            a[e[:, 0], e[:, 1]] = 1
            a[e[:, 1], e[:, 0]] = 1
        return a


# -- constructors ---------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph._from_sorted(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(k: int, n: int | None = None) -> Graph:
    n = k if n is None else n
    return Graph(n, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def star_graph(n: int, center: int = 0) -> Graph:
    return Graph(n, [(center, v) for v in range(n) if v != center])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph(off, edges)


# -- random graphs --------------------------------------------------------------------------


def _pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(n, 1)


def _graph_from_mask(n: int, rows: np.ndarray, cols: np.ndarray, keep: np.ndarray) -> Graph:
    return Graph._from_sorted(n, list(zip(rows[keep].tolist(), cols[keep].tolist())))


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with one uniform draw per pair; a fixed ``(n, seed)`` couples all ``p``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    rows, cols = _pairs(n)
    draws = np.random.default_rng(seed).random(rows.size)
    return _graph_from_mask(n, rows, cols, draws < p)


def top_up_probability(p: float, theta: float) -> float:
    """Per-pair probability for the second round so that the union is G(n, p)."""
    return (1.0 - theta) * p / (1.0 - theta * p)


def sample_two_round(n: int, p: float, theta: float, seed: int) -> tuple[Graph, Graph]:
    """Two-round exposure: ``G0 ~ G(n, theta*p)``, then ``G1`` on the complement of ``G0``.

    The first ``C(n,2)`` draws of the stream decide ``G0`` and the next ``C(n,2)``
    decide ``G1``; ``G0`` and ``G1`` are edge-disjoint and their union is G(n, p).
    """
    if not 0.0 < theta < 1.0:
        raise ValueError(f"theta={theta} must lie strictly between 0 and 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    if n < 1:
        raise ValueError("n must be at least 1")
    rows, cols = _pairs(n)
    rng = np.random.default_rng(seed)
    first = rng.random(rows.size) < theta * p
    second = (rng.random(rows.size) < top_up_probability(p, theta)) & ~first
    return _graph_from_mask(n, rows, cols, first), _graph_from_mask(n, rows, cols, second)


def union(g: Graph, h: Graph) -> Graph:
    if g.n != h.n:
        raise ValueError("graphs live on different vertex sets")
    return Graph._from_sorted(g.n, sorted(set(g.edges) | set(h.edges)))


# -- triangles and local counts -------------------------------------------------------------


@dataclass(frozen=True)
class TriangleSet:
    """Triangles ``(x, y, z)``, ``x < y < z``, of a host graph, with per-edge counts."""

    graph: Graph
    triples: tuple[tuple[int, int, int], ...]
    edge_counts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.triples)

    def edge_triples(self) -> list[tuple[int, int, int]]:
        """Each triangle as the indices of its edges ``(xy, xz, yz)``."""
        ix = self.graph.edge_index
        return [(ix(x, y), ix(x, z), ix(y, z)) for x, y, z in self.triples]


def triangles(g: Graph) -> TriangleSet:
    adj = g.adj
    out = []
    for u, v in g.edges:
        common = (adj[u] & adj[v]) >> (v + 1)
        for w in _bits(common):
            out.append((u, v, v + 1 + w))
    counts = tuple((adj[u] & adj[v]).bit_count() for u, v in g.edges)
    return TriangleSet(g, tuple(out), counts)


def every_edge_in_triangle(g: Graph) -> bool:
    adj = g.adj
    return all(adj[u] & adj[v] for u, v in g.edges)


def codegree(g: Graph, x: int, y: int) -> int:
    if x == y:
        raise ValueError("codegree needs two distinct vertices")
    return (g.adj[x] & g.adj[y]).bit_count()


def zeta(g: Graph, ys: Iterable[int], zs: Iterable[int]) -> int:
    """Ordered pairs ``(y, z)`` in ``Y x Z`` with ``yz`` an edge."""
    zmask = _mask(zs)
    return sum((g.adj[y] & zmask).bit_count() for y in set(ys))


# -- cuts -----------------------------------------------------------------------------------


@dataclass(frozen=True)
class CutSpec:
    """A side ``W`` of a vertex bipartition, as a bit row over ``[n]``."""

    n: int
    side: int

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "CutSpec":
        side = _mask(vertices)
        if side >> n:
            raise ValueError("cut side has vertices outside [n]")
        return cls(n, side)

    def vertices(self) -> list[int]:
        return list(_bits(self.side))

    def complement(self) -> "CutSpec":
        return CutSpec(self.n, ((1 << self.n) - 1) & ~self.side)

    def crosses(self, u: int, v: int) -> bool:
        return bool((self.side >> u ^ self.side >> v) & 1)


def cut_edges(g: Graph, spec: CutSpec) -> frozenset[int]:
    """Indices of the edges of ``g`` with exactly one end in ``spec.side``."""
    if spec.n != g.n:
        raise ValueError("cut and graph disagree on n")
    return frozenset(i for i, (u, v) in enumerate(g.edges) if spec.crosses(u, v))


def cut_between(g: Graph, s: Iterable[int], t: Iterable[int]) -> int:
    """``|nabla(S, T)|`` for disjoint ``S`` and ``T``."""
    s, t = set(s), set(t)
    if s & t:
        raise ValueError("S and T must be disjoint")
    return zeta(g, s, t)


# -- edge sets over K_n ---------------------------------------------------------------------


def _adj_of(n: int, edge_ids: Iterable[int], g: Graph) -> list[int]:
    adj = [0] * n
    for i in edge_ids:
        u, v = g.edges[i]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _check_subset(edge_ids: Iterable[int], g: Graph, what: str) -> frozenset[int]:
    ids = frozenset(edge_ids)
    if any(not 0 <= i < g.m for i in ids):
        raise ValueError(f"{what} is not a subset of the host edge set")
    return ids


def b_set(k: Iterable[int], h: Graph) -> list[Pair]:
    """Pairs of K_n outside ``h`` that close no triangle with two edges of ``k``."""
    kadj = _adj_of(h.n, _check_subset(k, h, "K"), h)
    return [
        (x, y)
        for x in range(h.n)
        for y in range(x + 1, h.n)
        if not h.adj[x] >> y & 1 and not kadj[x] & kadj[y]
    ]


def j_set(f: Iterable[int], g: Graph) -> list[Pair]:
    """Pairs of K_n with a common ``F``-neighbour."""
    fadj = _adj_of(g.n, _check_subset(f, g, "F"), g)
    return [(x, y) for x in range(g.n) for y in range(x + 1, g.n) if fadj[x] & fadj[y]]


def a_set(g0: Graph) -> list[Pair]:
    """Pairs outside ``g0`` with a common ``g0``-neighbour."""
    adj = g0.adj
    return [
        (x, y)
        for x in range(g0.n)
        for y in range(x + 1, g0.n)
        if not adj[x] >> y & 1 and adj[x] & adj[y]
    ]


def j0_set(g0: Graph) -> list[Pair]:
    """``K_n`` minus ``g0`` minus ``A(g0)``: pairs outside ``g0`` with no common neighbour."""
    adj = g0.adj
    return [
        (x, y)
        for x in range(g0.n)
        for y in range(x + 1, g0.n)
        if not adj[x] >> y & 1 and not adj[x] & adj[y]
    ]


def coda_b_set(f0: Iterable[int], g0: Graph) -> list[Pair]:
    """Pairs ``xy`` of ``A(g0)`` where every common neighbour ``z`` has exactly one of ``xz, yz`` in ``F0``."""
    fadj = _adj_of(g0.n, _check_subset(f0, g0, "F0"), g0)
    out = []
    for x, y in a_set(g0):
        common = g0.adj[x] & g0.adj[y]
        # z is fine iff exactly one of xz, yz in F0
        if common & ~(fadj[x] ^ fadj[y]) == 0:
            out.append((x, y))
    return out


# -- text serialization ---------------------------------------------------------------------


def dumps(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Graph:
    """Parse ``"n m"`` then ``m`` lines ``"u v"`` (0-based, ``u < v``, lexicographic)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError("missing 'n m' header")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
    except ValueError:
        raise ValueError("header must be two integers") from None
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"header promises {m} edges, found {len(body)}")
    edges: list[Pair] = []
    for k, toks in enumerate(body, start=2):
        if len(toks) != 2:
            raise ValueError(f"line {k}: expected 'u v'")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ValueError(f"line {k}: non-integer vertex") from None
        if not 0 <= u < v < n:
            raise ValueError(f"line {k}: need 0 <= u < v < n, got {u} {v}")
        if edges and (u, v) <= edges[-1]:
            raise ValueError(f"line {k}: edges not strictly lexicographic")
        edges.append((u, v))
    return Graph._from_sorted(n, edges)


def read_graph(path) -> Graph:
    with open(path) as fh:
        return loads(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(g))
