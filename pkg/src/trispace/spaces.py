"""Cycle, cut and triangle spaces of a graph over GF(2), and the first Betti number.

All vectors index edges in the host graph's lexicographic order.  Dimensions:

* cycle space C: ``|E| - n + c``
* cut space C^perp: ``n - c``
* triangle space T (inside C) and its orthogonal complement T^perp
* ``betti1 = dim C - dim T``; zero exactly when the triangles span the cycle space.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal

from ._cutscan import MAX_VERTICES, scan_cuts
from .gf2 import BitVec, Gf2Basis
from .graph import Graph, TriangleSet, _bits, triangles

Kind = Literal["cycle", "cut", "triangle", "triangle-perp"]


@dataclass(frozen=True)
class EdgeVector:
    """Element of the edge space of ``host``; ``+`` is symmetric difference."""

    host: Graph
    bits: BitVec

    def __post_init__(self):
        if self.bits.m != self.host.m:
            raise ValueError("vector length does not match the host edge count")

    @classmethod
    def from_edge_ids(cls, host: Graph, ids: Iterable[int]) -> "EdgeVector":
        return cls(host, BitVec.from_indices(host.m, ids))

    @classmethod
    def from_pairs(cls, host: Graph, pairs: Iterable[tuple[int, int]]) -> "EdgeVector":
        return cls.from_edge_ids(host, (host.edge_index(u, v) for u, v in pairs))

    @classmethod
    def from_int(cls, host: Graph, mask: int) -> "EdgeVector":
        return cls(host, BitVec.from_int(host.m, mask))

    def __add__(self, other: "EdgeVector") -> "EdgeVector":
        if other.host is not self.host and other.host != self.host:
            raise ValueError("edge vectors over different hosts")
        return EdgeVector(self.host, self.bits ^ other.bits)

    def __len__(self) -> int:
        return self.bits.popcount()

    def __bool__(self) -> bool:
        return bool(self.bits)

    def edge_ids(self) -> list[int]:
        return self.bits.indices()

    def pairs(self) -> list[tuple[int, int]]:
        return [self.host.edges[i] for i in self.edge_ids()]

    def degree(self, v: int) -> int:
        """``d_F(v)``: edges of this set at ``v``."""
        return sum(1 for u, w in self.pairs() if v in (u, w))

    def __str__(self) -> str:
        return " ".join(f"{u}-{v}" for u, v in self.pairs())


@dataclass(frozen=True)
class SpaceBasis:
    host: Graph
    kind: Kind
    basis: Gf2Basis

    @property
    def dim(self) -> int:
        return self.basis.rank

    def vectors(self) -> list[EdgeVector]:
        return [EdgeVector(self.host, r) for r in self.basis.rows]

    def contains(self, v: EdgeVector | BitVec) -> bool:
        return self.basis.contains(v.bits if isinstance(v, EdgeVector) else v)

    __contains__ = contains


# -- helpers over int edge masks ------------------------------------------------------------


def _stars(g: Graph) -> list[int]:
    stars = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        stars[u] |= 1 << i
        stars[v] |= 1 << i
    return stars


def spanning_forest(g: Graph) -> tuple[list[int], list[int]]:
    """BFS forest: ``(parent, parent_edge)``, with ``-1`` at roots."""
    parent = [-1] * g.n
    pedge = [-1] * g.n
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in _bits(g.adj[x]):
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    pedge[y] = g.edge_index(x, y)
                    queue.append(y)
    return parent, pedge


def cycle_dim(g: Graph) -> int:
    return g.m - g.n + g.n_components()


def cut_dim(g: Graph) -> int:
    return g.n - g.n_components()


# -- the four spaces ------------------------------------------------------------------------


def cycle_space(g: Graph) -> SpaceBasis:
    """Fundamental cycles of a BFS spanning forest."""
    parent, pedge = spanning_forest(g)
    tree = {e for e in pedge if e >= 0}
    # root path masks, filled in BFS-compatible order
    path = [0] * g.n
    done = [p < 0 for p in parent]
    for v in range(g.n):
        chain = []
        while not done[v]:
            chain.append(v)
            v = parent[v]
        for w in reversed(chain):
            path[w] = path[parent[w]] | (1 << pedge[w])
            done[w] = True
    basis = Gf2Basis(g.m, capacity=max(1, g.m - len(tree)))
    for i, (u, v) in enumerate(g.edges):
        if i not in tree:
            basis.insert(BitVec.from_int(g.m, path[u] ^ path[v] | 1 << i))
    return SpaceBasis(g, "cycle", basis)


def cut_space(g: Graph) -> SpaceBasis:
    """Vertex stars, one vertex left out per component."""
    comp = g.components()
    stars = _stars(g)
    basis = Gf2Basis(g.m, capacity=max(1, g.n))
    for v in range(g.n):
        if comp[v] != v:
            basis.insert(BitVec.from_int(g.m, stars[v]))
    return SpaceBasis(g, "cut", basis)


def triangle_vectors(g: Graph, tri: TriangleSet | None = None) -> list[BitVec]:
    tri = triangles(g) if tri is None else tri
    return [BitVec.from_int(g.m, 1 << a | 1 << b | 1 << c) for a, b, c in tri.edge_triples()]


def triangle_space(g: Graph, tri: TriangleSet | None = None) -> SpaceBasis:
    """Span of the triangles, inserted in enumeration order; stops once it fills C."""
    tri = triangles(g) if tri is None else tri
    target = cycle_dim(g)
    basis = Gf2Basis(g.m, capacity=max(1, target))
    for a, b, c in tri.edge_triples():
        if basis.rank == target:
            break
        basis.insert(BitVec.from_int(g.m, 1 << a | 1 << b | 1 << c))
    return SpaceBasis(g, "triangle", basis)


def triangle_perp(g: Graph, tri: TriangleSet | None = None) -> SpaceBasis:
    """Edge sets meeting every triangle evenly."""
    return SpaceBasis(g, "triangle-perp", triangle_space(g, tri).basis.complement())


# -- fast rank of the triangle space --------------------------------------------------------


def triangle_rank(g: Graph, tri: TriangleSet | None = None) -> int:
    """``dim T`` without materialising a basis.

    Projecting onto the chords of a spanning forest is injective on the cycle
    space, so ``dim T`` is the rank of the projected triangles.  A projected
    triangle has at most three chord coordinates; relations with one or two live
    coordinates are absorbed by a union-find over chords (one-coordinate relations
    tie a class to a ground node), and only the residue with three live
    coordinates goes through ordinary elimination.
    """
    tri = triangles(g) if tri is None else tri
    target = cycle_dim(g)
    if target == 0 or not tri.triples:
        return 0
    _, pedge = spanning_forest(g)
    tree = set(pedge)
    chord = [-1] * g.m
    k = 0
    for i in range(g.m):
        if i not in tree:
            chord[i] = k
            k += 1
    ground = k
    parent = list(range(k + 1))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    rank = 0
    pending = []
    for a, b, c in tri.edge_triples():
        pending.append([chord[e] for e in (a, b, c) if chord[e] >= 0])

    progress = True
    while pending and progress and rank < target:
        progress = False
        deferred = []
        for vec in pending:
            live = set()
            for x in vec:
                r = find(x)
                if r != ground:
                    live ^= {r}
            if len(live) == 0:
                continue
            if len(live) == 1:
                parent[live.pop()] = ground
            elif len(live) == 2:
                x, y = live
                parent[x] = y
            else:
                deferred.append(list(live))
                continue
            rank += 1
            progress = True
            if rank == target:
                return rank
        pending = deferred

    # leftover: plain elimination on class representatives, pivot = top bit
    coord: dict[int, int] = {}
    pivots: dict[int, int] = {}
    for vec in pending:
        x = 0
        for c in vec:
            r = find(c)
            if r != ground:
                x ^= 1 << coord.setdefault(r, len(coord))
        while x:
            top = x.bit_length() - 1
            row = pivots.get(top)
            if row is None:
                pivots[top] = x
                rank += 1
                break
            x ^= row
        if rank == target:
            break
    return rank


def betti1(g: Graph, tri: TriangleSet | None = None) -> int:
    """First Z/2 Betti number of the clique complex: ``dim C - dim T``."""
    return cycle_dim(g) - triangle_rank(g, tri)


# -- witnesses and coset minimisation -------------------------------------------------------


def find_witness(g: Graph, tri: TriangleSet | None = None) -> EdgeVector | None:
    """Some edge set in T^perp but not a cut, or ``None`` when T = C."""
    tri = triangles(g) if tri is None else tri
    if betti1(g, tri) == 0:
        return None
    cuts = cut_space(g)
    for row in triangle_perp(g, tri).basis.rows:
        if not cuts.contains(row):
            return EdgeVector(g, row)
    raise AssertionError("betti1 > 0 but every T-perp basis row is a cut")


def coset_minimize(g: Graph, f: EdgeVector) -> EdgeVector:
    """Flip vertex stars while some vertex has more ``F``-edges than non-``F`` edges.

    Each flip lowers ``|F|`` by ``d_F(v) - d_{G-F}(v) > 0``, so this terminates at a
    member of ``F + C^perp`` with ``d_F(v) <= d_{G-F}(v)`` everywhere.  This is a
    local optimum, not necessarily the smallest coset member.
    """
    if f.host != g:
        raise ValueError("F does not live on G")
    stars = _stars(g)
    deg = [s.bit_count() for s in stars]
    x = int(f.bits)
    v = 0
    while v < g.n:
        df = (x & stars[v]).bit_count()
        if 2 * df > deg[v]:
            x ^= stars[v]
            v = 0
        else:
            v += 1
    return EdgeVector.from_int(g, x)


def coset_min_oracle(g: Graph, f: EdgeVector) -> EdgeVector:
    """Exact smallest member of ``F + C^perp`` by scanning every cut (``n <= 24``)."""
    if g.n > MAX_VERTICES:
        raise ValueError(f"coset oracle is exhaustive; n={g.n} exceeds {MAX_VERTICES}")
    if f.host != g:
        raise ValueError("F does not live on G")
    inside = set(f.edge_ids())
    _, side = scan_cuts(g.n, g.edges, [1 if i in inside else 0 for i in range(g.m)])
    x = int(f.bits)
    for i, (u, v) in enumerate(g.edges):
        if (side >> u ^ side >> v) & 1:
            x ^= 1 << i
    return EdgeVector.from_int(g, x)
