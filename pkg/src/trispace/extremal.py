"""Exact small-instance oracles: triangle-free subgraphs, bipartization, triangle covers.

Everything here is exhaustive or branch-and-bound and refuses inputs above its
budget instead of returning an approximate answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ._cutscan import MAX_VERTICES, scan_cuts
from .graph import CutSpec, Graph, triangles

MAX_EDGES = 40


@dataclass(frozen=True)
class TriangleHypergraph:
    """Vertices are edge indices of a host graph; hyperedges are its triangles."""

    graph: Graph
    hyperedges: tuple[tuple[int, int, int], ...]
    degree: tuple[int, ...]

    @classmethod
    def from_graph(cls, g: Graph) -> "TriangleHypergraph":
        tri = triangles(g)
        return cls(g, tuple(tri.edge_triples()), tri.edge_counts)

    def masks(self) -> list[int]:
        return [1 << a | 1 << b | 1 << c for a, b, c in self.hyperedges]


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _packing(masks: Iterable[int]) -> int:
    used = 0
    count = 0
    for t in masks:
        if t and not t & used:
            used |= t
            count += 1
    return count


def greedy_triangle_matching(g: Graph) -> list[tuple[int, int, int]]:
    """Edge-disjoint triangles picked greedily in enumeration order."""
    used = 0
    out = []
    for a, b, c in triangles(g).edge_triples():
        t = 1 << a | 1 << b | 1 << c
        if not t & used:
            used |= t
            out.append((a, b, c))
    return out


def _check_budget(g: Graph) -> None:
    if g.m > MAX_EDGES:
        raise ValueError(f"exact solver budget is {MAX_EDGES} edges, graph has {g.m}")


def _best_edge(masks: list[int], m: int) -> int:
    counts = [0] * m
    for t in masks:
        for e in _bits(t):
            counts[e] += 1
    return max(range(m), key=counts.__getitem__)


def min_triangle_hitting(g: Graph) -> tuple[int, frozenset[int]]:
    """Smallest edge set meeting every triangle of ``g`` (at most 40 edges)."""
    _check_budget(g)
    tris = TriangleHypergraph.from_graph(g).masks()
    m = g.m

    # greedy cover as the starting incumbent
    cover, live = 0, list(tris)
    while live:
        e = _best_edge(live, m)
        cover |= 1 << e
        live = [t for t in live if not t >> e & 1]
    best = [cover.bit_count(), cover]

    def search(live: list[int], chosen: int, banned: int) -> None:
        if not live:
            if chosen.bit_count() < best[0]:
                best[0], best[1] = chosen.bit_count(), chosen
            return
        allowed = [t & ~banned for t in live]
        if not all(allowed):
            return
        # edge-disjoint live triangles each need their own edge
        if chosen.bit_count() + _packing(allowed) >= best[0]:
            return
        e = _best_edge(allowed, m)
        search([t for t in live if not t >> e & 1], chosen | 1 << e, banned)
        search(live, chosen, banned | 1 << e)

    search(tris, 0, 0)
    return best[0], frozenset(_bits(best[1]))


def max_triangle_free(g: Graph) -> tuple[int, frozenset[int]]:
    """``t(G)``: largest triangle-free edge subset, as the complement of a minimum cover."""
    k, cover = min_triangle_hitting(g)
    return g.m - k, frozenset(range(g.m)) - cover


def min_bipartization(g: Graph, f: Iterable[int] | None = None) -> tuple[int, CutSpec]:
    """``min over cuts of |F \\ cut|`` for ``F`` a set of edge indices (default: all).

    Vertex 0 stays outside the cut side, which loses nothing since a cut and its
    complement are the same edge set.
    """
    if g.n > MAX_VERTICES:
        raise ValueError(f"exhaustive bipartization limited to n <= {MAX_VERTICES}")
    ids = range(g.m) if f is None else sorted(set(f))
    if any(not 0 <= i < g.m for i in ids):
        raise ValueError("F is not a subset of the host edge set")
    pairs = [g.edges[i] for i in ids]
    count, side = scan_cuts(g.n, pairs, [1] * len(pairs))
    return count, CutSpec(g.n, side)


def is_bipartite(g: Graph, f: Iterable[int] | None = None) -> bool:
    """Two-colouring check by BFS, independent of the cut scan."""
    ids = range(g.m) if f is None else set(f)
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for i in ids:
        u, v = g.edges[i]
        adj[u].append(v)
        adj[v].append(u)
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True


@dataclass(frozen=True)
class Certificate:
    """Uniform weight ``1/threshold`` on every good triangle."""

    threshold: Fraction
    weight: Fraction
    good: tuple[tuple[int, int, int], ...]
    total_weight: Fraction
    max_load: Fraction
    feasible: bool


def default_threshold(n: int, q: float) -> float:
    """Triangle-degree cutoff ``1.9 n q^2`` used for the asymptotic argument."""
    return 1.9 * n * q * q


def fractional_certificate(g: Graph, threshold: float | Fraction) -> Certificate:
    """Fractional triangle matching from the good triangles of ``g``.

    A triangle is good when each of its edges lies in at most ``threshold``
    triangles of ``g``.  Loads are exact rationals; a feasible certificate's total
    weight is a lower bound for the fractional matching number and hence for the
    minimum triangle cover.
    """
    thr = Fraction(threshold)
    if thr <= 0:
        raise ValueError("threshold must be positive")
    hyper = TriangleHypergraph.from_graph(g)
    good = tuple(t for t in hyper.hyperedges if all(hyper.degree[e] <= thr for e in t))
    w = 1 / thr
    load = [0] * g.m
    for t in good:
        for e in t:
            load[e] += 1
    max_load = max(load, default=0) * w
    return Certificate(
        threshold=thr,
        weight=w,
        good=good,
        total_weight=len(good) * w,
        max_load=max_load,
        feasible=max_load <= 1,
    )
