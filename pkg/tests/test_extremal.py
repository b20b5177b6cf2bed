from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from trispace import extremal as X
from trispace import graph as G
from trispace.graph import Graph


def hitting_bruteforce(g):
    tris = [1 << a | 1 << b | 1 << c for a, b, c in G.triangles(g).edge_triples()]
    for k in range(g.m + 1):
        for sub in combinations(range(g.m), k):
            mask = sum(1 << e for e in sub)
            if all(t & mask for t in tris):
                return k


def test_mantel():
    for n, t in [(4, 4), (5, 6), (6, 9)]:
        assert X.max_triangle_free(G.complete_graph(n))[0] == t
    assert all(X.max_triangle_free(G.complete_graph(n))[0] == n * n // 4 for n in range(3, 9))


def test_hitting_fixtures():
    assert X.min_triangle_hitting(G.complete_graph(3))[0] == 1
    assert X.min_triangle_hitting(G.complete_graph(4))[0] == 2
    assert X.min_triangle_hitting(G.cycle_graph(7)) == (0, frozenset())
    with pytest.raises(ValueError):
        X.min_triangle_hitting(G.complete_graph(10))


def test_bipartization_fixtures(k4):
    assert X.min_bipartization(k4)[0] == 2
    assert X.min_bipartization(G.cycle_graph(5))[0] == 1
    assert all(X.min_bipartization(G.cycle_graph(k))[0] == 0 for k in (4, 6, 8))
    with pytest.raises(ValueError):
        X.min_bipartization(G.path_graph(25))


@given(graphs(max_n=8, min_n=2))
def test_hitting_exact(g):
    k, cover = X.min_triangle_hitting(g)
    t, free = X.max_triangle_free(g)
    assert k == len(cover) == hitting_bruteforce(g)
    assert k + t == g.m
    assert not G.triangles(g.subgraph(free)).triples
    assert len(X.greedy_triangle_matching(g)) <= k


@given(graphs(max_n=9, min_n=2), st.data())
def test_bipartization_vs_bfs(g, data):
    f = data.draw(st.sets(st.integers(0, g.m - 1))) if g.m else set()
    count, cut = X.min_bipartization(g, f)
    assert (count == 0) == X.is_bipartite(g, f)
    assert count == sum(1 for i in f if not cut.crosses(*g.edges[i]))
    # deleting the uncut F-edges leaves a bipartite graph
    kept = {i for i in f if cut.crosses(*g.edges[i])}
    assert X.is_bipartite(g, kept)


def test_certificate_fixtures(k4):
    tri = G.complete_graph(3)
    c = X.fractional_certificate(tri, 1)
    assert c.total_weight == 1 and c.feasible
    c = X.fractional_certificate(k4, 2)
    assert len(c.good) == 4 and c.total_weight == 2 and c.feasible and c.max_load == 1
    c = X.fractional_certificate(k4, 1)
    assert c.good == () and c.total_weight == 0 and c.feasible
    with pytest.raises(ValueError):
        X.fractional_certificate(k4, 0)
    assert X.default_threshold(100, 0.1) == pytest.approx(1.9)


@given(graphs(max_n=8, min_n=3), st.integers(1, 6))
def test_certificate_sandwich(g, thr):
    cert = X.fractional_certificate(g, thr)
    loads = [0] * g.m
    for t in cert.good:
        for e in t:
            loads[e] += 1
    assert cert.feasible == all(Fraction(x, thr) <= 1 for x in loads)
    if cert.feasible:
        assert cert.total_weight <= X.min_triangle_hitting(g)[0]


def test_hypergraph_degrees():
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    h = X.TriangleHypergraph.from_graph(g)
    assert len(h.hyperedges) == 2
    assert sum(h.degree) == 3 * len(h.hyperedges)
    assert h.degree[g.edge_index(1, 2)] == 2
