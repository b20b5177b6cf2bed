"""Self-check suites run by ``trispace verify <suite>``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import bounds, extremal, graph, spaces
from .experiments import SweepConfig, run_sweep
from .gf2 import BitVec


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def random_suite_graphs(count: int = 200, seed: int = 2024, n_range=(10, 40)) -> list[graph.Graph]:
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(*n_range)
        p = rng.choice([0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9])
        out.append(graph.sample_gnp(n, p, rng.getrandbits(63)))
    return out


def space_checks(g: graph.Graph) -> dict[str, bool]:
    """Exact dimension and containment identities for one graph."""
    c = g.n_components()
    tri = graph.triangles(g)
    cyc = spaces.cycle_space(g)
    cut = spaces.cut_space(g)
    ts = spaces.triangle_space(g, tri)
    tp = spaces.SpaceBasis(g, "triangle-perp", ts.basis.complement())
    cut_rows = cut.basis.rows
    cyc_rows = cyc.basis.rows
    if cut_rows and cyc_rows:
        a = np.array([r.to_bools() for r in cut_rows], dtype=np.int64)
        b = np.array([r.to_bools() for r in cyc_rows], dtype=np.int64)
        orth = not ((a @ b.T) % 2).any()
    else:
        orth = True
    beta = spaces.betti1(g, tri)
    w = spaces.find_witness(g, tri)
    if w is None:
        witness_ok = beta == 0
    else:
        witness_ok = (
            beta > 0
            and all(w.bits.dot(v) == 0 for v in spaces.triangle_vectors(g, tri))
            and not cut.contains(w)
        )
    return {
        "dim_cycle": cyc.dim == g.m - g.n + c,
        "dim_cut": cut.dim == g.n - c,
        "dim_t_plus_perp": ts.dim + tp.dim == g.m,
        "cut_orth_cycle": orth,
        "t_in_c": all(cyc.contains(v) for v in spaces.triangle_vectors(g, tri)),
        "betti_two_routes": beta == tp.dim - cut.dim == cyc.dim - ts.dim,
        "cuts_in_t_perp": all(tp.contains(r) for r in cut_rows),
        "witness": witness_ok,
    }


def suite_spaces(count: int = 200) -> list[Check]:
    fails: dict[str, int] = {}
    graphs = random_suite_graphs(count)
    for g in graphs:
        for name, ok in space_checks(g).items():
            fails.setdefault(name, 0)
            fails[name] += not ok
    checks = [Check(name, bad == 0, f"{bad}/{len(graphs)} graphs failed") for name, bad in fails.items()]
    fixtures = [
        ("betti_K_n", all(spaces.betti1(graph.complete_graph(n)) == 0 for n in range(3, 9))),
        ("betti_C_k", all(spaces.betti1(graph.cycle_graph(k)) == 1 for k in range(4, 11))),
        ("betti_K4_C4", spaces.betti1(graph.disjoint_union(graph.complete_graph(4), graph.cycle_graph(4))) == 1),
    ]
    checks += [Check(name, ok) for name, ok in fixtures]
    return checks


def suite_bounds(seed: int = 7) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    ok = True
    for n in (10, 20, 40, 60):
        for _ in range(100):
            p = rng.uniform(0.05, 0.95)
            iu = np.triu_indices(n, 1)
            keep = rng.random(iu[0].size) < p
            f = list(zip(iu[0][keep].tolist(), iu[1][keep].tolist()))
            gc = bounds.goodman(n, f)
            ok &= gc.identity_holds() and gc.goodman_holds() and sum(gc.t) == math.comb(n, 3)
    checks.append(Check("goodman_identity", bool(ok)))

    worst = 0.0
    samples = 20000
    for m, p in ((100, 0.5), (400, 0.1), (50, 0.3)):
        mu = m * p
        xs = rng.binomial(m, p, size=samples)
        for frac in (0.1, 0.3):
            lam = frac * mu
            worst = max(worst, np.mean(xs >= mu + lam) - bounds.chernoff_upper(mu, lam).value)
            worst = max(worst, np.mean(xs <= mu - lam) - bounds.chernoff_lower(mu, lam).value)
            worst = max(worst, np.mean(xs - mu >= lam) - bounds.azuma_bound(m, p, lam).value)
    checks.append(Check("tail_bounds", worst <= 0.01, f"worst excess {worst:.4f}"))
    lo = bounds.chernoff_lower(30.0, 12.0).terms
    checks.append(Check("phi_form_below_weak", lo["phi_form"] <= lo["weak_form"]))
    checks.append(Check("janson_disjoint", bounds.janson_triangle_bound(10, 30, 0.1 ** (1 / 3)).value >= 0.9 ** 10))
    return checks


def _hitting_bruteforce(g: graph.Graph) -> int:
    tris = [1 << a | 1 << b | 1 << c for a, b, c in graph.triangles(g).edge_triples()]
    for k in range(g.m + 1):
        for sub in combinations(range(g.m), k):
            mask = sum(1 << e for e in sub)
            if all(t & mask for t in tris):
                return k
    return g.m


def suite_oracles(seed: int = 11) -> list[Check]:
    checks = [
        Check("mantel", all(extremal.max_triangle_free(graph.complete_graph(n))[0] == n * n // 4 for n in range(3, 9))),
        Check("hitting_K4", extremal.min_triangle_hitting(graph.complete_graph(4))[0] == 2),
        Check("bip_K4", extremal.min_bipartization(graph.complete_graph(4))[0] == 2),
        Check("bip_C5", extremal.min_bipartization(graph.cycle_graph(5))[0] == 1),
        Check("bip_even", all(extremal.min_bipartization(graph.cycle_graph(k))[0] == 0 for k in (4, 6, 8, 10))),
    ]
    rng = random.Random(seed)
    ok_sum = ok_brute = True
    for _ in range(30):
        n = rng.randint(4, 8)
        g = graph.sample_gnp(n, rng.uniform(0.3, 0.9), rng.getrandbits(32))
        k, cover = extremal.min_triangle_hitting(g)
        t, free = extremal.max_triangle_free(g)
        ok_sum &= k + t == g.m and not graph.triangles(g.subgraph(free)).triples
        if g.m <= 14:
            ok_brute &= k == _hitting_bruteforce(g)
    checks.append(Check("free_plus_hitting", ok_sum))
    checks.append(Check("hitting_vs_bruteforce", ok_brute))
    ok_coset = True
    for _ in range(30):
        n = rng.randint(3, 10)
        g = graph.sample_gnp(n, rng.uniform(0.3, 0.9), rng.getrandbits(32))
        f = spaces.EdgeVector(g, BitVec.from_bools([rng.random() < 0.5 for _ in range(g.m)]))
        local = spaces.coset_minimize(g, f)
        exact = spaces.coset_min_oracle(g, f)
        balanced = all(2 * local.degree(v) <= g.degree(v) for v in range(n))
        ok_coset &= len(local) >= len(exact) and balanced
    checks.append(Check("coset_local_vs_oracle", ok_coset))
    return checks


def suite_sweep_smoke() -> list[Check]:
    cfg = SweepConfig(n_values=(30, 40), c_values=(1.0, 1.5), trials=4, seed=5)
    a = run_sweep(cfg, workers=1)
    b = run_sweep(cfg, workers=1)
    consistent = all(r.betti1 == r.dim_cycle - r.dim_triangle and r.betti1 >= 0 for r in a.records)
    return [
        Check("deterministic_records", a.records_text() == b.records_text()),
        Check("deterministic_summary", a.summary_text() == b.summary_text()),
        Check("record_consistency", consistent),
        Check("record_count", len(a.records) == 16),
    ]


SUITES = {
    "spaces": suite_spaces,
    "bounds": suite_bounds,
    "oracles": suite_oracles,
    "sweep-smoke": suite_sweep_smoke,
}


def verify(name: str) -> list[Check]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return suite()
