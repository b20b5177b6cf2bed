import json
import math

import pytest

from trispace import experiments as E
from trispace import graph as G
from trispace.bounds import mu_no_triangle


def test_p_of():
    assert E.p_of(300, 1.0) == pytest.approx(math.sqrt(math.log(300) / 300))
    assert E.p_of(3, 100.0) == 1.0
    assert E.p_of(1, 1.0) == 0.0


def test_run_trial_fixtures():
    r = E.run_trial(5, 1.0, 7)
    assert r.q and r.betti1 == 0 and r.edges == 10 and r.triangles == 10
    rec = E.record_for_graph(G.cycle_graph(6), p=0.5, seed=0)
    assert not rec.q and rec.betti1 == 1
    empty = E.run_trial(20, 0.0, 1)
    assert empty.q and empty.betti1 == 0
    with pytest.raises(ValueError):
        E.run_trial(2001, 0.1, 0)


def test_run_trial_deterministic():
    assert E.run_trial(60, 0.3, 11) == E.run_trial(60, 0.3, 11)
    timed = E.run_trial(60, 0.3, 11, timing=True)
    assert timed.ms is not None and timed.betti1 == E.run_trial(60, 0.3, 11).betti1


def test_record_json_roundtrip():
    r = E.run_trial(30, 0.4, 2, c=1.0)
    obj = json.loads(r.to_json())
    assert list(obj) == list(E.RECORD_FIELDS)
    assert E.TrialRecord.from_json(r.to_json()) == r
    with pytest.raises(ValueError):
        E.TrialRecord.from_json('{"n": 1}')


def test_parse_config():
    cfg = E.parse_config("n_list = 30, 40\nc_list=1.0 1.5  # comment\ntrials=3\nseed=9\n")
    assert cfg.n_values == (30, 40) and cfg.c_values == (1.0, 1.5) and cfg.trials == 3 and cfg.seed == 9
    for bad in ["bogus=1", "trials=1\ntrials=2", "trials", "c_list=-1", "trials=0", "theta=1.5"]:
        with pytest.raises(ValueError):
            E.parse_config(bad)


def test_trial_seeds_distinct_and_coupled():
    cfg = E.SweepConfig(n_values=(30,), c_values=(1.0, 1.5), trials=50, seed=1)
    seeds = {cfg.trial_seed(0, j, t) for j in range(2) for t in range(50)}
    assert len(seeds) == 100
    coupled = E.SweepConfig(n_values=(30,), c_values=(1.0, 1.5), trials=5, seed=1, coupled=True)
    assert coupled.trial_seed(0, 0, 3) == coupled.trial_seed(0, 1, 3)


def test_coupled_sweep_graphs_nest():
    cfg = E.SweepConfig(n_values=(40,), c_values=(0.8, 1.2, 1.6), trials=5, seed=4, coupled=True)
    for t in range(cfg.trials):
        gs = [G.sample_gnp(n, p, cfg.trial_seed(i, j, t)) for i, j, n, c, p in cfg.cells()]
        for small, big in zip(gs, gs[1:]):
            assert set(small.edges) <= set(big.edges)


def test_sweep_records_and_summary():
    cfg = E.SweepConfig(n_values=(25, 35), c_values=(1.0, 1.5), trials=4, seed=3)
    res = E.run_sweep(cfg, workers=1)
    assert len(res.records) == 16
    for r in res.records:
        assert r.betti1 == r.dim_cycle - r.dim_triangle >= 0
        g = G.sample_gnp(r.n, r.p, r.seed)
        assert r.q == G.every_edge_in_triangle(g) and r.edges == g.m
    lines = res.summary_text().splitlines()
    assert lines[0] == ",".join(E.SUMMARY_FIELDS)
    assert len(lines) == 5
    row = dict(zip(E.SUMMARY_FIELDS, lines[1].split(",")))
    assert float(row["mu_analytic"]) == pytest.approx(mu_no_triangle(25, E.p_of(25, 1.0)), rel=1e-5)
    assert float(row["exp_neg_mu"]) == pytest.approx(math.exp(-float(row["mu_analytic"])), rel=1e-5)


def test_sweep_parallel_matches_inline():
    cfg = E.SweepConfig(n_values=(30,), c_values=(1.0, 1.3), trials=3, seed=8)
    assert E.run_sweep(cfg, workers=1).records_text() == E.run_sweep(cfg, workers=2).records_text()


def test_write_sweep(tmp_path):
    cfg = E.SweepConfig(n_values=(20,), c_values=(1.2,), trials=3, seed=2, theta=0.3)
    res = E.write_sweep(cfg, out_dir=tmp_path, workers=1)
    assert (tmp_path / "records.jsonl").read_text() == res.records_text()
    assert (tmp_path / "summary.csv").read_text() == res.summary_text()
    assert not (tmp_path / "records.partial.jsonl").exists()


def test_spotcheck_complete_graph():
    rep = E.concentration_spotcheck(G.complete_graph(30), 1.0, samples=10)
    assert rep.degree_dev == 0 and rep.cut_dev == 0
    assert rep.zeta_dev == 0 or rep.zeta_dev is None


def test_spotcheck_skips_empty_sides():
    g = G.complete_graph(10)
    rep = E.concentration_spotcheck(g, 1.0, pairs=[([], [1, 2]), ([0], [3])])
    assert len(rep.cut_devs) == 1 and any("empty" in s for s in rep.skipped)
    assert E.cut_deviation(g, 1.0, [], [1]) is None


def test_spotcheck_threshold_density():
    n = 300
    p = E.p_of(n, 1.35)
    rep = E.concentration_spotcheck(G.sample_gnp(n, p, 0), p, samples=50, set_size=60)
    ok = rep.passed()
    assert ok["codegree"] and ok["cut"]
    assert ok["zeta"] is None and any("zeta" in s for s in rep.skipped)
    # max over 300 binomial degrees sits near 3 sigma, far outside 0.25 at np ~ 56
    sigma = math.sqrt((n - 1) * p * (1 - p)) / ((n - 1) * p)
    assert rep.degree_dev <= 4.5 * sigma


@pytest.mark.slow
def test_spotcheck_cut_calibration():
    n = 300
    p = E.p_of(n, 1.35)
    good = sum(
        E.concentration_spotcheck(G.sample_gnp(n, p, s), p, samples=50, seed=s, set_size=60).passed()["cut"]
        for s in range(100)
    )
    assert good >= 95


def test_count_isolated_edges():
    g = G.disjoint_union(G.complete_graph(3), G.path_graph(3))
    assert E.count_isolated_edges(g) == 2
