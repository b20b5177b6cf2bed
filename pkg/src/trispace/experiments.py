"""Seeded Monte Carlo sweeps over ``p = c * sqrt(ln n / n)`` and concentration spot-checks.

A sweep runs ``trials`` independent graphs for every ``(n, c)`` cell.  Each trial
gets its own 64-bit seed mixed from ``(master seed, n index, c index, trial)`` so
trials can run in any order or process.  Output:

* ``records.jsonl``: one JSON object per trial, sorted by ``(n, c, trial)``
* ``summary.csv``: one row per cell, reals at 6 significant digits

While running, records are appended to ``records.partial.jsonl`` as they finish;
the sorted files are written only once every cell is complete.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .bounds import mu_no_triangle
from .graph import Graph, sample_gnp, sample_two_round, triangles, union, zeta
from .spaces import cycle_dim, triangle_rank

MAX_TRIAL_N = 2000
SQRT_3_2 = math.sqrt(1.5)
DEFAULT_C = (1.0, 1.1, SQRT_3_2, 1.35, 1.5)

RECORD_FIELDS = ("n", "c", "p", "seed", "edges", "triangles", "q", "dim_cycle", "dim_triangle", "betti1", "ms")
SUMMARY_FIELDS = (
    "n", "c", "p", "trials", "p_q", "p_t_eq_c", "p_q_and_neq", "mean_betti1", "mu_analytic", "exp_neg_mu",
)
CONFIG_KEYS = {"n_list", "c_list", "trials", "seed", "theta", "out_dir"}


def p_of(n: int, c: float) -> float:
    if n < 2:
        return 0.0
    return min(1.0, max(0.0, c * math.sqrt(math.log(n) / n)))


@dataclass(frozen=True)
class SweepConfig:
    n_values: tuple[int, ...] = (300,)
    c_values: tuple[float, ...] = DEFAULT_C
    trials: int = 200
    seed: int = 0
    theta: float | None = None
    out_dir: str | None = None
    coupled: bool = False  # share one seed per (n, trial) across c, so graphs nest in p

    def __post_init__(self):
        if not self.n_values or any(n < 1 for n in self.n_values):
            raise ValueError("n values must be positive")
        if not self.c_values or any(c <= 0 for c in self.c_values):
            raise ValueError("c values must be positive")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.theta is not None and not 0 < self.theta < 1:
            raise ValueError("theta must lie strictly between 0 and 1")

    def cells(self) -> list[tuple[int, int, int, float, float]]:
        """``(n index, c index, n, c, p)`` for every cell, in output order."""
        return [
            (i, j, n, c, p_of(n, c))
            for i, n in enumerate(self.n_values)
            for j, c in enumerate(self.c_values)
        ]

    def trial_seed(self, n_index: int, c_index: int, trial: int) -> int:
        key = [self.seed, n_index, trial] if self.coupled else [self.seed, n_index, c_index, trial]
        return int(np.random.SeedSequence(key).generate_state(1, dtype=np.uint64)[0])


def parse_config(text: str) -> SweepConfig:
    """Flat ``key=value`` lines; ``#`` starts a comment; unknown keys are errors."""
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value

    def floats(s: str) -> tuple[float, ...]:
        return tuple(float(x) for x in s.replace(",", " ").split())

    kwargs: dict = {}
    if "n_list" in raw:
        kwargs["n_values"] = tuple(int(x) for x in raw["n_list"].replace(",", " ").split())
    if "c_list" in raw:
        kwargs["c_values"] = floats(raw["c_list"])
    if "trials" in raw:
        kwargs["trials"] = int(raw["trials"])
    if "seed" in raw:
        kwargs["seed"] = int(raw["seed"])
    if "theta" in raw and raw["theta"].lower() not in ("", "none"):
        kwargs["theta"] = float(raw["theta"])
    if "out_dir" in raw:
        kwargs["out_dir"] = raw["out_dir"]
    return SweepConfig(**kwargs)


def load_config(path) -> SweepConfig:
    return parse_config(Path(path).read_text())


# -- trials ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class TrialRecord:
    n: int
    c: float | None
    p: float
    seed: int
    edges: int
    triangles: int
    q: bool
    dim_cycle: int
    dim_triangle: int
    betti1: int
    ms: float | None = None

    def to_json(self) -> str:
        return json.dumps({k: getattr(self, k) for k in RECORD_FIELDS}, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "TrialRecord":
        obj = json.loads(line)
        if set(obj) != set(RECORD_FIELDS):
            raise ValueError(f"record fields {sorted(obj)} differ from {list(RECORD_FIELDS)}")
        return cls(**obj)


def record_for_graph(g: Graph, p: float, seed: int, c: float | None = None, ms: float | None = None) -> TrialRecord:
    tri = triangles(g)
    dc = cycle_dim(g)
    dt = triangle_rank(g, tri)
    return TrialRecord(
        n=g.n,
        c=c,
        p=p,
        seed=seed,
        edges=g.m,
        triangles=len(tri),
        q=all(tri.edge_counts),
        dim_cycle=dc,
        dim_triangle=dt,
        betti1=dc - dt,
        ms=ms,
    )


def sample_trial_graph(n: int, p: float, seed: int, theta: float | None = None) -> Graph:
    if theta is None:
        return sample_gnp(n, p, seed)
    g0, g1 = sample_two_round(n, p, theta, seed)
    return union(g0, g1)


def run_trial(
    n: int,
    p: float,
    seed: int,
    c: float | None = None,
    theta: float | None = None,
    timing: bool = False,
) -> TrialRecord:
    """Sample one graph and measure it; deterministic in ``(n, p, seed, theta)`` unless timed."""
    if n > MAX_TRIAL_N:
        raise ValueError(f"n={n} exceeds the per-trial guard of {MAX_TRIAL_N}")
    start = time.perf_counter()
    g = sample_trial_graph(n, p, seed, theta)
    rec = record_for_graph(g, p, seed, c)
    if timing:
        rec = TrialRecord(**{**asdict(rec), "ms": round((time.perf_counter() - start) * 1e3, 3)})
    return rec


def _trial_job(args) -> tuple[tuple[int, int, int], TrialRecord]:
    key, n, p, seed, c, theta, timing = args
    return key, run_trial(n, p, seed, c=c, theta=theta, timing=timing)


# -- sweeps ---------------------------------------------------------------------------------


@dataclass
class SweepResult:
    config: SweepConfig
    records: list[TrialRecord]  # sorted by (n index, c index, trial)
    summary: list[dict] = field(default_factory=list)

    def records_text(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.records)

    def summary_text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(SUMMARY_FIELDS)
        for row in self.summary:
            w.writerow([_fmt(row[k]) for k in SUMMARY_FIELDS])
        return buf.getvalue()


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return str(int(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.6g}"


def summarize(config: SweepConfig, records: Sequence[TrialRecord]) -> list[dict]:
    rows = []
    t = config.trials
    for k, (_, _, n, c, p) in enumerate(config.cells()):
        cell = records[k * t:(k + 1) * t]
        mu = mu_no_triangle(n, p) if n >= 2 else 0.0
        rows.append(
            {
                "n": n,
                "c": c,
                "p": p,
                "trials": len(cell),
                "p_q": sum(r.q for r in cell) / len(cell),
                "p_t_eq_c": sum(r.betti1 == 0 for r in cell) / len(cell),
                "p_q_and_neq": sum(r.q and r.betti1 > 0 for r in cell) / len(cell),
                "mean_betti1": sum(r.betti1 for r in cell) / len(cell),
                "mu_analytic": mu,
                "exp_neg_mu": math.exp(-mu),
            }
        )
    return rows


def run_sweep(
    config: SweepConfig,
    workers: int | None = None,
    timing: bool = False,
    sink: Callable[[TrialRecord], None] | None = None,
) -> SweepResult:
    """Run every trial of ``config``; ``sink`` sees records in completion order."""
    jobs = []
    for i, j, n, c, p in config.cells():
        for t in range(config.trials):
            jobs.append(((i, j, t), n, p, config.trial_seed(i, j, t), c, config.theta, timing))
    if workers is None:
        workers = os.cpu_count() or 1
    done: dict[tuple[int, int, int], TrialRecord] = {}
    if workers <= 1:
        for job in jobs:
            key, rec = _trial_job(job)
            done[key] = rec
            if sink:
                sink(rec)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_trial_job, job) for job in jobs]
            for fut in as_completed(futures):
                key, rec = fut.result()
                done[key] = rec
                if sink:
                    sink(rec)
    records = [done[k] for k in sorted(done)]
    return SweepResult(config, records, summarize(config, records))


def write_sweep(config: SweepConfig, out_dir=None, workers: int | None = None, timing: bool = False) -> SweepResult:
    """Run the sweep, streaming a partial record file, then write the final artifacts."""
    out = Path(out_dir or config.out_dir or ".")
    out.mkdir(parents=True, exist_ok=True)
    partial = out / "records.partial.jsonl"
    with open(partial, "w") as fh:

        def sink(rec: TrialRecord) -> None:
            fh.write(rec.to_json() + "\n")
            fh.flush()

        result = run_sweep(config, workers=workers, timing=timing, sink=sink)
    (out / "records.jsonl").write_text(result.records_text())
    (out / "summary.csv").write_text(result.summary_text())
    partial.unlink()
    return result


# -- concentration spot-checks --------------------------------------------------------------


@dataclass
class SpotcheckReport:
    n: int
    p: float
    tol: float
    degree_dev: float
    codegree_ratio: float  # max codegree / (4 n p^2)
    cut_devs: list[float]
    zeta_devs: list[float]
    skipped: list[str] = field(default_factory=list)

    @property
    def cut_dev(self) -> float | None:
        return max(self.cut_devs) if self.cut_devs else None

    @property
    def zeta_dev(self) -> float | None:
        return max(self.zeta_devs) if self.zeta_devs else None

    def passed(self) -> dict[str, bool | None]:
        return {
            "degree": self.degree_dev <= self.tol,
            "codegree": self.codegree_ratio < 1.0,
            "cut": None if self.cut_dev is None else self.cut_dev <= self.tol,
            "zeta": None if self.zeta_dev is None else self.zeta_dev <= self.tol,
        }


def cut_deviation(g: Graph, p: float, s: Iterable[int], t: Iterable[int]) -> float | None:
    """``| |nabla(S,T)| / (|S||T|p) - 1 |``, or ``None`` when S or T is empty."""
    s, t = set(s), set(t)
    if not s or not t or p <= 0:
        return None
    if s & t:
        raise ValueError("S and T must be disjoint")
    return abs(zeta(g, s, t) / (len(s) * len(t) * p) - 1.0)


def zeta_deviation(g: Graph, p: float, y: Iterable[int], z: Iterable[int]) -> float | None:
    """Relative deviation of ``zeta(Y, Z)`` from its mean ``(|Y||Z| - |Y & Z|) p``."""
    y, z = set(y), set(z)
    mean = (len(y) * len(z) - len(y & z)) * p
    if mean <= 0:
        return None
    return abs(zeta(g, y, z) / mean - 1.0)


def concentration_spotcheck(
    g: Graph,
    p: float,
    samples: int = 50,
    seed: int = 0,
    tol: float = 0.25,
    set_size: int | None = None,
    pairs: Sequence[tuple[Iterable[int], Iterable[int]]] | None = None,
) -> SpotcheckReport:
    """Compare degrees, codegrees, ``|nabla(S,T)|`` and ``zeta(Y,Z)`` with their G(n,p) means.

    ``S, T`` are disjoint random sets of ``set_size`` vertices (default ``n // 5``)
    unless explicit ``pairs`` are given.  ``Y, Z`` are drawn only when
    ``|Y||Z| > 8 tol^-2 p^-1 n`` is achievable; otherwise that check is skipped
    and flagged.  Empty sets are skipped and flagged.
    """
    n = g.n
    rng = np.random.default_rng(seed)
    skipped: list[str] = []
    degs = np.asarray(g.degrees(), dtype=float)
    mean_deg = (n - 1) * p
    degree_dev = float(np.max(np.abs(degs / mean_deg - 1.0))) if mean_deg > 0 else 0.0
    codeg = 0
    if n >= 2:
        a = g.to_dense().astype(np.float32)
        co = a @ a
        np.fill_diagonal(co, 0)
        codeg = int(co.max())
    codegree_ratio = codeg / (4 * n * p * p) if p > 0 else 0.0

    if pairs is None:
        size = max(1, n // 5) if set_size is None else set_size
        pairs = []
        if 2 * size <= n:
            for _ in range(samples):
                perm = rng.permutation(n)
                pairs.append((perm[:size].tolist(), perm[size:2 * size].tolist()))
        else:
            skipped.append(f"cut: two disjoint sets of size {size} do not fit in n={n}")
    cut_devs = []
    for k, (s, t) in enumerate(pairs):
        d = cut_deviation(g, p, s, t)
        if d is None:
            skipped.append(f"cut pair {k}: empty side")
        else:
            cut_devs.append(d)

    zeta_devs = []
    need = 8 / (tol * tol * p) * n if p > 0 else math.inf
    if n * n <= need:
        skipped.append(f"zeta: |Y||Z| > {need:.4g} impossible with n={n}")
    else:
        side = min(n, math.isqrt(int(need)) + 1)
        for _ in range(samples):
            y = rng.choice(n, size=side, replace=False).tolist()
            z = rng.choice(n, size=side, replace=False).tolist()
            d = zeta_deviation(g, p, y, z)
            if d is not None:
                zeta_devs.append(d)
    return SpotcheckReport(n, p, tol, degree_dev, codegree_ratio, cut_devs, zeta_devs, skipped)


def count_isolated_edges(g: Graph) -> int:
    """Edges of ``g`` lying in no triangle."""
    return sum(1 for u, v in g.edges if not g.adj[u] & g.adj[v])

