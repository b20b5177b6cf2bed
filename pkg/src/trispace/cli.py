"""Command line entry point.

Exit status: 0 on success, 1 when a verify suite fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import extremal, graph, spaces
from .experiments import SweepConfig, concentration_spotcheck, load_config, p_of, record_for_graph, write_sweep
from .verify import SUITES, verify


def _cmd_sample(args) -> int:
    if args.theta is None:
        g = graph.sample_gnp(args.n, args.p, args.seed)
    else:
        g0, g1 = graph.sample_two_round(args.n, args.p, args.theta, args.seed)
        g = graph.union(g0, g1)
        if args.first_round:
            graph.write_graph(g0, args.first_round)
    text = graph.dumps(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_betti(args) -> int:
    g = graph.read_graph(args.graph)
    rec = record_for_graph(g, p=float("nan"), seed=0)
    print(f"dim_cycle={rec.dim_cycle}")
    print(f"dim_triangle={rec.dim_triangle}")
    print(f"betti1={rec.betti1}")
    print(f"q={str(rec.q).lower()}")
    if args.witness:
        w = spaces.find_witness(g)
        print("witness=" + ("none" if w is None else str(w)))
    return 0


def _cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    if args.coupled:
        cfg = SweepConfig(**{**cfg.__dict__, "coupled": True})
    result = write_sweep(cfg, out_dir=args.out_dir, workers=args.workers, timing=args.timing)
    sys.stdout.write(result.summary_text())
    return 0


def _cmd_spotcheck(args) -> int:
    p = args.p if args.p is not None else p_of(args.n, args.c)
    g = graph.sample_gnp(args.n, p, args.seed)
    rep = concentration_spotcheck(g, p, samples=args.samples, seed=args.seed, tol=args.tol, set_size=args.set_size)
    out = {
        "n": rep.n,
        "p": rep.p,
        "tol": rep.tol,
        "degree_dev": rep.degree_dev,
        "codegree_ratio": rep.codegree_ratio,
        "cut_dev": rep.cut_dev,
        "zeta_dev": rep.zeta_dev,
        "passed": rep.passed(),
        "skipped": rep.skipped,
    }
    print(json.dumps(out, indent=2))
    return 0


def _cmd_verify(args) -> int:
    checks = verify(args.suite)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
    failed = sum(not c.passed for c in checks)
    print(f"{args.suite}: {len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


def _cmd_oracle(args) -> int:
    g = graph.read_graph(args.graph)
    out: dict = {"n": g.n, "edges": g.m}
    if g.m <= extremal.MAX_EDGES:
        k, _ = extremal.min_triangle_hitting(g)
        out["min_triangle_hitting"] = k
        out["max_triangle_free"] = g.m - k
    else:
        out["min_triangle_hitting"] = f"skipped: more than {extremal.MAX_EDGES} edges"
    if g.n <= 24:
        out["min_bipartization"] = extremal.min_bipartization(g)[0]
    else:
        out["min_bipartization"] = "skipped: more than 24 vertices"
    out["greedy_triangle_matching"] = len(extremal.greedy_triangle_matching(g))
    if args.threshold is not None:
        cert = extremal.fractional_certificate(g, args.threshold)
        out["certificate"] = {
            "good_triangles": len(cert.good),
            "total_weight": str(cert.total_weight),
            "feasible": cert.feasible,
        }
    print(json.dumps(out, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trispace", description="Triangle space of random graphs over GF(2).")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sample", help="write a G(n,p) graph file")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=float, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--theta", type=float, help="two-round exposure: first-round fraction")
    s.add_argument("--first-round", help="also write the first-round graph G0 here")
    s.add_argument("-o", "--output")
    s.set_defaults(func=_cmd_sample)

    s = sub.add_parser("betti", help="dim C, dim T, betti1 and Q of a graph file")
    s.add_argument("graph")
    s.add_argument("--witness", action="store_true", help="also print a T-perp edge set that is not a cut")
    s.set_defaults(func=_cmd_betti)

    s = sub.add_parser("sweep", help="run a sweep config")
    s.add_argument("config")
    s.add_argument("--out-dir")
    s.add_argument("--workers", type=int)
    s.add_argument("--timing", action="store_true", help="fill the ms field (outputs stop being byte-stable)")
    s.add_argument("--coupled", action="store_true", help="share seeds across c so graphs nest in p")
    s.set_defaults(func=_cmd_sweep)

    s = sub.add_parser("spotcheck", help="degree/codegree/cut/zeta concentration on one G(n,p)")
    s.add_argument("--n", type=int, default=300)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--c", type=float, default=1.35)
    g.add_argument("--p", type=float)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=50)
    s.add_argument("--tol", type=float, default=0.25)
    s.add_argument("--set-size", type=int)
    s.set_defaults(func=_cmd_spotcheck)

    s = sub.add_parser("verify", help="run an invariant suite")
    s.add_argument("suite", choices=sorted(SUITES))
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("oracle", help="exact extremal quantities of a small graph file")
    s.add_argument("graph")
    s.add_argument("--threshold", type=float, help="triangle-degree cutoff for the fractional certificate")
    s.set_defaults(func=_cmd_oracle)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"trispace {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
