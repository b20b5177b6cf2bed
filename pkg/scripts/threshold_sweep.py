"""Run a sweep config and print P(Q) against e^-mu with the T=C frequency per cell."""

import argparse
import time

from trispace.experiments import SweepConfig, load_config, write_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("config", nargs="?", default="scripts/sweep_n300.cfg")
    ap.add_argument("--workers", type=int)
    ap.add_argument("--trials", type=int, help="override the trial count")
    ap.add_argument("--out-dir")
    args = ap.parse_args()

    cfg = load_config(args.config)
    if args.trials:
        cfg = SweepConfig(**{**cfg.__dict__, "trials": args.trials})
    start = time.perf_counter()
    res = write_sweep(cfg, out_dir=args.out_dir, workers=args.workers)
    elapsed = time.perf_counter() - start

    print(f"{'n':>5} {'c':>7} {'p':>8} {'P(Q)':>7} {'e^-mu':>7} {'P(T=C)':>7} {'Q&T!=C':>7} {'mean b1':>8}")
    for r in res.summary:
        print(
            f"{r['n']:>5} {float(r['c']):>7.4f} {float(r['p']):>8.5f} {float(r['p_q']):>7.3f} "
            f"{float(r['exp_neg_mu']):>7.3f} {float(r['p_t_eq_c']):>7.3f} {float(r['p_q_and_neq']):>7.3f} "
            f"{float(r['mean_betti1']):>8.3f}"
        )
    print(f"{len(res.records)} trials in {elapsed:.1f}s")


if __name__ == "__main__":
    main()
