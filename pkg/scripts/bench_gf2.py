"""Time incremental insertion of random packed vectors into a Gf2Basis."""

import argparse
import time

import numpy as np

from trispace.gf2 import BitVec, Gf2Basis


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=25_000)
    ap.add_argument("--length", type=int, default=8_000)
    ap.add_argument("--density", type=float, default=None, help="bit density; default: 3 bits per vector (triangle-like)")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    vecs = []
    for _ in range(args.count):
        if args.density is None:
            bits = np.zeros(args.length, dtype=bool)
            bits[rng.choice(args.length, size=3, replace=False)] = True
        else:
            bits = rng.random(args.length) < args.density
        vecs.append(BitVec.from_bools(bits))
    basis = Gf2Basis(args.length)
    start = time.perf_counter()
    for v in vecs:
        basis.insert(v)
    elapsed = time.perf_counter() - start
    print(f"inserted {args.count} vectors of length {args.length}: rank {basis.rank}, {elapsed:.2f}s")


if __name__ == "__main__":
    main()
