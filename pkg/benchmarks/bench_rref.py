"""Benchmark the exact-rational row-reduction kernel: compiled extension
against the pure-Python fallback on identical random matrices.

Usage: python benchmarks/bench_rref.py [--size N] [--count K] [--seed S]
"""

import argparse
import random
import time
from fractions import Fraction

from ghcert.linalg import _rref_py

try:
    from ghcert.linalg import _rref_cy
except ImportError:
    _rref_cy = None


def random_matrix(rng, rows, cols):
    return [
        [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(cols)]
        for _ in range(rows)
    ]


def run(kernel, mats):
    start = time.perf_counter()
    pivots = []
    for m in mats:
        pivots.append(kernel.rref_in_place([row[:] for row in m]))
    return time.perf_counter() - start, pivots


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=40)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    mats = [
        random_matrix(rng, args.size, args.size + 5) for _ in range(args.count)
    ]
    t_py, piv_py = run(_rref_py, mats)
    print(f"python kernel: {t_py:.3f} s  ({args.count} matrices of "
          f"{args.size}x{args.size + 5})")
    if _rref_cy is None:
        print("compiled kernel not built; run `python setup.py build_ext --inplace`")
        return
    t_cy, piv_cy = run(_rref_cy, mats)
    assert piv_py == piv_cy, "kernels disagree"
    print(f"cython kernel: {t_cy:.3f} s")
    print(f"speedup: {t_py / t_cy:.2f}x (identical pivot structure verified)")


if __name__ == "__main__":
    main()
