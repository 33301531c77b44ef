"""Mutation kernel benchmark: numba vs the pure-numpy fallback.

    python3 benchmarks/bench_mutation.py [--reps N]

Times single mutations on a few ranks and a full breadth-first walk of the
seeds of D5 and A5.  The whole-walk comparison runs the fallback in a
subprocess with CVECTORS_DISABLE_NUMBA=1 so that the env-flag path is what
gets measured.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from cvectors import kernels
from cvectors.dynkin import DynkinType
from cvectors.seeds import enumerate_seeds


def time_single(n: int, reps: int, use_numba: bool) -> float:
    rng = np.random.default_rng(n)
    upper = np.triu(rng.integers(-2, 3, size=(n, n)), 1)
    b = (upper - upper.T).astype(np.int64)
    c = np.eye(n, dtype=np.int64)
    kernels.mutate_arrays(b, c, 0, use_numba=use_numba)  # compile / warm up
    t0 = time.perf_counter()
    for r in range(reps):
        b, c = kernels.mutate_arrays(b, c, r % n, use_numba=use_numba)
        if b.dtype != np.int64 or c.dtype != np.int64:
            # entries left int64 range: restart from the initial seed
            b = (upper - upper.T).astype(np.int64)
            c = np.eye(n, dtype=np.int64)
    return (time.perf_counter() - t0) / reps


def time_walk(name: str) -> tuple[float, int]:
    b = DynkinType.parse(name).exchange_matrix()
    enumerate_seeds(b, budget=10)
    t0 = time.perf_counter()
    en = enumerate_seeds(b)
    return time.perf_counter() - t0, len(en.seeds)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=20000)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    walks = ["A5", "D5"]
    if args.child:
        print(json.dumps({w: time_walk(w) for w in walks}))
        return

    print(f"numba available: {kernels.USING_NUMBA}")
    print(f"{'rank':>4} {'numba us':>10} {'numpy us':>10} {'speedup':>8}")
    for n in (3, 5, 8):
        tn = time_single(n, args.reps, True) if kernels.USING_NUMBA else float("nan")
        tp = time_single(n, args.reps, False)
        print(f"{n:>4} {tn * 1e6:>10.2f} {tp * 1e6:>10.2f} {tp / tn:>8.1f}")

    env = dict(os.environ, CVECTORS_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, __file__, "--child"], env=env, capture_output=True, text=True, check=True)
    fallback = json.loads(out.stdout)
    print(f"\n{'walk':>4} {'seeds':>7} {'numba s':>9} {'numpy s':>9}")
    for w in walks:
        t, count = time_walk(w)
        tf, count_f = fallback[w]
        assert count == count_f
        print(f"{w:>4} {count:>7} {t:>9.2f} {tf:>9.2f}")


if __name__ == "__main__":
    main()
