"""Compare the compiled and pure-Python series kernels.

    python benchmarks/bench_kernels.py            # kernels + verify sweep
    python benchmarks/bench_kernels.py --quick    # kernels only, small orders

The verify sweep is timed in a subprocess per backend, since the backend is
chosen at import time (CIGENUS_PURE_PYTHON=1 forces the fallback).
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit
from fractions import Fraction

from cigenus import _pykernels

try:
    from cigenus import _ckernels
except ImportError:
    _ckernels = None


def random_coeffs(rng, order, const=None):
    xs = [Fraction(rng.randint(-99, 99), rng.randint(1, 40)) for _ in range(order + 1)]
    if const is not None:
        xs[0] = Fraction(const)
    elif xs[0] == 0:
        xs[0] = Fraction(1)
    return xs


def bench_kernels(orders, repeat):
    rng = random.Random(0)
    print(f"{'kernel':<8}{'order':>6}{'python ms':>12}{'compiled ms':>13}{'speedup':>9}")
    for order in orders:
        a = random_coeffs(rng, order)
        b = random_coeffs(rng, order)
        cases = {
            "mul": (a, b),
            "recip": (a,),
            "exp": (random_coeffs(rng, order, const=0),),
            "log": (random_coeffs(rng, order, const=1),),
        }
        for name, args in cases.items():
            py = min(timeit.repeat(lambda: getattr(_pykernels, name)(*args, order), number=1, repeat=repeat))
            if _ckernels is None:
                print(f"{name:<8}{order:>6}{py * 1e3:>12.3f}{'n/a':>13}{'':>9}")
                continue
            c = min(timeit.repeat(lambda: getattr(_ckernels, name)(*args, order), number=1, repeat=repeat))
            assert getattr(_ckernels, name)(*args, order) == getattr(_pykernels, name)(*args, order)
            print(f"{name:<8}{order:>6}{py * 1e3:>12.3f}{c * 1e3:>13.3f}{py / c:>8.1f}x")


def bench_sweep(extra):
    cmd = [sys.executable, "-m", "cigenus", "verify", *extra]
    results = {}
    for backend, env_extra in (("python", {"CIGENUS_PURE_PYTHON": "1"}), ("compiled", {})):
        if backend == "compiled" and _ckernels is None:
            continue
        env = {k: v for k, v in os.environ.items() if k != "CIGENUS_PURE_PYTHON"}
        env.update(env_extra)
        start = time.perf_counter()
        proc = subprocess.run(cmd, env=env, capture_output=True, text=True)
        results[backend] = time.perf_counter() - start
        print(f"verify sweep [{backend}] {results[backend]:.2f}s  exit={proc.returncode}  "
              f"{proc.stderr.strip().split(' (')[0]}")
    if len(results) == 2:
        print(f"sweep speedup: {results['python'] / results['compiled']:.2f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--quick", action="store_true")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    orders = (8, 20) if args.quick else (8, 20, 40, 80)
    bench_kernels(orders, args.repeat)
    if not args.quick:
        bench_sweep(["--all"])
        bench_sweep(["--nmax", "16", "--dmax", "4", "--rmax", "2", "--only", "engine≡oracle"])


if __name__ == "__main__":
    main()
