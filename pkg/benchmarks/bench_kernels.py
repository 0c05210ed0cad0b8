"""Benchmark the compiled kernel lane against the pure-Python fallback.

Times the three hot kernels (matmul, kron, rref) on identical random
rational inputs, cross-checks that both lanes return identical results,
and reports wall-clock ratios.  Run as a script:

    python3 benchmarks/bench_kernels.py [--size 24] [--repeat 5] [--seed 7]
"""

import argparse
import random
import time
from fractions import Fraction

from fusionaudit.exactlin import BACKEND, _pykernels

try:
    from fusionaudit.exactlin import _ckernels
except ImportError:
    _ckernels = None


def random_entries(rng, n, m):
    return [Fraction(rng.randrange(-9, 10), rng.randrange(1, 8))
            for _ in range(n * m)]


def bench(fn, args, repeat):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=24,
                        help="square matrix dimension")
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions, best of")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled lane not built (active backend: %s); "
              "nothing to compare" % BACKEND)
        return

    rng = random.Random(args.seed)
    n = args.size
    a = random_entries(rng, n, n)
    b = random_entries(rng, n, n)
    k = max(2, n // 4)
    small = random_entries(rng, k, k)

    cases = [
        ("matmul %dx%d" % (n, n),
         (n, n, a, n, b),
         _ckernels.matmul, _pykernels.matmul),
        ("kron   %dx%d (x) %dx%d" % (k, k, k, k),
         (k, k, small, k, k, random_entries(rng, k, k)),
         _ckernels.kron, _pykernels.kron),
        ("rref   %dx%d" % (n, n),
         (n, n, a),
         _ckernels.rref, _pykernels.rref),
    ]

    print("%-24s %12s %12s %8s" % ("kernel", "compiled", "pure", "ratio"))
    for label, call_args, cfn, pfn in cases:
        ct, cout = bench(cfn, call_args, args.repeat)
        pt, pout = bench(pfn, call_args, args.repeat)
        if cout != pout:
            raise AssertionError("lane mismatch on %s" % label)
        print("%-24s %10.3fms %10.3fms %7.2fx"
              % (label, ct * 1e3, pt * 1e3, pt / ct))
    print("results identical across lanes; active backend: %s" % BACKEND)


if __name__ == "__main__":
    main()
