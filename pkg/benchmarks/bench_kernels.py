"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is run on both backends, the results are compared for equality
and the best-of-N wall time is printed along with the speedup.
"""

import argparse
import random
import sys
import timeit

from truncbin import _pykernels

try:
    from truncbin import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    rng = random.Random(0)
    p = 65521
    deg = 60
    modulus = [rng.randrange(p) for _ in range(deg)] + [1]
    base = [rng.randrange(p) for _ in range(deg)]
    a = [rng.randrange(p) for _ in range(200)] + [1]
    b = [rng.randrange(p) for _ in range(150)] + [1]
    return {
        "sieve(2e6)": lambda kb: kb.sieve(2_000_000),
        "polpowmod deg60 e=p^3": lambda kb: kb.polpowmod(base, p**3, modulus, p),
        "polgcd deg200/150": lambda kb: kb.polgcd(a, b, p),
        "thue_candidates d=3 B=1e6": lambda kb: kb.thue_candidates(4, 1, 3, 3, 10**6),
        "thue_candidates d=5 B=4e3": lambda kb: kb.thue_candidates(3, 2, 5, 5, 4000),
    }


def best_time(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; only the fallback can be timed", file=sys.stderr)
    print(f"{'workload':30s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, work in workloads().items():
        t_py = best_time(lambda: work(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:30s} {t_py:10.4f} {'-':>10s} {'-':>8s}")
            continue
        if work(_ckernels) != work(_pykernels):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        t_c = best_time(lambda: work(_ckernels), args.repeat)
        print(f"{name:30s} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
