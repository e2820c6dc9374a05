"""Compare the compiled and pure-Python kernels on realistic workloads.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import random
import timeit
from fractions import Fraction

from mopkit import _pykernels
from mopkit.jacobi_pineiro import JPWeightSystem
from mopkit.oracle import MomentTable, type1_system
from mopkit.polynomials import MultiIndex
from mopkit.sampling import random_alphas, random_beta

try:
    from mopkit import _ckernels
except ImportError:
    _ckernels = None


def _workloads(seed):
    rng = random.Random(seed)
    ws = JPWeightSystem(random_alphas(rng, 3), random_beta(rng))
    system, _ = type1_system(ws, MultiIndex((4, 3, 3)), MomentTable(ws))
    rows = []
    rhs = []
    from math import lcm

    for row, b in zip(system.matrix, system.rhs):
        s = lcm(*(x.denominator for x in row))
        rows.append([x.numerator * (s // x.denominator) for x in row])
        rhs.append(int(b * s))
    num = [(-7, 1), (5, 3), (2, 7), (-1, 2)]
    den = [(4, 3), (9, 5), (1, 6)]
    xs = [(rng.randint(-10**12, 10**12), rng.randint(1, 10**9)) for _ in range(400)]
    ys = [(rng.randint(-10**12, 10**12), rng.randint(1, 10**9)) for _ in range(400)]
    return {
        "bareiss_solve 10x10": lambda k: k.bareiss_solve(rows, rhs),
        "series_terms 4F3": lambda k: k.series_terms(num, den, 1, 1, 7),
        "rational_dot n=400": lambda k: k.rational_dot(xs, ys),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'kernel':<22}" + "".join(f"{name:>14}" for name, _ in backends) + ("   speedup" if _ckernels else ""))
    for label, fn in _workloads(args.seed).items():
        times = []
        for _, impl in backends:
            assert fn(impl) == fn(_pykernels)
            t = min(timeit.repeat(lambda: fn(impl), number=args.number, repeat=args.repeat)) / args.number
            times.append(t)
        line = f"{label:<22}" + "".join(f"{t * 1e6:>12.1f}us" for t in times)
        if len(times) == 2:
            line += f"   {times[0] / times[1]:>6.2f}x"
        print(line)
    if _ckernels is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
