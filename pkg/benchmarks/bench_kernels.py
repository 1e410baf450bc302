"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--census 20 22 24] [--krow 1000 4000] [--repeat 3]

Each timing is the best of --repeat runs.  Results are checked for equality
before they are reported.
"""

import argparse
import sys
import timeit

from bridge_census import _kernels_py

try:
    from bridge_census import _kernels
except ImportError:
    sys.exit("compiled kernels are not built; run `pip install -e . --no-build-isolation` with Cython available")


def census(mod, c):
    return [mod.census_length(c, length) for length in range(2, c, 2)]


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--census", type=int, nargs="*", default=[18, 20, 22])
    ap.add_argument("--krow", type=int, nargs="*", default=[500, 2000, 5000])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"{'kernel':<8} {'c':>6} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    cases = [("census", c, census) for c in args.census]
    cases += [("k_row", c, lambda mod, c: mod.k_row(c)) for c in args.krow]
    for name, c, fn in cases:
        if fn(_kernels, c) != fn(_kernels_py, c):
            sys.exit(f"{name}({c}): backends disagree")
        fast = best(lambda: fn(_kernels, c), args.repeat)
        slow = best(lambda: fn(_kernels_py, c), args.repeat)
        print(f"{name:<8} {c:>6} {fast:>10.4f} {slow:>10.4f} {slow / fast:>7.1f}x")


if __name__ == "__main__":
    main()
