"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--nmax 12] [--repeat 3]

Reports best-of-``repeat`` wall time for ``involution_length_histogram(n)``
and for a batch of ``inversions`` calls, and checks both backends agree.
"""

import argparse
import random
import sys
import timeit

from signed_involutions import _kernels_py

try:
    from signed_involutions import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmin", type=int, default=8)
    ap.add_argument("--nmax", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if _kernels_c is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return 1

    print(f"{'kernel':<28}{'n':>4}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for n in range(args.nmin, args.nmax + 1):
        ref = _kernels_py.involution_length_histogram(n)
        if _kernels_c.involution_length_histogram(n) != ref:
            print(f"MISMATCH in involution_length_histogram({n})")
            return 1
        tp = best(lambda: _kernels_py.involution_length_histogram(n), args.repeat)
        tc = best(lambda: _kernels_c.involution_length_histogram(n), args.repeat)
        print(f"{'involution_length_histogram':<28}{n:>4}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")

    rng = random.Random(0)
    for n in (10, 50, 200):
        perms = [rng.sample(range(1, n + 1), n) for _ in range(2000)]
        if any(_kernels_c.inversions(w) != _kernels_py.inversions(w) for w in perms):
            print(f"MISMATCH in inversions (n={n})")
            return 1
        tp = best(lambda: [_kernels_py.inversions(w) for w in perms], args.repeat)
        tc = best(lambda: [_kernels_c.inversions(w) for w in perms], args.repeat)
        print(f"{'inversions x2000':<28}{n:>4}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
