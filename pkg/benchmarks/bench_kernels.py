"""Compare the compiled and pure-Python modular elimination kernels.

    python3 benchmarks/bench_kernels.py [--sizes 40 80 160] [--repeat 3]
"""
import argparse
import random
import timeit

from qtwist import _kernels_py, linalg

try:
    from qtwist import _kernels
except ImportError:
    _kernels = None


def random_system(n, density, p, seed):
    rng = random.Random(seed)
    rows = []
    for _ in range(n):
        rows.append({c: rng.randrange(1, p) for c in range(n) if rng.random() < density})
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[40, 80, 160])
    ap.add_argument("--density", type=float, default=0.3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    p = linalg.primes(1)[0]
    print(f"backend selected at import: {linalg.BACKEND}")
    print(f"{'n':>6} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n in args.sizes:
        rows = random_system(n, args.density, p, n)
        py = min(timeit.repeat(lambda: _kernels_py.rref_mod(rows, n, p), number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{n:>6} {py:>10.4f} {'n/a':>10} {'':>8}")
            continue
        a = _kernels_py.rref_mod(rows, n, p)
        b = _kernels.rref_mod(rows, n, p)
        assert a == b, "backends disagree"
        cy = min(timeit.repeat(lambda: _kernels.rref_mod(rows, n, p), number=1, repeat=args.repeat))
        print(f"{n:>6} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
