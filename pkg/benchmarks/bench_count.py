"""Benchmark the compiled affine-count kernel against the pure-Python one.

Both kernels get identical argument tuples (p, d, modulus, f digits, h digits)
and must return identical counts; the script times best-of-N for each workload
and prints a speedup table.

    python3 benchmarks/bench_count.py
    python3 benchmarks/bench_count.py --repeat 5 --big
"""

import argparse
import time

from curveclass import field_create
from curveclass.counting import pure_affine_count

try:
    from curveclass import _countcore

    compiled_count = _countcore.affine_count
except ImportError:
    compiled_count = None

# (label, p, f over F_p as index lists, h over F_p, extension degrees)
WORKLOADS = [
    ("y^2 = x^5 + x      /F3", 3, [0, 1, 0, 0, 0, 1], [], (3, 4, 5)),
    ("y^2 = x^3 + 2x + 1 /F3", 3, [1, 2, 0, 1], [], (4, 5, 6)),
    ("y^2 = x^5 + x      /F5", 5, [0, 1, 0, 0, 0, 1], [], (2, 3, 4)),
    ("y^2 + xy = x^3 + 1 /F2", 2, [1, 0, 0, 1], [0, 1], (6, 8, 10)),
]

BIG_EXTRA = [
    ("y^2 = x^5 + x      /F3", 3, [0, 1, 0, 0, 0, 1], [], (7,)),
    ("y^2 + xy = x^3 + 1 /F2", 2, [1, 0, 0, 1], [0, 1], (12,)),
]


def kernel_args(p, n, fcoeffs, hcoeffs):
    big = field_create(p, n)
    # prime-field constants embed as constant digit vectors
    fco = [list(big.digits(c)) for c in fcoeffs]
    hco = [list(big.digits(c)) for c in hcoeffs]
    return p, n, list(big.modulus), fco, hco


def best_of(fn, args, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return result, best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    ap.add_argument("--big", action="store_true",
                    help="include the largest extension degrees")
    args = ap.parse_args(argv)

    if compiled_count is None:
        print("compiled kernel not installed; nothing to compare")
        print("(build it with: pip install -e . --no-build-isolation)")
        return 1

    work = list(WORKLOADS) + (BIG_EXTRA if args.big else [])
    print(f"{'workload':<26} {'Q':>7} {'compiled':>10} {'pure':>10} {'speedup':>8}")
    total_c = total_p = 0.0
    for label, p, fc, hc, degrees in work:
        for n in degrees:
            ka = kernel_args(p, n, fc, hc)
            r1, tc = best_of(compiled_count, ka, args.repeat)
            r2, tp = best_of(pure_affine_count, ka, args.repeat)
            if r1 != r2:
                print(f"MISMATCH on {label} n={n}: {r1} != {r2}")
                return 1
            total_c += tc
            total_p += tp
            print(f"{label:<26} {p ** n:>7} {tc * 1e3:>8.2f}ms {tp * 1e3:>8.2f}ms"
                  f" {tp / tc:>7.1f}x")
    print(f"{'total':<26} {'':>7} {total_c * 1e3:>8.2f}ms {total_p * 1e3:>8.2f}ms"
          f" {total_p / total_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
