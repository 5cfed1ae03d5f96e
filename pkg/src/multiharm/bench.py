"""Benchmark the pure-Python kernels against the compiled extension.

Run with ``python -m multiharm.bench``.  Reports best-of-N wall time per
kernel and the speedup of the compiled backend; also asserts that both
backends produce identical values on the benchmark inputs.
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from multiharm._kernels import pure

try:
    from multiharm._kernels import _speedups
except ImportError:
    _speedups = None


def _best_of(repeat: int, fn, *args) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def _cases(order: int, levels: int):
    log_coeffs = [Fraction(0)] + [Fraction(1, k) for k in range(1, order + 1)]
    geo = [Fraction(1)] * (order + 1)
    one_minus_4z = [Fraction(1), Fraction(-4)] + [Fraction(0)] * (order - 1)
    return [
        ("cauchy_product", "cauchy_product", (log_coeffs, geo, order)),
        ("invert_series", "invert_series", (one_minus_4z,)),
        ("sqrt_series", "sqrt_series", (one_minus_4z,)),
        ("harmonic_like_levels", "harmonic_like_levels", (order, levels)),
        ("stirling1_rows", "stirling1_rows", (order,)),
    ]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=200, help="table/series size (default 200)")
    parser.add_argument("--levels", type=int, default=4, help="harmonic-like levels (default 4)")
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions (default 3)")
    args = parser.parse_args(argv)

    if _speedups is None:
        print("compiled backend not available; timing the pure backend only")

    width = 24
    header = f"{'kernel':<{width}} {'pure [s]':>10}"
    if _speedups is not None:
        header += f" {'compiled [s]':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, name, fn_args in _cases(args.order, args.levels):
        t_pure, r_pure = _best_of(args.repeat, getattr(pure, name), *fn_args)
        line = f"{label:<{width}} {t_pure:>10.4f}"
        if _speedups is not None:
            t_fast, r_fast = _best_of(args.repeat, getattr(_speedups, name), *fn_args)
            if r_pure != r_fast:
                raise AssertionError(f"backend mismatch in {name}")
            line += f" {t_fast:>13.4f} {t_pure / t_fast:>7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
