"""Compare the compiled scan kernel against the pure-Python twin.

Usage: python benchmarks/bench_backends.py [--full]

The default workload scans a 2^16 window of generator candidates for each
n; --full scans the whole 2^20 space at n=5.
"""

from __future__ import annotations

import argparse
import sys
import time

from hfpq import kernels, kernels_py


def _run(fn, n: int, start: int, stop: int) -> tuple[float, int]:
    t0 = time.perf_counter()
    hits = fn(n, start, stop)
    return time.perf_counter() - t0, len(hits)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true",
                        help="scan the whole space at n=5")
    args = parser.parse_args()

    if not kernels.HAVE_COMPILED:
        print("compiled extension not available; showing pure backend only",
              file=sys.stderr)

    jobs = [(3, 0, 1 << 12), (4, 0, 1 << 16), (5, 0, 1 << 16)]
    if args.full:
        jobs.append((5, 0, 1 << 20))

    print(f"{'n':>3} {'candidates':>12} {'pure (s)':>10} {'compiled (s)':>13}"
          f" {'speedup':>8} {'hits':>6}")
    for n, start, stop in jobs:
        pure_t, pure_hits = _run(kernels_py.scan_general, n, start, stop)
        if kernels.HAVE_COMPILED:
            comp_t, comp_hits = _run(kernels._fastscan.scan_general, n, start, stop)
            if comp_hits != pure_hits:
                raise AssertionError("backends disagree on hit count")
            speedup = pure_t / comp_t if comp_t else float("inf")
            print(f"{n:>3} {stop - start:>12} {pure_t:>10.3f} {comp_t:>13.3f}"
                  f" {speedup:>7.1f}x {pure_hits:>6}")
        else:
            print(f"{n:>3} {stop - start:>12} {pure_t:>10.3f} {'-':>13}"
                  f" {'-':>8} {pure_hits:>6}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
