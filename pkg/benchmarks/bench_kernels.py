"""Benchmark: compiled kernel versus the pure-Python fallback.

Times the fused avoider-counting loop (enumeration plus containment, the
hot path of every sweep) over all shapes and prescriptions within the
given bounds, for a few representative patterns.

Usage:
    python benchmarks/bench_kernels.py [--max-cells 9] [--max-total 6]
"""

from __future__ import annotations

import argparse
import time

from crossnest import _purekern
from crossnest.experiments import compositions, iter_shapes
from crossnest.patterns import antiidentity, f_matrix, identity, m213

try:
    from crossnest import _fastkern
except ImportError:
    _fastkern = None


def instances(max_cells, max_total):
    for shape in iter_shapes(max_cells):
        parts = shape.parts
        ncols = parts[0] if parts else 0
        for total in range(max_total + 1):
            for rows in compositions(total, len(parts)):
                for cols in compositions(total, ncols):
                    yield parts, rows, cols


def run(kernel, tasks, patterns):
    totals = []
    started = time.perf_counter()
    for pattern in patterns:
        subtotal = 0
        for parts, rows, cols in tasks:
            subtotal += kernel.count_avoiders(parts, rows, cols, pattern.rows)
        totals.append(subtotal)
    return time.perf_counter() - started, totals


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-cells", type=int, default=9)
    parser.add_argument("--max-total", type=int, default=6)
    args = parser.parse_args()

    tasks = list(instances(args.max_cells, args.max_total))
    patterns = [identity(2), antiidentity(2), identity(3), f_matrix(3), m213()]
    print(
        f"sweep: {len(tasks)} prescriptions "
        f"(max cells {args.max_cells}, max total {args.max_total}), "
        f"{len(patterns)} patterns"
    )

    pure_time, pure_totals = run(_purekern, tasks, patterns)
    print(f"pure-python kernel: {pure_time:8.2f}s  counts={pure_totals}")

    if _fastkern is None:
        print("compiled kernel: not built (pip install -e . with a compiler)")
        return
    fast_time, fast_totals = run(_fastkern, tasks, patterns)
    print(f"compiled kernel:    {fast_time:8.2f}s  counts={fast_totals}")
    if fast_totals != pure_totals:
        raise SystemExit("kernel disagreement; run the parity tests")
    print(f"speedup: {pure_time / fast_time:.1f}x")


if __name__ == "__main__":
    main()
