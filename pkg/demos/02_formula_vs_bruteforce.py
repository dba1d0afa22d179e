"""Cross-check the closed forms against exhaustive backtracking.

Run from the repository root:  python demos/02_formula_vs_bruteforce.py
"""
import time

from dconsec import (
    count_exact,
    count_general,
    count_general_reference,
    inverse_condition_count,
    oracle_count,
    oracle_count_parallel,
)
from dconsec.cli import verify_grid

# Grid check, the same thing `dconsec verify` runs.
start = time.perf_counter()
report = verify_grid(9, 5)
print(f"{len(report.entries)} cells, all match: {report.all_match} "
      f"({time.perf_counter() - start:.1f}s)")

# The example from the introduction: 8 guests, rectangular two-sided table.
# The constraint |p(i+2) - p(i)| != 2 keeps facing neighbours apart.
print("n=8, d=2:", count_exact(8, 2), oracle_count(8, 2))

# Splitting the search tree on fixed prefixes gives identical totals.
for split, workers in [(0, 1), (2, 1), (2, 2), (3, 4)]:
    print(f"split={split} workers={workers}:", oracle_count_parallel(9, 2, split, workers))

# Counting with the roles of values and positions swapped gives the same numbers.
print("inverse form:", [inverse_condition_count(8, d) for d in range(1, 5)])
print("positional:  ", [oracle_count(8, d) for d in range(1, 5)])

# Two routes through the d >= 2 sum: literal compositions with every block
# assignment, versus grouped partitions with the memoized q kernel.
for n, d in [(8, 2), (9, 3), (10, 4)]:
    t0 = time.perf_counter()
    slow = count_general_reference(n, d)
    t1 = time.perf_counter()
    fast = count_general(n, d)
    t2 = time.perf_counter()
    print(f"n={n} d={d}: {slow} in {t1 - t0:.3f}s vs {fast} in {t2 - t1:.4f}s")
