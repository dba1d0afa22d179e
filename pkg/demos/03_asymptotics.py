"""How fast a(n, d)/n! approaches e^-2, and what the published series get right.

Run from the repository root:  python demos/03_asymptotics.py
"""
from dconsec import convergence_report, e_squared, exact_ratio_scaled, series_bracket

print("e^2 =", e_squared(30), "+/-", float(e_squared(30).error))

# e_n = n (a(n,d) e^2 / n! - 1) should tend to 4(d - 1).
for d in range(0, 5):
    rows = convergence_report(d, [8, 16, 32])
    line = "  ".join(f"e_{n}={e.to_string(6)}" for n, e, _ in rows)
    print(f"d={d}  target {4 * (d - 1):>3}  {line}")

# For d = 0 and d = 1 the expansions go to n^-5.  Scaling the remainder by n^6
# shows whether it is really O(n^-6): it should level off, not grow.
for d in (0, 1):
    for corrected in (False, True):
        if d == 1 and corrected:
            continue
        label = "published" if not corrected else "796/15   "
        scaled = []
        for n in (16, 32, 64, 128, 256):
            rem = exact_ratio_scaled(n, d, 50).value - series_bracket(d, n, 5, corrected)
            scaled.append(f"{float(rem) * n**6:9.2f}")
        print(f"d={d} {label} n^6 * remainder at n=16..256:", " ".join(scaled))

# The d = 0 remainder with the published 736/15 grows linearly after scaling,
# so that coefficient is off; 796/15 makes it level off near 175.
