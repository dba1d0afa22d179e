"""The q kernel: spreading components over residue classes.

Run from the repository root:  python demos/04_q_kernel.py
"""
from dconsec import binomial, compositions, factorial, q_value, q_value_reference, residue_profile
from dconsec.combi import block_assignments, blocks_of

# n = 12, d = 2: odd and even seats, six each.
n, d = 12, 2
print("residue classes:", residue_profile(n, d))

# Components of sizes [2, 1, 2] (one from the odd seats, two from the even ones).
parts = [2, 1, 2]
sizes = residue_profile(n, d)
for assignment in block_assignments(len(parts), d):
    blocks = blocks_of(assignment, d)
    weights = []
    for k, block in enumerate(blocks):
        load = sum(parts[i - 1] for i in block)
        weights.append(binomial(sizes[k] - load, len(block)) * factorial(len(block)) if load <= sizes[k] else 0)
    print(f"J={blocks}  weights={weights}")
print("q =", q_value(n, d, parts), "(enumerated:", q_value_reference(n, d, parts), ")")

# With a single class the kernel collapses to C(n - r, c) c!, and summing over
# compositions recovers Robbins' C(r-1, c-1) C(n-r, c) c!.
n = 9
for r, c in [(3, 1), (4, 2), (5, 3)]:
    total = sum(q_value(n, 1, comp) for comp in compositions(r, c))
    print(f"r={r} c={c}: {total} == {binomial(r - 1, c - 1) * binomial(n - r, c) * factorial(c)}")
