"""Exact values of a(n, d): permutations of 1..n with |p(i+d) - p(i)| != d.

d = 0 is the circular variant (cyclic positions, cyclic value differences),
d = 1 the classic Hertzsprung problem, d >= 2 the residue-class
inclusion-exclusion sum.  Everything stays in integers except the d = 0
closed form, which needs rationals for its (n / (n - r))**2 factor.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .combi import (
    arrangements,
    binomial,
    block_assignments,
    blocks_of,
    compositions,
    factorial,
    partitions,
)


@dataclass(frozen=True)
class CountSpec:
    """One problem instance; ``d == 0`` selects the circular table."""

    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.d < 0:
            raise ValueError(f"d must be >= 0, got {self.d}")


def residue_profile(n: int, d: int) -> list[int]:
    """Sizes of the classes {i <= n : i = k mod d} for k = 1..d (class d holds multiples of d)."""
    if d < 1:
        raise ValueError("residue classes need d >= 1")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    q, rem = divmod(n, d)
    return [q + 1 if k <= rem else q for k in range(1, d + 1)]


# -- the q kernel ------------------------------------------------------------

def _block_weight(size: int, members: int, load: int) -> int:
    # one residue block of `size` seats receiving `members` components covering `load` links
    if load > size:
        return 0
    return binomial(size - load, members) * factorial(members)


def q_value_reference(n: int, d: int, parts: Sequence[int]) -> int:
    """q_{n,d}(L) by enumerating all d**c block assignments.  Exponential; for tests."""
    sizes = residue_profile(n, d)
    total = 0
    for assignment in block_assignments(len(parts), d):
        term = 1
        for k, block in enumerate(blocks_of(assignment, d)):
            term *= _block_weight(sizes[k], len(block), sum(parts[i - 1] for i in block))
            if term == 0:
                break
        total += term
    return total


@lru_cache(maxsize=None)
def _q_multiset(n: int, d: int, key: tuple[int, ...]) -> int:
    sizes = residue_profile(n, d)
    values = sorted(set(key))
    counts = tuple(key.count(v) for v in values)

    @lru_cache(maxsize=None)
    def fill(k: int, remaining: tuple[int, ...]) -> int:
        # distribute the remaining labelled parts over blocks k..d-1
        if k == d - 1:
            return _block_weight(
                sizes[k], sum(remaining), sum(v * m for v, m in zip(values, remaining))
            )
        total = 0
        for take in itertools.product(*(range(m + 1) for m in remaining)):
            load = sum(v * t for v, t in zip(values, take))
            w = _block_weight(sizes[k], sum(take), load)
            if w == 0:
                continue
            for m, t in zip(remaining, take):
                w *= binomial(m, t)
            total += w * fill(k + 1, tuple(m - t for m, t in zip(remaining, take)))
        return total

    return fill(0, counts)


def q_value(n: int, d: int, parts: Sequence[int]) -> int:
    """q_{n,d}(L): weighted count of ways to spread the components L over the d residue blocks.

    Only the multiset of parts matters, so results are memoized on the sorted
    parts and computed by a dynamic program over blocks rather than by
    enumerating every assignment.
    """
    if any(p < 1 for p in parts):
        raise ValueError(f"parts must be positive, got {list(parts)}")
    return _q_multiset(n, d, tuple(sorted(parts)))


# -- closed forms for d = 0 and d = 1 ----------------------------------------

def _robbins_terms(n: int) -> Iterator[tuple[int, int, int]]:
    # (r, c, (-1)^r 2^c (n-r)! C(r-1, c-1) C(n-r, c)) for the shared double sum
    for r in range(n):
        for c in range(r + 1):
            t = binomial(r - 1, c - 1) * binomial(n - r, c)
            if t:
                yield r, c, (-1) ** r * 2**c * factorial(n - r) * t


def count_d1(n: int) -> int:
    """Robbins' formula for the linear table (OEIS A002464)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(t for _, _, t in _robbins_terms(n))


def count_d0_formula(n: int) -> int:
    """The circular closed form taken literally, for any n >= 1.

    It is only correct for n >= 3; at n = 1, 2 it returns -1 and -2.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = Fraction(0)
    for r, _, t in _robbins_terms(n):
        total += t * Fraction(n, n - r) ** 2
    total += (-1) ** n * 2 * n
    if total.denominator != 1:
        raise ArithmeticError(f"circular formula gave non-integer {total} at n={n}")
    return total.numerator


def count_d0(n: int) -> int:
    """Circular count (OEIS A089222); n = 1, 2 are answered directly."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 1
    if n == 2:
        return 0
    return count_d0_formula(n)


# -- general d ---------------------------------------------------------------

def _check_general(n: int, d: int) -> list[int]:
    if n < 1 or not 2 <= d <= n - 1:
        raise ValueError(f"general formula needs 2 <= d <= n-1, got n={n}, d={d}")
    return residue_profile(n, d)


def _outer_factor(n: int, sizes: Sequence[int], rs: Sequence[int], cs: Sequence[int]) -> int:
    # (-1)^r 2^c (n-r-c)! prod C(n_k - r_k, c_k); zero whenever some c_k > n_k - r_k
    prod = 1
    for size, r, c in zip(sizes, rs, cs):
        prod *= binomial(size - r, c)
        if prod == 0:
            return 0
    r, c = sum(rs), sum(cs)
    return (-1) ** r * 2**c * factorial(n - r - c) * prod


def count_general_reference(n: int, d: int) -> int:
    """The d >= 2 sum iterating literal compositions and every block assignment.

    Cross-checks :func:`count_general`; only practical for n up to about 10.
    """
    sizes = _check_general(n, d)
    rc_ranges = [[(r, c) for r in range(size) for c in range(r + 1)] for size in sizes]
    total = 0
    for choice in itertools.product(*rc_ranges):
        rs = [r for r, _ in choice]
        cs = [c for _, c in choice]
        outer = _outer_factor(n, sizes, rs, cs)
        if outer == 0:
            continue
        inner = 0
        for comps in itertools.product(*(compositions(r, c) for r, c in choice)):
            inner += q_value_reference(n, d, [l for comp in comps for l in comp])
        total += outer * inner
    return total


def _residue_options(size: int) -> list[tuple[int, int, tuple[int, ...], int]]:
    # every (r_k, c_k, partition, number of compositions with that partition) for one residue
    out = []
    for r in range(size):
        for c in range(r + 1):
            for part in partitions(r, c):
                out.append((r, c, part, arrangements(part)))
    return out


def count_general(n: int, d: int) -> int:
    """a(n, d) for 2 <= d <= n - 1.

    Compositions sharing a part multiset are grouped (q only sees the
    multiset), and q itself comes from the memoized kernel.
    """
    sizes = _check_general(n, d)
    options = [_residue_options(size) for size in sizes]
    total = 0
    for choice in itertools.product(*options):
        rs = [o[0] for o in choice]
        cs = [o[1] for o in choice]
        outer = _outer_factor(n, sizes, rs, cs)
        if outer == 0:
            continue
        mult = 1
        merged: list[int] = []
        for o in choice:
            mult *= o[3]
            merged.extend(o[2])
        total += outer * mult * q_value(n, d, merged)
    return total


def count_exact(spec: CountSpec | int, d: int | None = None) -> int:
    """Dispatch to the right engine.  Accepts a CountSpec or ``(n, d)``."""
    if not isinstance(spec, CountSpec):
        spec = CountSpec(spec, d)
    n, d = spec.n, spec.d
    if d == 0:
        return count_d0(n)
    if d == 1:
        return count_d1(n)
    if d >= n:
        # the condition ranges over 1 <= i <= n - d, which is empty
        return factorial(n)
    return count_general(n, d)
