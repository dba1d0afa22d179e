"""Exact integer helpers and the combinatorial streams used by the counting formulas.

Integers are plain Python ``int`` (arbitrary precision); exact rationals are
``fractions.Fraction``.  Both are immutable, so values can be shared freely
between threads and processes.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator

ExactRatio = Fraction


def binomial(a: int, b: int) -> int:
    """C(a, b) with the conventions C(k, -1) = 0 for k != -1 and C(-1, -1) = 1.

    Only ``a >= -1`` is accepted; anything lower means a summation bound went
    wrong upstream.
    """
    if a < -1:
        raise ValueError(f"binomial upper argument must be >= -1, got {a}")
    if a == -1:
        return 1 if b == -1 else 0
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def factorial(m: int) -> int:
    if m < 0:
        raise ValueError(f"factorial of negative number {m}")
    return math.factorial(m)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Yield every ordered tuple of ``parts`` positive integers summing to ``total``.

    Output is in lexicographic order.  ``compositions(0, 0)`` yields the single
    empty tuple; ``compositions(t, 0)`` with ``t > 0`` yields nothing.
    """
    if total < 0 or parts < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts:
        return
    # stars and bars: choose parts-1 cut points among total-1 gaps
    for cuts in itertools.combinations(range(1, total), parts - 1):
        prev = 0
        out = []
        for cut in cuts:
            out.append(cut - prev)
            prev = cut
        out.append(total - prev)
        yield tuple(out)


def block_assignments(c: int, d: int) -> Iterator[tuple[int, ...]]:
    """Yield all d**c maps from part index to block index, lexicographically.

    Entry ``i`` of the yielded tuple is the (1-based) block receiving part
    ``i + 1``.  Blocks may be empty; ``c == 0`` yields one empty assignment.
    """
    if d < 1:
        raise ValueError(f"need at least one block, got d={d}")
    yield from itertools.product(range(1, d + 1), repeat=c)


def blocks_of(assignment: tuple[int, ...], d: int) -> list[list[int]]:
    """Preimages J_1..J_d (1-based part indices) of a block assignment."""
    blocks: list[list[int]] = [[] for _ in range(d)]
    for i, k in enumerate(assignment, start=1):
        blocks[k - 1].append(i)
    return blocks


def partitions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` positive integers summing to ``total``."""

    def rec(remaining: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        # the largest part must leave room for slots-1 ones
        hi = min(cap, remaining - (slots - 1))
        lo = -(-remaining // slots)
        for first in range(hi, lo - 1, -1):
            for rest in rec(remaining - first, slots - 1, first):
                yield (first,) + rest

    if total < 0 or parts < 0:
        return
    yield from rec(total, parts, total)


def arrangements(multiset: tuple[int, ...]) -> int:
    """Number of distinct orderings of ``multiset``."""
    out = factorial(len(multiset))
    for _, group in itertools.groupby(sorted(multiset)):
        out //= factorial(sum(1 for _ in group))
    return out
