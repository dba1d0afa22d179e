"""Brute-force counts by backtracking over permutations.

Positions are filled left to right and a value is rejected as soon as it
breaks the condition with an already placed partner, so whole subtrees are
pruned.  Positions that take part in no constraint at all (``p <= d`` and
``p + d > n``) are left out of the search and contribute a factorial factor
at the end.  This is counting, not a formula: every constrained position is
still enumerated value by value.
"""
from __future__ import annotations

import atexit
import threading
from concurrent.futures import Executor, ProcessPoolExecutor
from math import factorial
from typing import Sequence

MAX_N = 13


class OracleRefused(RuntimeError):
    """Raised when a brute-force run exceeds the practical size bound."""


def _check(n: int, d: int, force: bool) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if n > MAX_N and not force:
        raise OracleRefused(f"n={n} exceeds the brute-force bound {MAX_N}; pass force=True")


def _plan(n: int, d: int) -> tuple[list[int], list[tuple[int, ...]], set[int], int]:
    """Search order, partner slots per order step, forbidden gaps and free position count.

    Partner slots are indices into the search order (earlier steps only).
    """
    if d == 0:
        order = list(range(1, n + 1))
        partners: list[tuple[int, ...]] = [()]
        for p in range(2, n + 1):
            back = (p - 2,)
            if p == n and n > 2:
                back += (0,)  # wrap-around neighbour
            partners.append(back)
        return order, partners, {1, n - 1}, 0
    order = [p for p in range(1, n + 1) if p > d or p + d <= n]
    slot = {p: i for i, p in enumerate(order)}
    partners = [(slot[p - d],) if p > d else () for p in order]
    return order, partners, {d}, n - len(order)


def _count_from(n: int, partners: Sequence[tuple[int, ...]], bad: set[int],
                prefix: Sequence[int]) -> int:
    """Count completions of ``prefix`` (values at the first search steps)."""
    steps = len(partners)
    placed = [0] * steps
    used = [False] * (n + 1)
    for i, v in enumerate(prefix):
        placed[i] = v
        used[v] = True
    values = range(1, n + 1)

    def rec(i: int) -> int:
        if i == steps:
            return 1
        back = partners[i]
        total = 0
        for v in values:
            if used[v]:
                continue
            ok = True
            for j in back:
                if abs(v - placed[j]) in bad:
                    ok = False
                    break
            if not ok:
                continue
            if i + 1 == steps:
                total += 1
                continue
            used[v] = True
            placed[i] = v
            total += rec(i + 1)
            used[v] = False
        return total

    return rec(len(prefix))


def _prefixes(n: int, partners: Sequence[tuple[int, ...]], bad: set[int],
              depth: int) -> list[tuple[int, ...]]:
    """All valid value prefixes of the given length, in lexicographic order."""
    out: list[tuple[int, ...]] = [()]
    for i in range(min(depth, len(partners))):
        nxt = []
        for pre in out:
            for v in range(1, n + 1):
                if v in pre:
                    continue
                if any(abs(v - pre[j]) in bad for j in partners[i]):
                    continue
                nxt.append(pre + (v,))
        out = nxt
    return out


def oracle_count(n: int, d: int, force: bool = False) -> int:
    """Count permutations of 1..n satisfying the distance-d condition by brute force.

    ``d == 0`` uses the circular rule: cyclically adjacent positions may not
    hold values that differ by 1 modulo n.
    """
    _check(n, d, force)
    _, partners, bad, free = _plan(n, d)
    return _count_from(n, partners, bad, ()) * factorial(free)


def _count_chunk(n: int, partners, bad, prefixes) -> int:
    return sum(_count_from(n, partners, bad, pre) for pre in prefixes)


_pools: dict[int, ProcessPoolExecutor] = {}
_pools_lock = threading.Lock()


def _shared_pool(workers: int) -> ProcessPoolExecutor:
    with _pools_lock:
        pool = _pools.get(workers)
        if pool is None:
            pool = _pools[workers] = ProcessPoolExecutor(max_workers=workers)
        return pool


@atexit.register
def _shutdown_pools() -> None:
    with _pools_lock:
        for pool in _pools.values():
            pool.shutdown(wait=False, cancel_futures=True)
        _pools.clear()


def oracle_count_parallel(n: int, d: int, split_depth: int = 2, workers: int = 1,
                          force: bool = False, executor: Executor | None = None) -> int:
    """Same count as :func:`oracle_count`, split into independent subtrees.

    Every valid prefix of length ``split_depth`` roots one subtree; prefixes
    are dealt round-robin into ``workers`` chunks and the chunk counts summed.
    With ``workers == 1`` and no executor everything runs in this process.
    """
    _check(n, d, force)
    if split_depth < 0 or workers < 1:
        raise ValueError("split_depth must be >= 0 and workers >= 1")
    _, partners, bad, free = _plan(n, d)
    prefixes = _prefixes(n, partners, bad, split_depth)
    chunks = [prefixes[i::workers] for i in range(workers)]
    chunks = [c for c in chunks if c]
    if executor is None and workers > 1:
        executor = _shared_pool(workers)
    if executor is None:
        total = sum(_count_chunk(n, partners, bad, c) for c in chunks)
    else:
        futures = [executor.submit(_count_chunk, n, partners, bad, c) for c in chunks]
        total = sum(f.result() for f in futures)
    return total * factorial(free)


def inverse_condition_count(n: int, d: int, force: bool = False) -> int:
    """Count permutations where values i and i + d never sit d positions apart.

    Built position by position like the main oracle, but the test looks up
    where the neighbouring *values* were placed, so it exercises the
    inverse form of the condition directly.
    """
    _check(n, d, force)
    if d < 1:
        raise ValueError("inverse condition needs d >= 1")
    pos_of = [0] * (n + 1)

    def rec(p: int) -> int:
        if p > n:
            return 1
        total = 0
        for v in range(1, n + 1):
            if pos_of[v]:
                continue
            ok = True
            for w in (v - d, v + d):
                if 1 <= w <= n and pos_of[w] and abs(pos_of[w] - p) == d:
                    ok = False
                    break
            if ok:
                pos_of[v] = p
                total += rec(p + 1)
                pos_of[v] = 0
        return total

    return rec(1)
