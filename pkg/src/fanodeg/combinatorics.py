"""Lazy enumeration of k-subsets and weak compositions, plus exact binomials.

Both streams are lexicographic. Index sets are tuples of 1-based integers,
compositions are tuples of non-negative integers.
"""
from __future__ import annotations

import math
from typing import Iterator, Optional, Tuple

from .errors import InvalidArgument

IndexSet = Tuple[int, ...]
Composition = Tuple[int, ...]


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient; zero when ``b > a``."""
    if a < 0 or b < 0:
        raise InvalidArgument(f"binomial({a}, {b}) needs non-negative arguments")
    return math.comb(a, b)


def complement(members: IndexSet, n_plus_1: int) -> IndexSet:
    """Sorted complement of ``members`` inside ``{1, ..., n_plus_1}``."""
    inside = set(members)
    return tuple(j for j in range(1, n_plus_1 + 1) if j not in inside)


def unrank_index_set(rank: int, n_plus_1: int, k_plus_1: int) -> IndexSet:
    """The ``rank``-th (0-based) subset in lexicographic order."""
    total = math.comb(n_plus_1, k_plus_1)
    if not 0 <= rank < total:
        raise InvalidArgument(f"rank {rank} outside [0, {total})")
    members = []
    x = 1
    for slot in range(k_plus_1, 0, -1):
        # skip every block of subsets that starts with x
        while True:
            block = math.comb(n_plus_1 - x, slot - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        members.append(x)
        x += 1
    return tuple(members)


def _check_subset_args(n_plus_1: int, k_plus_1: int) -> None:
    if n_plus_1 < 1 or k_plus_1 < 1:
        raise InvalidArgument("set and subset sizes must be positive")
    if k_plus_1 > n_plus_1:
        raise InvalidArgument(
            f"cannot choose {k_plus_1} elements out of {n_plus_1}"
        )


def enumerate_index_sets(
    n_plus_1: int, k_plus_1: int, lo: int = 0, hi: Optional[int] = None
) -> Iterator[IndexSet]:
    """Yield the ``k_plus_1``-subsets of ``{1..n_plus_1}`` with rank in ``[lo, hi)``.

    The default range covers all ``C(n_plus_1, k_plus_1)`` subsets. Starting
    at ``lo`` costs one unranking, not a scan from the beginning.
    """
    _check_subset_args(n_plus_1, k_plus_1)
    total = math.comb(n_plus_1, k_plus_1)
    hi = total if hi is None else min(hi, total)
    if lo < 0 or lo > hi:
        raise InvalidArgument(f"bad rank range [{lo}, {hi})")
    if lo == hi:
        return
    current = list(unrank_index_set(lo, n_plus_1, k_plus_1))
    r = k_plus_1
    for _ in range(hi - lo):
        yield tuple(current)
        # successor: bump the rightmost entry that still has room
        i = r - 1
        while i >= 0 and current[i] == n_plus_1 - r + 1 + i:
            i -= 1
        if i < 0:
            return
        current[i] += 1
        for j in range(i + 1, r):
            current[j] = current[j - 1] + 1


def enumerate_compositions(d: int, parts: int) -> Iterator[Composition]:
    """Yield every tuple of ``parts`` non-negative integers summing to ``d``.

    There are ``C(d + parts - 1, parts - 1)`` of them.

    >>> list(enumerate_compositions(2, 2))
    [(0, 2), (1, 1), (2, 0)]
    """
    if parts < 1:
        raise InvalidArgument("a composition needs at least one part")
    if d < 0:
        raise InvalidArgument("cannot compose a negative integer")
    yield from _compositions(d, parts)


def _compositions(d: int, parts: int) -> Iterator[Composition]:
    if parts == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _compositions(d - first, parts - 1):
            yield (first,) + rest
