"""Exhaustive enumeration of unordered rooted trees up to isomorphism.

Trees are generated as canonical level sequences with the successor rule
of Beyer and Hedetniemi: start from the path (levels 1..n) and repeatedly
truncate the last vertex deeper than level 2, then tile the tail with the
segment starting at that vertex's parent. The walk visits each
isomorphism class of rooted trees on n vertices exactly once and ends at
the star.
"""

from __future__ import annotations

import os
from typing import Iterator

from .errors import InputError, ResourceLimitError
from .forest import RootedForest

DEFAULT_ENUM_CAP = 12
ENUM_CAP_ENV = "DESCENT_ENUM_CAP"


def enumeration_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))


def forest_from_level_sequence(levels: list[int]) -> RootedForest:
    """Tree from a preorder level sequence (root at level 1)."""
    parents = [0] * len(levels)
    at_level = [0] * (len(levels) + 2)
    for i, lvl in enumerate(levels):
        if lvl > 1:
            parents[i] = at_level[lvl - 1]
        at_level[lvl] = i + 1
    return RootedForest.from_parents(parents)


def enumerate_rooted_trees(n: int, cap: int | None = None) -> Iterator[RootedForest]:
    """Yield one representative per isomorphism class of rooted trees on n vertices."""
    limit = enumeration_cap(cap)
    if n < 1:
        raise InputError(f"tree size must be >= 1, got {n}")
    if n > limit:
        raise ResourceLimitError(
            f"enumeration size {n} exceeds cap {limit} (raise {ENUM_CAP_ENV} or pass a cap)"
        )
    levels = list(range(1, n + 1))
    while True:
        yield forest_from_level_sequence(levels)
        p = n - 1
        while p >= 0 and levels[p] <= 2:
            p -= 1
        if p < 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]
