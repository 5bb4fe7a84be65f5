"""Pure-Python twins of the compiled kernels.

Slower but semantically identical: same permutation order is irrelevant
for the exhaustive histogram, and the sampling path consumes the exact
same xoshiro256** stream as the compiled version.
"""

from __future__ import annotations

from itertools import permutations
from math import factorial
from operator import gt, itemgetter

from .rng import Xoshiro256StarStar


def rng_stream(seed: int, count: int) -> list[int]:
    rng = Xoshiro256StarStar(seed)
    return [rng.next_u64() for _ in range(count)]


def brute_force_histogram(parents: list[int]) -> list[int]:
    """Histogram of descent counts over all n! labelings of a forest.

    ``parents`` holds 0-based parent indices with -1 for roots.
    """
    n = len(parents)
    pairs = [(v, p) for v, p in enumerate(parents) if p >= 0]
    m = len(pairs)
    hist = [0] * (m + 1)
    if m == 0:
        hist[0] = factorial(n)
        return hist
    if m == 1:
        (c, p) = pairs[0]
        for perm in permutations(range(n)):
            hist[perm[c] > perm[p]] += 1
        return hist
    get_children = itemgetter(*(c for c, _ in pairs))
    get_parents = itemgetter(*(p for _, p in pairs))
    for perm in permutations(range(n)):
        hist[sum(map(gt, get_children(perm), get_parents(perm)))] += 1
    return hist


def sample_descent_histogram(parents: list[int], trials: int, seed: int) -> list[int]:
    """Histogram of descent counts over ``trials`` seeded random labelings."""
    n = len(parents)
    if n == 0:
        return [trials]
    pairs = [(v, p) for v, p in enumerate(parents) if p >= 0]
    hist = [0] * (len(pairs) + 1)
    rng = Xoshiro256StarStar(seed)
    for _ in range(trials):
        perm = list(range(n))
        rng.shuffle(perm)
        hist[sum(1 for c, p in pairs if perm[c] > perm[p])] += 1
    return hist
