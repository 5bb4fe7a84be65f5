"""Descent statistics of labelings, and the two reference algorithms.

A labeling assigns the values 1..n bijectively to the vertices; a descent
is a non-root vertex whose label exceeds its parent's label (roots have no
parent, so they never contribute). The exhaustive sweep over all n!
labelings is the ground-truth algorithm; the vertex-deletion recurrence

    A_F(q) = sum over vertices v of q^(down-degree of v) * A_{F - v}(q)

removes the vertex labeled 1 and is memoized on the canonical code of the
unordered forest. Both agree with the rank DP wherever all are feasible.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

from . import kernels
from .errors import InputError, ResourceLimitError
from .forest import RootedForest, canonical_code, delete_vertex
from .polynomial import DescentPolynomial

DEFAULT_BRUTE_CAP = 10
BRUTE_CAP_ENV = "DESCENT_BRUTE_CAP"


def brute_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(BRUTE_CAP_ENV, DEFAULT_BRUTE_CAP))


def check_labeling(forest: RootedForest, w: Sequence[int]) -> tuple[int, ...]:
    """Validate that ``w`` is a bijection onto 1..n; returns it as a tuple."""
    labels = tuple(int(x) for x in w)
    if len(labels) != forest.n or sorted(labels) != list(range(1, forest.n + 1)):
        raise InputError(
            f"labeling must be a bijection onto 1..{forest.n}, got {labels}"
        )
    return labels


def descent_set(forest: RootedForest, w: Sequence[int]) -> set[int]:
    """Vertices whose label exceeds their parent's label (never roots)."""
    labels = check_labeling(forest, w)
    return {
        v
        for v, p in enumerate(forest.parents, start=1)
        if p != 0 and labels[v - 1] > labels[p - 1]
    }


def descent_count(forest: RootedForest, w: Sequence[int]) -> int:
    return len(descent_set(forest, w))


def complement_labeling(w: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """The reversal w'(x) = n + 1 - w(x); an involution.

    Complementing turns every descent into an ascent, which is why descent
    polynomials are palindromic.
    """
    labels = tuple(int(x) for x in w)
    if n is None:
        n = len(labels)
    if sorted(labels) != list(range(1, n + 1)):
        raise InputError(f"labeling must be a bijection onto 1..{n}, got {labels}")
    return tuple(n + 1 - x for x in labels)


def brute_force_poly(forest: RootedForest, cap: int | None = None) -> DescentPolynomial:
    """Exact polynomial by iterating all n! labelings (ground truth)."""
    limit = brute_cap(cap)
    if forest.n > limit:
        raise ResourceLimitError(
            f"brute force over {forest.n}! labelings exceeds cap {limit} "
            f"(raise {BRUTE_CAP_ENV} or pass a cap)"
        )
    parents0 = [p - 1 for p in forest.parents]
    hist = kernels.brute_force_histogram(parents0)
    return DescentPolynomial(tuple(int(c) for c in hist), forest.n)


class MemoStore:
    """Canonical-code keyed cache of descent polynomials.

    Concurrent reads are safe; writers need external exclusivity (a store
    per worker gives identical results). A size cap turns runaway growth
    into a resource error instead of memory exhaustion.
    """

    def __init__(self, max_states: int = 2_000_000):
        self._data: dict[str, tuple[int, ...]] = {}
        self.max_states = max_states
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._data)

    def get(self, code: str) -> tuple[int, ...] | None:
        found = self._data.get(code)
        if found is None:
            self.misses += 1
        else:
            self.hits += 1
        return found

    def put(self, code: str, coeffs: tuple[int, ...]) -> None:
        if len(self._data) >= self.max_states:
            raise ResourceLimitError(
                f"deletion memo reached {len(self._data)} stored forests"
            )
        self._data[code] = coeffs


def poly_by_deletion(
    forest: RootedForest,
    memo: MemoStore | None = None,
    use_memo: bool = True,
) -> DescentPolynomial:
    """Exact polynomial via the vertex-deletion recurrence.

    Memoization keys on the canonical code, which identifies unordered
    forests; with ``use_memo=False`` every subforest is recomputed (the
    results are identical, only the cost changes).
    """
    if use_memo and memo is None:
        memo = MemoStore()
    coeffs = _deletion_coeffs(forest, memo if use_memo else None)
    return DescentPolynomial(coeffs, forest.n)


def _deletion_coeffs(forest: RootedForest, memo: MemoStore | None) -> tuple[int, ...]:
    if forest.n == 0:
        return (1,)
    code = canonical_code(forest) if memo is not None else ""
    if memo is not None:
        cached = memo.get(code)
        if cached is not None:
            return cached
    out = [0] * (forest.edge_count + 1)
    for v in forest.vertices():
        shift = len(forest.children_of(v))
        sub, _ = delete_vertex(forest, v)
        for d, c in enumerate(_deletion_coeffs(sub, memo)):
            out[d + shift] += c
    coeffs = tuple(out)
    if memo is not None:
        memo.put(code, coeffs)
    return coeffs
