"""Descent polynomials as exact coefficient vectors, plus sequence checks.

The k-th coefficient counts labelings of the source forest with exactly k
descents, so the coefficients of a forest on n vertices and m edges form a
length m+1 vector of nonnegative integers summing to n!. Everything here
is arbitrary-precision; no floats enter this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .errors import InputError


@dataclass(frozen=True)
class DescentPolynomial:
    """Coefficient vector of the descent-generating polynomial of a forest."""

    coeffs: tuple[int, ...]
    n: int

    @property
    def edges(self) -> int:
        return len(self.coeffs) - 1

    def total(self) -> int:
        return sum(self.coeffs)

    def validate(self) -> None:
        """Check the structural invariants; raises InputError on failure."""
        if self.total() != factorial(self.n):
            raise InputError(
                f"coefficients sum to {self.total()}, expected {self.n}! = {factorial(self.n)}"
            )
        if any(c < 0 for c in self.coeffs):
            raise InputError("negative coefficient in descent polynomial")
        if self.n >= 1 and (self.coeffs[0] < 1 or self.coeffs[-1] < 1):
            raise InputError("extreme coefficients of a nonempty forest must be positive")

    def to_json_dict(self) -> dict:
        """JSON form; coefficients as decimal strings to dodge integer-width loss."""
        return {
            "n": self.n,
            "edges": self.edges,
            "coeffs": [str(c) for c in self.coeffs],
        }

    def to_csv(self) -> str:
        lines = ["k,coefficient"]
        lines.extend(f"{k},{c}" for k, c in enumerate(self.coeffs))
        return "\n".join(lines) + "\n"


def _coeffs(p: "DescentPolynomial | Sequence[int]") -> tuple[int, ...]:
    if isinstance(p, DescentPolynomial):
        return p.coeffs
    return tuple(int(c) for c in p)


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Schoolbook product of coefficient vectors."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def forest_product(parts: Sequence[tuple["DescentPolynomial | Sequence[int]", int]]) -> DescentPolynomial:
    """Combine component-tree polynomials into the forest polynomial.

    The forest value multiplies component polynomials and scales by the
    multinomial coefficient over component sizes, which distributes the
    global labels among components.
    """
    if not parts:
        raise InputError("forest_product needs at least one component")
    sizes = [size for _, size in parts]
    if any(s < 1 for s in sizes):
        raise InputError("component sizes must be >= 1")
    total = sum(sizes)
    multinomial = factorial(total)
    for s in sizes:
        multinomial //= factorial(s)
    coeffs: list[int] = [1]
    for poly, _ in parts:
        coeffs = convolve(coeffs, _coeffs(poly))
    return DescentPolynomial(tuple(c * multinomial for c in coeffs), total)


def symmetry_violation(p: "DescentPolynomial | Sequence[int]") -> int | None:
    """Smallest k with a_k != a_{m-k}, or None if palindromic."""
    c = _coeffs(p)
    for k in range(len(c) // 2):
        if c[k] != c[len(c) - 1 - k]:
            return k
    return None


def is_symmetric(p: "DescentPolynomial | Sequence[int]") -> bool:
    return symmetry_violation(p) is None


def unimodality_violation(p: "DescentPolynomial | Sequence[int]") -> int | None:
    """First index that rises again after the sequence has fallen."""
    c = _coeffs(p)
    fallen = False
    for k in range(1, len(c)):
        if c[k] < c[k - 1]:
            fallen = True
        elif c[k] > c[k - 1] and fallen:
            return k
    return None


def is_unimodal(p: "DescentPolynomial | Sequence[int]") -> bool:
    return unimodality_violation(p) is None


def log_concavity_violation(p: "DescentPolynomial | Sequence[int]") -> int | None:
    """First interior k with a_k^2 < a_{k-1} * a_{k+1}."""
    c = _coeffs(p)
    for k in range(1, len(c) - 1):
        if c[k] * c[k] < c[k - 1] * c[k + 1]:
            return k
    return None


def is_log_concave(p: "DescentPolynomial | Sequence[int]") -> bool:
    return log_concavity_violation(p) is None


def symmetric_unimodal_product_check(
    p: "DescentPolynomial | Sequence[int]", q: "DescentPolynomial | Sequence[int]"
) -> bool:
    """Multiply two symmetric unimodal nonnegative vectors and check the product.

    Precondition violations raise InputError; the returned boolean is the
    verdict on the product itself (expected true: the product of symmetric
    unimodal polynomials with nonnegative coefficients stays symmetric and
    unimodal).
    """
    for name, poly in (("first", p), ("second", q)):
        c = _coeffs(poly)
        if any(x < 0 for x in c):
            raise InputError(f"{name} factor has a negative coefficient")
        if not is_symmetric(c):
            raise InputError(f"{name} factor is not symmetric")
        if not is_unimodal(c):
            raise InputError(f"{name} factor is not unimodal")
    product = convolve(_coeffs(p), _coeffs(q))
    return is_symmetric(product) and is_unimodal(product)
