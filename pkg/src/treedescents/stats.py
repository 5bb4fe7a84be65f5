"""Distributional analysis of the descent statistic.

Moments and probability masses stay exact rationals end to end; floating
point appears only in the normal-comparison diagnostics (the normal CDF,
KS and total-variation distances, and the dependency-criterion quantity).

For a single tree with root r the closed forms are

    E[descents]   = (n - 1) / 2
    Var[descents] = (2 * d_r + sum of d_v^2) / 12

with d_v the down-degree of v. For a forest the mean generalizes to
(edge count)/2 and the variance to (2 * sum of root degrees + sum of
d_v^2)/12: labels make cross-tree edge pairs behave exactly like disjoint
same-tree pairs, so only the per-tree terms survive. Tests pin the forest
extension against polynomial moments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import erf, factorial, sqrt

from . import kernels
from .errors import InputError
from .forest import RootedForest
from .polynomial import DescentPolynomial
from .rng import RNG_NAME


@dataclass(frozen=True)
class MomentSummary:
    """Exact mean and variance of the descent count, with provenance."""

    n: int
    mean: Fraction
    variance: Fraction
    source: str  # "closed-form" or "polynomial"


@dataclass(frozen=True)
class DescentPMF:
    """Exact probability masses a_k / n! on the support 0..edges."""

    probs: tuple[Fraction, ...]

    @property
    def support(self) -> range:
        return range(len(self.probs))


@dataclass(frozen=True)
class SampleRun:
    """Histogram of descent counts over seeded random labelings."""

    seed: int
    trials: int
    counts: tuple[int, ...]

    rng: str = RNG_NAME

    def masses(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.trials) for c in self.counts)


def closed_form_moments(forest: RootedForest) -> MomentSummary:
    """Moments from down-degrees alone, no polynomial needed."""
    two_droots = 2 * sum(len(forest.children_of(r)) for r in forest.roots)
    degree_squares = sum(len(c) ** 2 for c in forest.children)
    return MomentSummary(
        n=forest.n,
        mean=Fraction(forest.edge_count, 2),
        variance=Fraction(two_droots + degree_squares, 12),
        source="closed-form",
    )


def moments_from_poly(p: DescentPolynomial, n: int | None = None) -> MomentSummary:
    """Moments of the coefficient distribution, exact rationals."""
    if n is None:
        n = p.n
    total = factorial(n)
    if p.total() != total:
        raise InputError(
            f"coefficients sum to {p.total()}, expected {n}! = {total}"
        )
    first = Fraction(sum(k * c for k, c in enumerate(p.coeffs)), total)
    second = Fraction(sum(k * k * c for k, c in enumerate(p.coeffs)), total)
    return MomentSummary(n=n, mean=first, variance=second - first * first, source="polynomial")


def exact_pmf(p: DescentPolynomial, n: int | None = None) -> DescentPMF:
    if n is None:
        n = p.n
    total = factorial(n)
    if p.total() != total:
        raise InputError(
            f"coefficients sum to {p.total()}, expected {n}! = {total}"
        )
    return DescentPMF(tuple(Fraction(c, total) for c in p.coeffs))


def variance_lower_bound(n: int, max_down: int) -> Fraction:
    """(n + D^2 - D + 1)/12, valid for trees with n >= 2.

    Tight when the maximum down-degree D avoids the root and every other
    internal vertex has exactly one child (see broom_tree).
    """
    if n < 2:
        raise InputError(f"variance bound needs n >= 2, got {n}")
    if not 1 <= max_down <= n - 1:
        raise InputError(f"max down-degree {max_down} invalid for n = {n}")
    return Fraction(n + max_down * max_down - max_down + 1, 12)


def janson_quantity(count: int, degree: int, bound: float, sigma: float, m: int = 3) -> float:
    """Dependency-criterion diagnostic N * Delta^(m-1) * (A / sigma)^m.

    The sum of N bounded, locally dependent indicators is asymptotically
    normal when this quantity vanishes along the sequence for some m; a
    single evaluation is purely informational.
    """
    if sigma <= 0:
        raise InputError(f"sigma must be positive, got {sigma}")
    if m < 2:
        raise InputError(f"criterion exponent m must be >= 2, got {m}")
    return float(count) * float(degree) ** (m - 1) * (bound / sigma) ** m


@dataclass(frozen=True)
class PairTally:
    """Ordered edge-pair classification and the variance it reassembles.

    Values of E[X_k1 * X_k2] by pair type: 1/2 for equal edges, 1/3 when
    the edges hang from the same upper vertex, 1/6 when one edge's child
    is the other's parent (either order), 1/4 for vertex-disjoint pairs.
    """

    count_half: int
    count_third: int
    count_sixth: int
    count_quarter: int
    variance: Fraction


def pairwise_edge_expectations(tree: RootedForest) -> PairTally:
    """Classify all ordered edge pairs and reassemble the variance."""
    if len(tree.roots) != 1:
        raise InputError(
            f"pairwise tally takes a single tree, got {len(tree.roots)} components"
        )
    edges = tree.edges()
    half = third = sixth = quarter = 0
    for up1, lo1 in edges:
        for up2, lo2 in edges:
            if up1 == up2 and lo1 == lo2:
                half += 1
            elif up1 == up2:
                third += 1
            elif lo1 == up2 or up1 == lo2:
                sixth += 1
            else:
                quarter += 1
    m = len(edges)
    expectation_sum = (
        Fraction(half, 2) + Fraction(third, 3) + Fraction(sixth, 6) + Fraction(quarter, 4)
    )
    variance = expectation_sum - Fraction(m, 2) ** 2
    return PairTally(half, third, sixth, quarter, variance)


def sample_descents(forest: RootedForest, trials: int, seed: int) -> SampleRun:
    """Descent histogram over uniform random labelings.

    Labelings come from the seeded Fisher-Yates shuffle; identical
    (forest, trials, seed) triples give identical histograms on every
    backend and platform.
    """
    if trials < 1:
        raise InputError(f"trials must be >= 1, got {trials}")
    parents0 = [p - 1 for p in forest.parents]
    counts = kernels.sample_descent_histogram(parents0, trials, seed)
    return SampleRun(seed=seed, trials=trials, counts=tuple(int(c) for c in counts))


def normal_cdf(z: float) -> float:
    """Standard normal CDF via the error function.

    Phi(z) = (1 + erf(z / sqrt(2))) / 2; math.erf is accurate to double
    precision, far below the 1e-7 budget the diagnostics need.
    """
    return 0.5 * (1.0 + erf(z / sqrt(2.0)))


def _atom_masses(dist: "DescentPMF | SampleRun") -> tuple[Fraction, ...]:
    if isinstance(dist, DescentPMF):
        return dist.probs
    if isinstance(dist, SampleRun):
        return dist.masses()
    raise InputError(f"expected DescentPMF or SampleRun, got {type(dist).__name__}")


def ks_distance_to_normal(dist: "DescentPMF | SampleRun", mean: float, sd: float) -> float:
    """Sup distance between the standardized atomic CDF and the normal CDF.

    Evaluated one-sided at every support atom: both just before the atom
    (the left limit of the step CDF) and at it.
    """
    if sd <= 0:
        raise InputError(f"standard deviation must be positive, got {sd}")
    masses = _atom_masses(dist)
    cumulative = Fraction(0)
    worst = 0.0
    for k, p in enumerate(masses):
        target = normal_cdf((k - mean) / sd)
        before = float(cumulative)
        cumulative += p
        at = float(cumulative)
        worst = max(worst, abs(before - target), abs(at - target))
    return worst


def tv_to_binned_normal(dist: "DescentPMF | SampleRun", mean: float, sd: float) -> float:
    """Total variation against the normal binned to unit cells (k - 1/2, k + 1/2].

    Normal mass falling outside the support counts fully toward the
    distance.
    """
    if sd <= 0:
        raise InputError(f"standard deviation must be positive, got {sd}")
    masses = _atom_masses(dist)
    top = len(masses) - 1
    acc = normal_cdf((-0.5 - mean) / sd) + 1.0 - normal_cdf((top + 0.5 - mean) / sd)
    for k, p in enumerate(masses):
        cell = normal_cdf((k + 0.5 - mean) / sd) - normal_cdf((k - 0.5 - mean) / sd)
        acc += abs(float(p) - cell)
    return 0.5 * acc


def tv_distance(run: SampleRun, pmf: DescentPMF) -> Fraction:
    """Exact total-variation distance between an empirical run and a PMF."""
    empirical = run.masses()
    width = max(len(empirical), len(pmf.probs))
    acc = Fraction(0)
    for k in range(width):
        a = empirical[k] if k < len(empirical) else Fraction(0)
        b = pmf.probs[k] if k < len(pmf.probs) else Fraction(0)
        acc += abs(a - b)
    return acc / 2
