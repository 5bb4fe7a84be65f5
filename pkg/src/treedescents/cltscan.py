"""Normality scans across tree families of growing size.

For each size the scan builds the family member, computes the maximum
down-degree, the exact closed-form variance, the dependency-criterion
quantity, and the distance between the standardized descent distribution
and the standard normal (from the exact PMF in exact mode, from seeded
samples in monte-carlo mode). Standardization always uses the closed-form
moments so the convergence signal carries no estimation noise.

Rows are independent and could be computed in parallel; the report
assembles them in size order, so output never depends on scheduling.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

from .errors import InputError, ResourceLimitError
from .families import family_member
from .forest import line_graph, max_degree, max_down_degree
from .ranktable import descent_poly
from .rng import RNG_NAME, derive_seed
from .stats import (
    closed_form_moments,
    exact_pmf,
    janson_quantity,
    ks_distance_to_normal,
    sample_descents,
    tv_to_binned_normal,
)

DEFAULT_EXACT_CAP = 1000

CSV_HEADER = "n,D_n,sigma2_num,sigma2_den,ks,tv,janson_m,janson_value,hypothesis_flag"


def format_float(x: float) -> str:
    """Canonical 12-significant-digit rendering used in all emissions."""
    return f"{x:.12g}"


@dataclass(frozen=True)
class ScanRow:
    n: int
    max_down: int
    sigma2: Fraction
    ks: float
    tv: float
    janson: float
    hypothesis_ok: bool


@dataclass(frozen=True)
class NormalityReport:
    family: str
    mode: str
    janson_m: int
    hyp_c: float
    hyp_epsilon: float
    seed: int
    trials: int | None
    rng: str
    rows: tuple[ScanRow, ...]

    @property
    def ks_strictly_decreasing(self) -> bool:
        return all(b.ks < a.ks for a, b in zip(self.rows, self.rows[1:]))

    @property
    def hypothesis_all_satisfied(self) -> bool:
        return all(row.hypothesis_ok for row in self.rows)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "kind": "normality-report",
            "family": self.family,
            "mode": self.mode,
            "janson_m": self.janson_m,
            "hypothesis_c": float(format_float(self.hyp_c)),
            "hypothesis_epsilon": float(format_float(self.hyp_epsilon)),
            "seed": self.seed,
            "trials": self.trials,
            "rng": self.rng,
            "rows": [
                {
                    "n": row.n,
                    "D_n": row.max_down,
                    "sigma2_num": row.sigma2.numerator,
                    "sigma2_den": row.sigma2.denominator,
                    "ks": float(format_float(row.ks)),
                    "tv": float(format_float(row.tv)),
                    "janson_m": self.janson_m,
                    "janson_value": float(format_float(row.janson)),
                    "hypothesis_flag": "satisfied" if row.hypothesis_ok else "violated",
                }
                for row in self.rows
            ],
            "verdicts": {
                "ks_strictly_decreasing": self.ks_strictly_decreasing,
                "hypothesis_all_satisfied": self.hypothesis_all_satisfied,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        for row in self.rows:
            lines.append(
                ",".join(
                    (
                        str(row.n),
                        str(row.max_down),
                        str(row.sigma2.numerator),
                        str(row.sigma2.denominator),
                        format_float(row.ks),
                        format_float(row.tv),
                        str(self.janson_m),
                        format_float(row.janson),
                        "satisfied" if row.hypothesis_ok else "violated",
                    )
                )
            )
        return "\n".join(lines) + "\n"


def clt_scan(
    family: str,
    sizes: "list[int] | tuple[int, ...]",
    mode: str = "exact",
    seed: int = 0,
    trials: int = 100_000,
    janson_m: int = 3,
    hyp_c: float = 1.0,
    hyp_epsilon: float = 0.25,
    exact_cap: int = DEFAULT_EXACT_CAP,
) -> NormalityReport:
    """Run the scan; see the module docstring for the per-row contents."""
    if not sizes:
        raise InputError("scan needs at least one size")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise InputError(f"sizes must be strictly increasing, got {list(sizes)}")
    if mode not in ("exact", "monte-carlo"):
        raise InputError(f"mode must be 'exact' or 'monte-carlo', got {mode!r}")
    if min(sizes) < 2:
        raise InputError("scan sizes must be >= 2 (a single vertex has no descents)")

    rows = []
    for n in sizes:
        tree = family_member(family, n, derive_seed(seed, n, 1))
        moments = closed_form_moments(tree)
        sd = sqrt(float(moments.variance))
        if sd == 0.0:
            raise InputError(f"degenerate descent distribution at size {n}")
        if mode == "exact":
            if n > exact_cap:
                raise ResourceLimitError(
                    f"exact mode at size {n} exceeds cap {exact_cap}"
                )
            dist = exact_pmf(descent_poly(tree))
        else:
            dist = sample_descents(tree, trials, derive_seed(seed, n, 2))
        mean = float(moments.mean)
        rows.append(
            ScanRow(
                n=n,
                max_down=max_down_degree(tree),
                sigma2=moments.variance,
                ks=ks_distance_to_normal(dist, mean, sd),
                tv=tv_to_binned_normal(dist, mean, sd),
                janson=janson_quantity(
                    tree.edge_count, max_degree(line_graph(tree)), 1.0, sd, janson_m
                ),
                hypothesis_ok=max_down_degree(tree) <= hyp_c * n ** (0.5 - hyp_epsilon),
            )
        )
    return NormalityReport(
        family=family,
        mode=mode,
        janson_m=janson_m,
        hyp_c=hyp_c,
        hyp_epsilon=hyp_epsilon,
        seed=seed,
        trials=trials if mode == "monte-carlo" else None,
        rng=RNG_NAME,
        rows=tuple(rows),
    )
