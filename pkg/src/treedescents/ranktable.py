"""Rank-descent dynamic programming: the scaling algorithm for one tree.

The table A(j, d) counts labelings of a tree that put the root at rank j
(i.e. label j) with d descents in the subtree. Leaves start at A(1, 0) = 1
and completed child tables merge into their parent one at a time. Writing
b = j - 1 for the number of values below the root, attaching a child
subtree S (size s, table A_S) to a partial tree U (size u, table A_U,
shared root r) gives

    A(b + 1, d) = sum over a, i, d_U, d_S of
        C(b, a) * C(n - 1 - b, s - a) * A_U(b - a + 1, d_U) * A_S(i, d_S)

where a of S's values land below r, i is the S-root's rank inside S, and
d = d_U + d_S + [i > a] (the new edge is a descent exactly when the child
subtree's root value exceeds r's value). Splitting A_S by the prefix sums
L(a, e) = sum_{i <= a} A_S(i, e) and H = column totals - L, and rescaling
rows by binomials, turns the update into a plain 2D convolution:

    P(b_U, d_U) = C(u-1, b_U) * A_U(b_U + 1, d_U)
    Q(a, e)     = C(s, a) * (L(a, e) + H(a, e - 1))
    A(b + 1, d) = C(n-1, s) * (P ** Q)(b, d) / C(n-1, b)

Small merges run the convolution as nested loops; large ones pack both
operands into single big integers (Kronecker substitution, slot width
sized to the worst-case coefficient) and do one big multiplication, which
GMP accelerates when gmpy2 is installed. All arithmetic is exact.

Tables are pure data once built; every function here is safe to call from
multiple threads on distinct inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .errors import InputError
from .forest import RootedForest
from .polynomial import DescentPolynomial, forest_product

try:
    from gmpy2 import mpz as _mpz

    _HAVE_GMPY2 = True
except ImportError:
    _HAVE_GMPY2 = False

# Below this many schoolbook multiply-adds the loop kernel beats packing.
LOOP_CUTOFF = 65536

# Operand bit length beyond which the packed product goes through GMP.
_GMP_BITS = 1 << 16


@dataclass(frozen=True)
class RankDescentTable:
    """A(j, d) for one tree: rows[j - 1][d], 1 <= j <= n, 0 <= d <= n - 1."""

    rows: tuple[tuple[int, ...], ...]
    n: int

    def entry(self, j: int, d: int) -> int:
        return self.rows[j - 1][d]

    def polynomial(self) -> DescentPolynomial:
        """Marginalize over the root rank."""
        coeffs = [0] * (self.n if self.n else 1)
        for row in self.rows:
            for d, v in enumerate(row):
                coeffs[d] += v
        return DescentPolynomial(tuple(coeffs), self.n)

    def validate(self) -> None:
        total = sum(sum(row) for row in self.rows)
        if total != factorial(self.n):
            raise InputError(f"rank table sums to {total}, expected {self.n}!")


def poly_by_rank_dp(tree: RootedForest) -> RankDescentTable:
    """Build the rank-descent table of a single tree bottom-up."""
    if len(tree.roots) != 1:
        raise InputError(
            f"rank DP takes a single tree, got {len(tree.roots)} components"
        )
    root = tree.roots[0]
    order = tree.subtree_order(root)
    tables: dict[int, list[list[int]]] = {}
    for v in reversed(order):
        table = [[1]]
        for c in tree.children_of(v):
            table = _merge_tables(table, tables.pop(c))
        tables[v] = table
    rows = tables[root]
    return RankDescentTable(tuple(tuple(r) for r in rows), tree.n)


def descent_poly(forest: RootedForest) -> DescentPolynomial:
    """Default engine: rank DP per component, multinomial product across them."""
    if forest.n == 0:
        return DescentPolynomial((1,), 0)
    parts = [
        (poly_by_rank_dp(component).polynomial(), component.n)
        for component in forest.components()
    ]
    return forest_product(parts)


def _merge_tables(
    a_up: list[list[int]], a_sub: list[list[int]], force: str | None = None
) -> list[list[int]]:
    """Attach a completed child table to a partial tree's table.

    ``force`` pins the general kernel to "loops" or "kronecker" for
    benchmarks and cross-validation; by default the bare-root and leaf
    special cases skip the convolution entirely.
    """
    u = len(a_up)
    s = len(a_sub)
    if force is None:
        if u == 1:
            return _merge_onto_bare_root(a_sub)
        if s == 1:
            return _merge_leaf(a_up)
    n_total = u + s
    low, high = _prefix_split(a_sub)
    comb_u = [comb(u - 1, b) for b in range(u)]
    comb_s = [comb(s, a) for a in range(s + 1)]
    p_rows = [[comb_u[b] * x for x in a_up[b]] for b in range(u)]
    q_rows = [
        [
            comb_s[a]
            * ((low[a][e] if e < s else 0) + (high[a][e - 1] if e >= 1 else 0))
            for e in range(s + 1)
        ]
        for a in range(s + 1)
    ]
    if force == "loops" or (force is None and u * u * (s + 1) * (s + 1) <= LOOP_CUTOFF):
        conv = _conv2d_loops(p_rows, q_rows, n_total)
    else:
        conv = _conv2d_kronecker(p_rows, q_rows, n_total)
    scale = comb(n_total - 1, s)
    out = []
    for b in range(n_total):
        divisor = comb(n_total - 1, b)
        out.append([(scale * v) // divisor if v else 0 for v in conv[b]])
    return out


def _prefix_split(a_sub: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """L(a, e) = labelings with S-root rank <= a; H = column totals - L."""
    s = len(a_sub)
    low = [[0] * s]
    for i in range(s):
        low.append([low[i][e] + a_sub[i][e] for e in range(s)])
    totals = low[s]
    high = [[totals[e] - row[e] for e in range(s)] for row in low]
    return low, high


def _merge_onto_bare_root(a_sub: list[list[int]]) -> list[list[int]]:
    # u == 1: every binomial cancels and A(b, d) = L(b, d) + H(b, d - 1).
    s = len(a_sub)
    totals = [0] * s
    for row in a_sub:
        for e in range(s):
            totals[e] += row[e]
    out = []
    run = [0] * s
    for a in range(s + 1):
        if a > 0:
            prev = a_sub[a - 1]
            run = [run[e] + prev[e] for e in range(s)]
        row = [0] * (s + 1)
        for d in range(s + 1):
            v = run[d] if d < s else 0
            if d >= 1:
                v += totals[d - 1] - run[d - 1]
            row[d] = v
        out.append(row)
    return out


def _merge_leaf(a_up: list[list[int]]) -> list[list[int]]:
    # s == 1: b ways to put the leaf's value below the root (no descent),
    # u - b ways above it (one new descent).
    u = len(a_up)
    out = []
    for b in range(u + 1):
        row = [0] * (u + 1)
        for d in range(u + 1):
            v = 0
            if b >= 1 and d < u:
                v += b * a_up[b - 1][d]
            if b < u and d >= 1:
                v += (u - b) * a_up[b][d - 1]
            row[d] = v
        out.append(row)
    return out


def _conv2d_loops(
    p_rows: list[list[int]], q_rows: list[list[int]], n_total: int
) -> list[list[int]]:
    out = [[0] * n_total for _ in range(n_total)]
    for bu, prow in enumerate(p_rows):
        for du, x in enumerate(prow):
            if not x:
                continue
            for a, qrow in enumerate(q_rows):
                target = out[bu + a]
                for e, y in enumerate(qrow):
                    if y:
                        target[du + e] += x * y
    return out


def _conv2d_kronecker(
    p_rows: list[list[int]], q_rows: list[list[int]], n_total: int
) -> list[list[int]]:
    """2D convolution through one big-integer multiplication.

    Both tables are laid out little-endian with a fixed byte-aligned slot
    per cell and row stride ``n_total`` (columns can never carry into the
    next row because every convolution coefficient is bounded by
    sum(P) * sum(Q), which sizes the slot).
    """
    sum_p = sum(map(sum, p_rows))
    sum_q = sum(map(sum, q_rows))
    slot_bytes = ((sum_p * sum_q).bit_length() + 8) // 8
    stride = n_total * slot_bytes

    def pack(rows: list[list[int]]) -> int:
        buf = bytearray(len(rows) * stride)
        for r, row in enumerate(rows):
            base = r * stride
            for c, v in enumerate(row):
                if v:
                    off = base + c * slot_bytes
                    buf[off : off + slot_bytes] = v.to_bytes(slot_bytes, "little")
        return int.from_bytes(buf, "little")

    x = pack(p_rows)
    y = pack(q_rows)
    if _HAVE_GMPY2 and x.bit_length() + y.bit_length() > _GMP_BITS:
        z = int(_mpz(x) * _mpz(y))
    else:
        z = x * y
    raw = z.to_bytes(n_total * stride, "little")
    out = []
    for b in range(n_total):
        base = b * stride
        out.append(
            [
                int.from_bytes(raw[base + d * slot_bytes : base + (d + 1) * slot_bytes], "little")
                for d in range(n_total)
            ]
        )
    return out
