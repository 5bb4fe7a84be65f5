"""Parametric tree families and seeded random labeled trees.

Deterministic families (path, star, complete d-ary, caterpillar, broom)
fix the vertex numbering, so repeated builds are identical. Random trees
decode a uniform Pruefer sequence and are rooted at vertex 1; the same
(size, seed) pair always yields the same tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .forest import RootedForest
from .rng import Xoshiro256StarStar


def path_tree(n: int) -> RootedForest:
    """Chain of n vertices rooted at one end."""
    _require_size(n)
    return RootedForest.from_parents([i - 1 for i in range(1, n + 1)])


def star_tree(n: int) -> RootedForest:
    """Root with n-1 leaf children."""
    _require_size(n)
    return RootedForest.from_parents([0] + [1] * (n - 1))


def complete_dary_tree(d: int, n: int) -> RootedForest:
    """Complete d-ary tree on n vertices, filled in level order."""
    _require_size(n)
    if d < 1:
        raise InputError(f"arity must be >= 1, got {d}")
    return RootedForest.from_parents([0] + [(i - 2) // d + 1 for i in range(2, n + 1)])


def caterpillar_tree(spine: int, legs: int) -> RootedForest:
    """Spine path with ``legs`` leaf children on every spine vertex."""
    _require_size(spine)
    if legs < 0:
        raise InputError(f"legs per vertex must be >= 0, got {legs}")
    parents = [i - 1 for i in range(1, spine + 1)]
    for j in range(1, spine + 1):
        parents.extend([j] * legs)
    return RootedForest.from_parents(parents)


def broom_tree(handle: int, bristles: int) -> RootedForest:
    """Handle path whose bottom vertex carries ``bristles`` leaves.

    With bristles >= 2 and handle >= 2 this family makes the variance
    lower bound (n + D^2 - D + 1)/12 tight: the maximum down-degree sits
    away from the root and every other internal vertex has one child.
    """
    _require_size(handle)
    if bristles < 0:
        raise InputError(f"bristle count must be >= 0, got {bristles}")
    parents = [i - 1 for i in range(1, handle + 1)]
    parents.extend([handle] * bristles)
    return RootedForest.from_parents(parents)


def random_labeled_tree(n: int, seed: int) -> RootedForest:
    """Uniform labeled tree on n vertices via a Pruefer sequence, rooted at 1.

    Children are ordered by vertex id; identical (n, seed) pairs give
    identical trees.
    """
    _require_size(n)
    if n == 1:
        return RootedForest.from_parents([0])
    if n == 2:
        return RootedForest.from_parents([0, 1])
    rng = Xoshiro256StarStar(seed)
    sequence = [1 + rng.bounded(n) for _ in range(n - 2)]
    return _rooted_from_edges(n, _prufer_decode(n, sequence))


def _prufer_decode(n: int, sequence: list[int]) -> list[tuple[int, int]]:
    degree = [1] * (n + 1)
    for v in sequence:
        degree[v] += 1
    edges = []
    # min-leaf scan with a moving pointer; classic linear decode
    ptr = 1
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for v in sequence:
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n))
    return edges


def _rooted_from_edges(n: int, edges: list[tuple[int, int]]) -> RootedForest:
    adjacency: list[list[int]] = [[] for _ in range(n + 1)]
    for a, b in edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    parents = [0] * n
    stack = [1]
    seen = [False] * (n + 1)
    seen[1] = True
    while stack:
        v = stack.pop()
        for w in sorted(adjacency[v], reverse=True):
            if not seen[w]:
                seen[w] = True
                parents[w - 1] = v
                stack.append(w)
    return RootedForest.from_parents(parents)


@dataclass(frozen=True)
class TreeFamilySpec:
    """Parsed family spec string, e.g. ``dary:3:121`` or ``prufer:200:seed=7``."""

    kind: str
    args: tuple[int, ...]
    seed: int = 0

    def build(self) -> RootedForest:
        if self.kind == "path":
            return path_tree(self.args[0])
        if self.kind == "star":
            return star_tree(self.args[0])
        if self.kind == "dary":
            return complete_dary_tree(self.args[0], self.args[1])
        if self.kind == "caterpillar":
            return caterpillar_tree(self.args[0], self.args[1])
        if self.kind == "broom":
            return broom_tree(self.args[0], self.args[1])
        if self.kind == "prufer":
            return random_labeled_tree(self.args[0], self.seed)
        raise InputError(f"unknown family {self.kind!r}")


_ARITY = {"path": 1, "star": 1, "dary": 2, "caterpillar": 2, "broom": 2, "prufer": 1}


def parse_family(text: str) -> TreeFamilySpec:
    parts = text.split(":")
    kind = parts[0]
    if kind not in _ARITY:
        raise InputError(f"unknown family {kind!r} in spec {text!r}")
    seed = 0
    rest = parts[1:]
    if rest and rest[-1].startswith("seed="):
        seed = _parse_int(rest[-1][5:], text)
        rest = rest[:-1]
    if len(rest) != _ARITY[kind]:
        raise InputError(
            f"family {kind!r} takes {_ARITY[kind]} integer parameter(s), got {len(rest)} in {text!r}"
        )
    return TreeFamilySpec(kind, tuple(_parse_int(p, text) for p in rest), seed)


def generate_family(spec: "TreeFamilySpec | str") -> RootedForest:
    """Build the tree described by a spec object or spec string."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    return spec.build()


def family_member(template: str, n: int, seed: int = 0) -> RootedForest:
    """Instantiate a size-parameterized family template at size n.

    Scan templates omit the size slot: ``path``, ``star``, ``dary:2`` or
    ``prufer``. The seed only matters for ``prufer``.
    """
    parts = template.split(":")
    kind = parts[0]
    if kind == "path" and len(parts) == 1:
        return path_tree(n)
    if kind == "star" and len(parts) == 1:
        return star_tree(n)
    if kind == "dary" and len(parts) == 2:
        return complete_dary_tree(_parse_int(parts[1], template), n)
    if kind == "prufer" and len(parts) == 1:
        return random_labeled_tree(n, seed)
    raise InputError(
        f"family template {template!r} is not size-parameterized "
        "(expected path, star, dary:<d> or prufer)"
    )


def _parse_int(token: str, context: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"malformed integer {token!r} in family spec {context!r}") from None


def _require_size(n: int) -> None:
    if n < 1:
        raise InputError(f"family size must be >= 1, got {n}")
