"""Rooted plane forests: data model, text formats, and structural queries.

A forest of size n lives on the dense vertex ids 1..n. Each vertex has a
parent (0 marks a root) and an ordered child sequence; component roots are
ordered as well, which makes the forest "plane". Descent counting never
depends on the plane order, so :func:`canonical_code` deliberately forgets
it and identifies unordered rooted forests up to isomorphism.

All values here are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError

ROOT = 0


@dataclass(frozen=True)
class RootedForest:
    """Immutable rooted plane forest on vertex ids 1..n.

    ``parents[i]`` is the parent id of vertex ``i + 1`` (0 for roots),
    ``children[i]`` its ordered child ids, and ``roots`` the ordered
    component roots. Use :meth:`from_parents` rather than the raw
    constructor; it validates and derives the redundant fields.
    """

    parents: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    roots: tuple[int, ...]

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> "RootedForest":
        """Build a forest from a parent array, validating acyclicity.

        Children are ordered by child id, which coincides with plane order
        for depth-first numbered input.
        """
        n = len(parents)
        parents = tuple(int(p) for p in parents)
        kids: list[list[int]] = [[] for _ in range(n)]
        roots: list[int] = []
        for v, p in enumerate(parents, start=1):
            if p == ROOT:
                roots.append(v)
                continue
            if not 1 <= p <= n:
                raise InputError(f"parent {p} of vertex {v} is out of range 1..{n}")
            if p == v:
                raise InputError(f"vertex {v} is its own parent")
            kids[p - 1].append(v)
        _check_acyclic(parents)
        return cls(parents, tuple(tuple(c) for c in kids), tuple(roots))

    @property
    def n(self) -> int:
        return len(self.parents)

    @property
    def edge_count(self) -> int:
        return len(self.parents) - len(self.roots)

    def parent_of(self, v: int) -> int:
        self._check_vertex(v)
        return self.parents[v - 1]

    def children_of(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.children[v - 1]

    def is_root(self, v: int) -> bool:
        self._check_vertex(v)
        return self.parents[v - 1] == ROOT

    def edges(self) -> list[tuple[int, int]]:
        """All (parent, child) pairs, ordered by child id."""
        return [(p, v) for v, p in enumerate(self.parents, start=1) if p != ROOT]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def subtree_order(self, root: int) -> list[int]:
        """Vertices of the subtree at ``root`` in preorder (plane order)."""
        self._check_vertex(root)
        out: list[int] = []
        stack = [root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children[v - 1]))
        return out

    def components(self) -> list["RootedForest"]:
        """Each component as a single-rooted forest with densified ids."""
        return [self.induced(self.subtree_order(r)) for r in self.roots]

    def induced(self, vertex_ids: Iterable[int]) -> "RootedForest":
        """Forest induced on a downward-closed vertex set, ids densified.

        The renumbering preserves the relative order of ids; child and root
        orders are inherited.
        """
        keep = sorted(set(vertex_ids))
        remap = {old: new for new, old in enumerate(keep, start=1)}
        parents = []
        for old in keep:
            p = self.parents[old - 1]
            parents.append(remap.get(p, ROOT))
        kids = tuple(
            tuple(remap[c] for c in self.children[old - 1] if c in remap)
            for old in keep
        )
        roots = tuple(
            remap[v]
            for v in keep
            if self.parents[v - 1] == ROOT or self.parents[v - 1] not in remap
        )
        return RootedForest(tuple(parents), kids, roots)

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise InputError(f"unknown vertex {v} (forest has {self.n} vertices)")


def _check_acyclic(parents: tuple[int, ...]) -> None:
    # color: 0 unvisited, 1 on current walk, 2 done
    color = [0] * (len(parents) + 1)
    for start in range(1, len(parents) + 1):
        if color[start]:
            continue
        path = []
        v = start
        while v != ROOT and color[v] == 0:
            color[v] = 1
            path.append(v)
            v = parents[v - 1]
        if v != ROOT and color[v] == 1:
            raise InputError(f"cycle detected involving vertex {v}")
        for u in path:
            color[u] = 2


EMPTY_FOREST = RootedForest((), (), ())


def parse_parent_array(text: str) -> RootedForest:
    """Parse whitespace-separated parent indices; 0 marks a root.

    The empty string parses to the empty forest.
    """
    tokens = text.split()
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise InputError(f"malformed token {tok!r} in parent array") from None
    return RootedForest.from_parents(values)


def serialize_parent_array(forest: RootedForest) -> str:
    return " ".join(str(p) for p in forest.parents)


def parse_nested(text: str) -> RootedForest:
    """Parse balanced-parentheses notation, one top-level group per tree.

    Vertices are numbered in depth-first (preorder) order, so the child
    order on ids reproduces the written plane order. Whitespace is
    ignored; empty input is the empty forest.
    """
    parents: list[int] = []
    stack: list[int] = []
    for ch in text:
        if ch.isspace():
            continue
        if ch == "(":
            parents.append(stack[-1] if stack else ROOT)
            stack.append(len(parents))
        elif ch == ")":
            if not stack:
                raise InputError("unbalanced parentheses: unexpected ')'")
            stack.pop()
        else:
            raise InputError(f"unexpected character {ch!r} in nested format")
    if stack:
        raise InputError("unbalanced parentheses: unclosed '('")
    return RootedForest.from_parents(parents)


def serialize_nested(forest: RootedForest) -> str:
    out: list[str] = []
    for r in forest.roots:
        stack: list[tuple[int, bool]] = [(r, False)]
        while stack:
            v, closing = stack.pop()
            if closing:
                out.append(")")
                continue
            out.append("(")
            stack.append((v, True))
            stack.extend((c, False) for c in reversed(forest.children[v - 1]))
    return "".join(out)


def down_degree(forest: RootedForest, v: int) -> int:
    """Number of children of ``v``."""
    return len(forest.children_of(v))


def max_down_degree(forest: RootedForest) -> int:
    """Maximum down-degree over all vertices; 0 for the empty forest."""
    return max((len(c) for c in forest.children), default=0)


def delete_vertex(forest: RootedForest, v: int) -> tuple[RootedForest, dict[int, int]]:
    """Remove ``v`` and its incident edges; its children become roots.

    If ``v`` was a root, its children take its position in the root order;
    otherwise they are appended right after the component of ``v``'s
    parent. Remaining ids are densified by an order-preserving map, which
    is returned alongside the new forest.
    """
    forest._check_vertex(v)
    promoted = forest.children[v - 1]
    roots = list(forest.roots)
    if forest.parents[v - 1] == ROOT:
        pos = roots.index(v)
        roots[pos : pos + 1] = promoted
    else:
        r = v
        while forest.parents[r - 1] != ROOT:
            r = forest.parents[r - 1]
        pos = roots.index(r)
        roots[pos + 1 : pos + 1] = promoted

    keep = [u for u in forest.vertices() if u != v]
    remap = {old: new for new, old in enumerate(keep, start=1)}
    parents = []
    kids = []
    for old in keep:
        p = forest.parents[old - 1]
        parents.append(ROOT if p == v or p == ROOT else remap[p])
        kids.append(tuple(remap[c] for c in forest.children[old - 1] if c != v))
    new_forest = RootedForest(
        tuple(parents), tuple(kids), tuple(remap[r] for r in roots)
    )
    return new_forest, remap


def canonical_code(forest: RootedForest) -> str:
    """AHU-style code identifying the unordered rooted forest.

    Child codes are sorted at every vertex and component codes are sorted
    across trees, so equal codes mean isomorphic unordered forests. Plane
    order is intentionally not part of the identity.
    """
    codes: dict[int, str] = {}
    for r in forest.roots:
        for v in reversed(forest.subtree_order(r)):
            codes[v] = "(" + "".join(sorted(codes[c] for c in forest.children[v - 1])) + ")"
    return "".join(sorted(codes[r] for r in forest.roots))


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph: vertex count plus a sorted edge list."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def degree(self, v: int) -> int:
        return sum(1 for a, b in self.edges if a == v or b == v)


def line_graph(forest: RootedForest) -> SimpleGraph:
    """Line graph of the forest: one vertex per edge, adjacency = shared endpoint.

    Line-graph vertex ``i`` corresponds to ``forest.edges()[i]``.
    """
    edge_list = forest.edges()
    index = {e: i for i, e in enumerate(edge_list)}
    incident: dict[int, list[int]] = {}
    for e in edge_list:
        for endpoint in e:
            incident.setdefault(endpoint, []).append(index[e])
    adjacency = set()
    for members in incident.values():
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                adjacency.add((min(a, b), max(a, b)))
    return SimpleGraph(len(edge_list), tuple(sorted(adjacency)))


def max_degree(graph: SimpleGraph) -> int:
    """Maximum vertex degree; 0 for an edgeless graph."""
    if not graph.edges:
        return 0
    counts = [0] * graph.n
    for a, b in graph.edges:
        counts[a] += 1
        counts[b] += 1
    return max(counts)


def iter_forest_lines(lines: Iterable[str]) -> Iterator[RootedForest]:
    """Parse a parent-array file: one forest per nonempty line."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_parent_array(line)
