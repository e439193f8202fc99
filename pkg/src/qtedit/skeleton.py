"""Rooted skeleton forests and their transitive closures."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .graph import Graph

NONE = -1
"""Parent value of a root; stands for the virtual root adjacent to everything."""


class ForestError(ValueError):
    pass


def compute_depths(parent: list[int]) -> list[int]:
    """Depth of every node (roots have depth 0). Raises on a cycle."""
    n = len(parent)
    depth = [-1] * n
    for start in range(n):
        if depth[start] >= 0:
            continue
        path = []
        u = start
        while u != NONE:
            if not 0 <= u < n:
                raise ForestError(f"parent id {u} out of range")
            if depth[u] != -1:
                break
            depth[u] = -2  # on the current path
            path.append(u)
            u = parent[u]
        if u != NONE and depth[u] == -2:
            raise ForestError(f"parent relation has a cycle through node {u}")
        d = depth[u] if u != NONE else -1
        for w in reversed(path):
            d += 1
            depth[w] = d
    return depth


@dataclass
class SkeletonForest:
    """Parent pointer forest; ``parent[u] == NONE`` marks a root."""

    parent: list[int]
    depth: list[int]

    @classmethod
    def from_parents(cls, parent: list[int]) -> SkeletonForest:
        parent = list(parent)
        return cls(parent, compute_depths(parent))

    @classmethod
    def trivial(cls, n: int) -> SkeletonForest:
        return cls([NONE] * n, [0] * n)

    @property
    def n(self) -> int:
        return len(self.parent)

    def validate(self) -> None:
        if len(self.depth) != len(self.parent):
            raise ForestError("parent and depth lengths differ")
        if compute_depths(self.parent) != self.depth:
            raise ForestError("depth values are inconsistent with the parent map")

    def roots(self) -> list[int]:
        return [u for u, p in enumerate(self.parent) if p == NONE]

    def children(self) -> list[list[int]]:
        ch: list[list[int]] = [[] for _ in self.parent]
        for u, p in enumerate(self.parent):
            if p != NONE:
                ch[p].append(u)
        return ch

    def ancestors(self, u: int) -> Iterator[int]:
        p = self.parent[u]
        while p != NONE:
            yield p
            p = self.parent[p]

    def is_ancestor(self, a: int, u: int) -> bool:
        """True iff ``a`` is a proper ancestor of ``u``."""
        depth = self.depth
        if depth[a] >= depth[u]:
            return False
        parent = self.parent
        for _ in range(depth[u] - depth[a]):
            u = parent[u]
        return u == a

    def closure_size(self) -> int:
        return sum(self.depth)


def closure_edges(f: SkeletonForest) -> Iterator[tuple[int, int]]:
    """All ancestor/descendant pairs as ``(min, max)``, one per pair."""
    parent = f.parent
    for u in range(f.n):
        a = parent[u]
        while a != NONE:
            yield (a, u) if a < u else (u, a)
            a = parent[a]


def closure_of_forest(f: SkeletonForest, n: int | None = None) -> Graph:
    """The quasi-threshold graph whose skeleton is ``f``."""
    if n is None:
        n = f.n
    if n != f.n:
        raise ForestError(f"forest has {f.n} nodes, expected {n}")
    compute_depths(f.parent)
    return Graph.from_edges(n, closure_edges(f))


def count_edits(g: Graph, f: SkeletonForest) -> int:
    """Size of the symmetric difference between ``g`` and the closure of ``f``.

    The closure is never materialized: each edge of ``g`` is tested for an
    ancestor relation by walking the deeper endpoint up.
    """
    if f.n != g.n:
        raise ForestError(f"forest has {f.n} nodes, graph has {g.n}")
    f.validate()
    depth = f.depth
    parent = f.parent
    covered = 0
    for u, v in g.edges():
        du, dv = depth[u], depth[v]
        if du == dv:
            continue
        if du < dv:
            u, v, du, dv = v, u, dv, du
        for _ in range(du - dv):
            u = parent[u]
        if u == v:
            covered += 1
    return (sum(depth) - covered) + (g.m - covered)


def edit_diff(g: Graph, f: SkeletonForest) -> Iterator[tuple[str, int, int]]:
    """Stream the edits turning ``g`` into the closure of ``f``.

    Yields ``("+", u, v)`` for inserted and ``("-", u, v)`` for deleted
    pairs, ``u < v``. Deletions come first, sorted; insertions follow in
    forest order, so memory stays O(n + m) even for large closures.
    """
    parent = f.parent
    is_closure_pair = f.is_ancestor
    for u, v in g.edges():
        if not (is_closure_pair(u, v) or is_closure_pair(v, u)):
            yield "-", u, v
    sets = g.adj_sets
    for u in range(f.n):
        a = parent[u]
        su = sets[u]
        while a != NONE:
            if a not in su:
                yield ("+", a, u) if a < u else ("+", u, a)
            a = parent[a]


def write_skeleton(f: SkeletonForest, fh) -> None:
    """One ``node parent depth`` line per node, parent ``-1`` for roots."""
    for u, (p, d) in enumerate(zip(f.parent, f.depth)):
        fh.write(f"{u} {p} {d}\n")


def read_skeleton(fh) -> SkeletonForest:
    rows = []
    for lineno, line in enumerate(fh, 1):
        line = line.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        try:
            u, p = int(parts[0]), int(parts[1])
        except (ValueError, IndexError):
            raise ForestError(f"line {lineno}: expected 'node parent depth'") from None
        rows.append((u, p))
    n = len(rows)
    parent = [NONE] * n
    seen = set()
    for u, p in rows:
        if not 0 <= u < n or u in seen:
            raise ForestError(f"node ids must be exactly 0..{n - 1}")
        seen.add(u)
        parent[u] = NONE if p < 0 else p
    return SkeletonForest.from_parents(parent)
