"""Certifying linear-time quasi-threshold recognition."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .skeleton import NONE, SkeletonForest

P4 = "P4"
C4 = "C4"


@dataclass(frozen=True)
class Certificate:
    """Four nodes ``(a, b, c, d)`` along an induced path or cycle."""

    kind: str
    nodes: tuple[int, int, int, int]

    def pattern(self) -> set[frozenset[int]]:
        a, b, c, d = self.nodes
        edges = {frozenset((a, b)), frozenset((b, c)), frozenset((c, d))}
        if self.kind == C4:
            edges.add(frozenset((d, a)))
        return edges


def degree_order(g: Graph, descending: bool = True) -> list[int]:
    """Bucket sort of the nodes by degree, ties by ascending id."""
    buckets: list[list[int]] = [[] for _ in range(g.max_degree + 1)]
    for u, a in enumerate(g.adj):
        buckets[len(a)].append(u)
    if descending:
        buckets.reverse()
    return [u for b in buckets for u in b]


def recognize(g: Graph) -> SkeletonForest | Certificate:
    """Return a skeleton of ``g`` or an induced P4/C4 proving there is none.

    Nodes are processed by decreasing degree. Each processed node claims its
    unprocessed neighbors as children; all of them must share its parent.
    """
    n = g.n
    adj = g.adj
    order = degree_order(g)
    pos = [0] * n
    for i, u in enumerate(order):
        pos[u] = i
    parent = [NONE] * n
    for i, u in enumerate(order):
        pu = parent[u]
        for v in adj[u]:
            if pos[v] <= i:
                continue
            pv = parent[v]
            if pv != pu:
                return _certificate(g, pos, parent, u, v)
            parent[v] = u
    return SkeletonForest.from_parents(parent)


def _certificate(g: Graph, pos, parent, u: int, v: int) -> Certificate:
    pu, pv = parent[u], parent[v]
    rank_u = pos[pu] if pu != NONE else -1
    rank_v = pos[pv] if pv != NONE else -1
    # The later processed of the two parents is adjacent to only one of u, v.
    if rank_u > rank_v:
        a, b, c = v, u, pu
    else:
        a, b, c = u, v, pv
    sets = g.adj_sets
    nb = sets[b]
    for x in g.adj[c]:
        if x != b and x not in nb:
            kind = C4 if x in sets[a] else P4
            return Certificate(kind, (a, b, c, x))
    raise AssertionError("degree order violated; no certificate node found")


def is_quasi_threshold(g: Graph) -> bool:
    return isinstance(recognize(g), SkeletonForest)


def verify_certificate(g: Graph, c: Certificate) -> bool:
    """True iff the certificate's nodes induce exactly the claimed pattern."""
    nodes = c.nodes
    if c.kind not in (P4, C4) or len(nodes) != 4 or len(set(nodes)) != 4:
        return False
    if any(not 0 <= x < g.n for x in nodes):
        return False
    want = c.pattern()
    for i in range(4):
        for j in range(i + 1, 4):
            x, y = nodes[i], nodes[j]
            if g.has_edge(x, y) != (frozenset((x, y)) in want):
                return False
    return True
