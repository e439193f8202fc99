"""Triangle-guided initial skeleton for arbitrary graphs."""

from __future__ import annotations

import math
from collections import Counter

from .graph import Graph, TriangleCounts, count_triangles, paused_gc
from .recognition import degree_order
from .skeleton import NONE, SkeletonForest, count_edits

__all__ = ["initial_skeleton", "trivial_skeleton", "count_edits"]

INF = math.inf


def _elect(votes: Counter, current: int) -> int:
    best = max(votes.values())
    if votes.get(current, 0) == best:
        return current
    tied = [p for p, c in votes.items() if c == best]
    real = [p for p in tied if p != NONE]
    return min(real) if real else NONE


def initial_skeleton(g: Graph, t: TriangleCounts | None = None) -> SkeletonForest:
    """Build a skeleton for ``g`` by the recognition sweep with edit repair.

    Nodes are processed by decreasing degree. A processed node ``u`` first
    collects the unprocessed neighbors it would keep as children (those
    sharing its parent, or whose edge to ``u`` looks better than the edge
    to their current parent by triangle count and pseudo-C4-P4 count). Those
    neighbors elect ``u``'s parent by majority; then the keep test is
    repeated with strict comparisons and the survivors become children of
    ``u``. The graph itself is never modified.
    """
    if t is None:
        t = count_triangles(g)
    n = g.n
    adj = g.adj
    tri = t.counts
    deg = [len(a) for a in adj]
    parent = [NONE] * n
    # adoption counter; the true depth is recomputed at the end
    depth = [0] * n
    # pseudo counter of the edge {v, parent(v)}; infinite for roots
    parent_pc: list[float] = [INF] * n
    processed = [False] * n

    with paused_gc():
        for u in degree_order(g):
            processed[u] = True
            pu = parent[u]
            du1 = deg[u] - 1
            row = adj[u]
            trow = tri[u]
            votes: Counter = Counter()
            for i, v in enumerate(row):
                if processed[v]:
                    continue
                pv = parent[v]
                tuv = trow[i]
                if pv == pu or (
                    (du1 - tuv) * (deg[v] - 1 - tuv) <= parent_pc[v] and depth[v] <= tuv + 1
                ):
                    votes[pv] += 1
            if votes:
                new_parent = _elect(votes, pu)
                if new_parent != pu:
                    parent[u] = pu = new_parent
                    depth[u] = 0
                    parent_pc[u] = INF
            for i, v in enumerate(row):
                if processed[v]:
                    continue
                tuv = trow[i]
                pc = (du1 - tuv) * (deg[v] - 1 - tuv)
                if parent[v] == pu or (pc < parent_pc[v] and depth[v] < tuv + 1):
                    parent[v] = u
                    depth[v] += 1
                    parent_pc[v] = pc
    return SkeletonForest.from_parents(parent)


def trivial_skeleton(g: Graph) -> SkeletonForest:
    """Every node a root; its closure is the empty graph."""
    return SkeletonForest.trivial(g.n)
