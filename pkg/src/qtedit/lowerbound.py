"""Lower bounds on the quasi-threshold edit distance.

Every edge ``{u, v}`` with a positive pseudo-C4-P4 count is the central
edge of an induced P4 or an edge of an induced C4. Removing both endpoints
destroys that witness and every witness that would share an edit with it,
so the number of removed pairs bounds the edit distance from below.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .graph import Graph, make_rng


@dataclass
class BoundResult:
    bound: int
    removed_pairs: list[tuple[int, int]] = field(default_factory=list)
    # pseudo counter of each removed pair at removal time
    witness_scores: list[int] = field(default_factory=list)


class _ResidualGraph:
    """Mutable graph copy with per-edge triangle counters."""

    def __init__(self, g: Graph):
        self.nbrs = g.mutable_adjacency()
        self.tri: list[dict[int, int]] = [dict.fromkeys(a, 0) for a in g.adj]
        nbrs = self.nbrs
        for u in range(g.n):
            su = nbrs[u]
            row = self.tri[u]
            for v in g.adj[u]:
                if v > u:
                    t = len(su & nbrs[v])
                    row[v] = t
                    self.tri[v][u] = t

    def pc(self, u: int, v: int) -> int:
        t = self.tri[u][v]
        return (len(self.nbrs[u]) - 1 - t) * (len(self.nbrs[v]) - 1 - t)

    def remove_edge(self, x: int, w: int) -> None:
        nbrs, tri = self.nbrs, self.tri
        for c in nbrs[x] & nbrs[w]:
            tri[x][c] -= 1
            tri[c][x] -= 1
            tri[w][c] -= 1
            tri[c][w] -= 1
        nbrs[x].discard(w)
        nbrs[w].discard(x)
        del tri[x][w]
        del tri[w][x]

    def remove_node(self, x: int) -> list[int]:
        touched = list(self.nbrs[x])
        for w in touched:
            self.remove_edge(x, w)
        return touched

    def recount(self) -> list[dict[int, int]]:
        nbrs = self.nbrs
        return [{v: len(nbrs[u] & nbrs[v]) for v in nbrs[u]} for u in range(len(nbrs))]


def lower_bound(
    g: Graph,
    seed: int = 0,
    reorder: bool = False,
    check_every: int = 0,
) -> BoundResult:
    """Greedy packing of node-disjoint forbidden-subgraph witnesses.

    Nodes are visited by ascending initial degree, ties broken by a seeded
    random key. A visited node ``u`` is paired with its live neighbor ``v``
    of smallest current degree having a positive pseudo counter, and both
    are deleted. With ``reorder`` the visit order follows current degrees
    instead of the initial ones.

    ``check_every > 0`` recomputes all triangle counters after every that
    many removals and asserts they match the maintained ones.
    """
    n = g.n
    res = _ResidualGraph(g)
    nbrs = res.nbrs
    keys = make_rng(seed).permutation(n).tolist()
    alive = [True] * n
    result = BoundResult(0)

    def visit(u: int) -> None:
        best = None
        for v in nbrs[u]:
            dv = len(nbrs[v])
            if best is not None and (dv, v) >= best[:2]:
                continue
            score = res.pc(u, v)
            if score > 0:
                best = (dv, v, score)
        if best is None:
            return
        v = best[1]
        result.bound += 1
        result.removed_pairs.append((u, v) if u < v else (v, u))
        result.witness_scores.append(best[2])
        alive[u] = alive[v] = False
        changed = res.remove_node(u) + res.remove_node(v)
        if check_every and result.bound % check_every == 0:
            assert res.recount() == res.tri, "triangle counters drifted"
        if reorder:
            for w in changed:
                if alive[w]:
                    heapq.heappush(heap, (len(nbrs[w]), keys[w], w))

    if not reorder:
        for u in sorted(range(n), key=lambda u: (len(g.adj[u]), keys[u])):
            if alive[u]:
                visit(u)
    else:
        heap = [(len(g.adj[u]), keys[u], u) for u in range(n)]
        heapq.heapify(heap)
        seen = [False] * n
        while heap:
            d, _, u = heapq.heappop(heap)
            if seen[u] or not alive[u] or d != len(nbrs[u]):
                continue
            seen[u] = True
            visit(u)
    if check_every:
        assert res.recount() == res.tri, "triangle counters drifted"
    return result
