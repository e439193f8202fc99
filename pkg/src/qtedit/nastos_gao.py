"""Greedy P4/C4-destroying editing baseline with bounded-search-tree refinement."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from .exact import Edit, SearchLimitExceeded, apply_edits, bst_solve
from .graph import Graph

log = logging.getLogger(__name__)

# neighbor categories relative to an edited pair {u, v}
_NONE, _U, _V, _BOTH = 0, 1, 2, 3


def _classify(edges: set[tuple[int, int]]) -> tuple[int, int]:
    """(is_p4, is_c4) for a graph on nodes 0..3."""
    deg = [0] * 4
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    if len(edges) == 4 and deg == [2, 2, 2, 2]:
        return 0, 1
    if len(edges) == 3 and sorted(deg) == [1, 1, 2, 2]:
        return 1, 0
    return 0, 0


def _pattern_table() -> dict[tuple[int, int, int], tuple[int, int]]:
    """Change in (P4, C4) of {u, v, x, y} when the edge uv is added.

    Keyed by (category of x, category of y, x adjacent to y).
    """
    table = {}
    for tx, ty, exy in itertools.product(range(4), range(4), range(2)):
        base = set()
        for node, t in ((2, tx), (3, ty)):
            if t & _U:
                base.add((0, node))
            if t & _V:
                base.add((1, node))
        if exy:
            base.add((2, 3))
        p_without, c_without = _classify(base)
        p_with, c_with = _classify(base | {(0, 1)})
        table[tx, ty, exy] = (p_with - p_without, c_with - c_without)
    return table


_TABLE = _pattern_table()


def count_p4_c4(g: Graph | list) -> tuple[int, int]:
    """Number of induced P4 and C4 in ``g``.

    Per edge, the exclusive neighborhoods of the two endpoints give the C4
    through the edge (edges between them) and the P4 with the edge in the
    middle (non-adjacent pairs between them).
    """
    nbrs = g.adj_sets if isinstance(g, Graph) else g
    p4 = c4 = 0
    for u, su in enumerate(nbrs):
        for v in su:
            if v < u:
                continue
            sv = nbrs[v]
            only_u = su - sv - {v}
            only_v = sv - su - {u}
            if not only_u or not only_v:
                continue
            c = sum(len(nbrs[x] & only_v) for x in only_u)
            c4 += c
            p4 += len(only_u) * len(only_v) - c
    return p4, c4 // 4


def delta_p4_c4(g: Graph | list, kind: str, u: int, v: int) -> tuple[int, int]:
    """Change of (P4, C4) caused by inserting (``+``) or deleting (``-``) ``{u, v}``.

    Only 4-node sets containing both ``u`` and ``v`` change. They are
    tallied by the categories of the two other nodes (adjacent to ``u``,
    ``v``, both, or neither) and whether those two are adjacent; a single
    pass over the adjacency of the neighbors of ``u`` and ``v`` suffices.
    """
    nbrs = g.adj_sets if isinstance(g, Graph) else g
    n = len(nbrs)
    if u == v or not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"invalid pair ({u}, {v})")
    present = v in nbrs[u]
    if kind == "+":
        if present:
            raise ValueError(f"cannot insert existing edge ({u}, {v})")
        sign = 1
    elif kind == "-":
        if not present:
            raise ValueError(f"cannot delete missing edge ({u}, {v})")
        sign = -1
    else:
        raise ValueError(f"unknown edit kind {kind!r}")

    cat: dict[int, int] = {}
    for x in nbrs[u]:
        if x != v:
            cat[x] = _U
    for x in nbrs[v]:
        if x != u:
            cat[x] = cat.get(x, 0) | _V
    size = [n - 2 - len(cat), 0, 0, 0]
    for t in cat.values():
        size[t] += 1

    # ordered edge counts between categories, seen from the neighbor side
    cnt = [[0] * 4 for _ in range(4)]
    for x, tx in cat.items():
        row = cnt[tx]
        for y in nbrs[x]:
            if y != u and y != v:
                row[cat.get(y, _NONE)] += 1

    d4 = dc = 0
    for s in (_U, _V, _BOTH):
        for t in (_NONE, _U, _V, _BOTH):
            if t != _NONE and t < s:
                continue
            if s == t:
                edges = cnt[s][s] // 2
                pairs = size[s] * (size[s] - 1) // 2
            else:
                edges = cnt[s][t]
                pairs = size[s] * size[t]
            a4, ac = _TABLE[s, t, 1]
            b4, bc = _TABLE[s, t, 0]
            d4 += edges * a4 + (pairs - edges) * b4
            dc += edges * ac + (pairs - edges) * bc
    return sign * d4, sign * dc


def net_edits(steps: list[Edit]) -> list[Edit]:
    """Collapse a step sequence into the symmetric difference it produces."""
    state: dict[tuple[int, int], Edit] = {}
    for e in steps:
        key = (e.u, e.v)
        if key in state:
            del state[key]
        else:
            state[key] = e
    return list(state.values())


@dataclass
class NGResult:
    edits: list[Edit]
    steps: list[Edit]
    trace: list[tuple[int, int]] = field(default_factory=list)
    candidates_evaluated: int = 0
    bst_rounds: int = 0
    bst_improvements: int = 0
    bst_exhausted: int = 0
    stalls: int = 0


def ng_greedy(
    g: Graph,
    revert_depth: int = 10,
    use_bst: bool = False,
    allow_reedit: bool = True,
    bst_node_limit: int | None = None,
) -> NGResult:
    """Greedy editing: repeatedly apply the edit destroying the most P4 + C4.

    Every node pair is a candidate in every step. Ties prefer deletions,
    then the lexicographically smallest pair. With ``use_bst`` the last
    ``revert_depth`` edits are reverted and re-solved exactly; this repeats
    while the exact solver finds strictly fewer edits. A solver run that
    exceeds ``bst_node_limit`` search nodes counts as no improvement.
    """
    nbrs = g.mutable_adjacency()
    p4, c4 = count_p4_c4(nbrs)
    res = NGResult([], [], [(p4, c4)])
    edited: set[tuple[int, int]] = set()
    pairs = list(itertools.combinations(range(g.n), 2))
    while p4 + c4 > 0:
        best = None
        for u, v in pairs:
            if not allow_reedit and (u, v) in edited:
                continue
            kind = "-" if v in nbrs[u] else "+"
            d4, dc = delta_p4_c4(nbrs, kind, u, v)
            res.candidates_evaluated += 1
            key = (d4 + dc, kind != "-", u, v)
            if best is None or key < best[0]:
                best = (key, kind, d4, dc)
        if best is None:
            raise RuntimeError("no candidate edit left")
        (gain, _, u, v), kind, d4, dc = best
        if gain >= 0:
            # no improving edit; take the best one and never touch the pair again
            res.stalls += 1
            allow_reedit = False
        if kind == "+":
            nbrs[u].add(v)
            nbrs[v].add(u)
        else:
            nbrs[u].remove(v)
            nbrs[v].remove(u)
        edited.add((u, v))
        p4 += d4
        c4 += dc
        res.steps.append(Edit(kind, u, v))
        res.trace.append((p4, c4))
    edits = net_edits(res.steps)

    if use_bst:
        while edits:
            depth = min(revert_depth, len(edits))
            keep = edits[: len(edits) - depth]
            partial = apply_edits(g, keep)
            res.bst_rounds += 1
            try:
                sol = bst_solve(partial, depth - 1, node_limit=bst_node_limit)
            except SearchLimitExceeded:
                res.bst_exhausted += 1
                log.info("exact refinement hit the node limit; keeping greedy edits")
                break
            if sol is None:
                break
            res.bst_improvements += 1
            edits = net_edits(keep + sol)
    res.edits = edits
    return res
