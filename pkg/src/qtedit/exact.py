"""Exact quasi-threshold editing for small instances.

``bst_solve`` is the bounded search tree over the six edits that can
destroy a forbidden subgraph; ``brute_force_optimum`` scans every graph on
the same node set and is only meant as an independent oracle.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .graph import Graph
from .lowerbound import lower_bound
from .recognition import C4, Certificate, recognize
from .skeleton import SkeletonForest


class Edit(NamedTuple):
    kind: str  # "+" inserts, "-" deletes
    u: int
    v: int

    @classmethod
    def make(cls, kind: str, u: int, v: int) -> Edit:
        return cls(kind, u, v) if u < v else cls(kind, v, u)


class EditError(ValueError):
    pass


class SearchLimitExceeded(RuntimeError):
    pass


def branch_edits(c: Certificate) -> list[Edit]:
    """The six single edits touching the certificate's node pairs."""
    a, b, x, d = c.nodes
    if c.kind == C4:
        return [
            Edit.make("-", a, b), Edit.make("-", b, x), Edit.make("-", x, d), Edit.make("-", d, a),
            Edit.make("+", a, x), Edit.make("+", b, d),
        ]
    return [
        Edit.make("-", a, b), Edit.make("-", b, x), Edit.make("-", x, d),
        Edit.make("+", a, x), Edit.make("+", b, d), Edit.make("+", a, d),
    ]


def _apply(nbrs: list[set[int]], e: Edit) -> None:
    if e.kind == "+":
        if e.v in nbrs[e.u] or e.u == e.v:
            raise EditError(f"cannot insert existing edge {e.u} {e.v}")
        nbrs[e.u].add(e.v)
        nbrs[e.v].add(e.u)
    elif e.kind == "-":
        if e.v not in nbrs[e.u]:
            raise EditError(f"cannot delete missing edge {e.u} {e.v}")
        nbrs[e.u].remove(e.v)
        nbrs[e.v].remove(e.u)
    else:
        raise EditError(f"unknown edit kind {e.kind!r}")


def _revert(nbrs: list[set[int]], e: Edit) -> None:
    _apply(nbrs, Edit("-" if e.kind == "+" else "+", e.u, e.v))


def apply_edits(g: Graph, edits) -> Graph:
    """Apply edits in order; each pair may be edited at most once."""
    nbrs = g.mutable_adjacency()
    seen = set()
    for e in edits:
        e = Edit.make(*e)
        if not (0 <= e.u < g.n and 0 <= e.v < g.n):
            raise EditError(f"node out of range in {e}")
        if (e.u, e.v) in seen:
            raise EditError(f"pair {e.u} {e.v} edited twice")
        seen.add((e.u, e.v))
        _apply(nbrs, e)
    return Graph.from_sets(nbrs)


def write_edits(edits, fh) -> None:
    for kind, u, v in edits:
        fh.write(f"{kind} {u} {v}\n")


def read_edits(fh) -> list[Edit]:
    out = []
    for lineno, line in enumerate(fh, 1):
        line = line.strip()
        if not line or line[0] == "#":
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] not in "+-":
            raise EditError(f"line {lineno}: expected '+ u v' or '- u v', got {line!r}")
        try:
            out.append(Edit.make(parts[0], int(parts[1]), int(parts[2])))
        except ValueError:
            raise EditError(f"line {lineno}: bad node id in {line!r}") from None
    return out


def bst_solve(
    g: Graph,
    k_max: int,
    prune: bool = True,
    node_limit: int | None = None,
) -> list[Edit] | None:
    """Minimum edit set of size at most ``k_max``, or ``None`` if none exists.

    Iterative deepening over the budget; each level branches on the six
    edits of one forbidden subgraph found by ``recognize``. A pair edited on
    the current branch is never edited again below it, and the i-th branch
    keeps the pairs of branches ``0..i-1`` unchanged. With ``prune`` a
    branch is cut as soon as the witness-packing lower bound exceeds the
    remaining budget. ``node_limit`` caps the total number of search nodes
    and raises ``SearchLimitExceeded`` when hit.
    """
    nbrs = g.mutable_adjacency()
    blocked: set[tuple[int, int]] = set()
    visited = 0

    def search(budget: int) -> list[Edit] | None:
        nonlocal visited
        visited += 1
        if node_limit is not None and visited > node_limit:
            raise SearchLimitExceeded(f"more than {node_limit} search nodes")
        h = Graph.from_sets(nbrs)
        cert = recognize(h)
        if isinstance(cert, SkeletonForest):
            return []
        if budget == 0:
            return None
        if prune and budget > 1 and lower_bound(h).bound > budget:
            return None
        frozen = []
        try:
            for e in branch_edits(cert):
                key = (e.u, e.v)
                if key in blocked:
                    continue
                _apply(nbrs, e)
                blocked.add(key)
                frozen.append(key)
                rest = search(budget - 1)
                _revert(nbrs, e)
                if rest is not None:
                    return [e] + rest
                # later siblings leave this pair untouched
        finally:
            blocked.difference_update(frozen)
        return None

    start = lower_bound(g).bound if prune else 0
    for k in range(start, k_max + 1):
        found = search(k)
        if found is not None:
            return found
    return None


@lru_cache(maxsize=None)
def pair_index(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = pair_index(n)
    return Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def mask_of(g: Graph) -> int:
    pairs = pair_index(g.n)
    return sum(1 << i for i, (u, v) in enumerate(pairs) if g.has_edge(u, v))


MAX_BRUTE_FORCE_NODES = 6


@lru_cache(maxsize=None)
def _qt_masks(n: int) -> np.ndarray:
    total = n * (n - 1) // 2
    ok = [
        mask for mask in range(1 << total)
        if isinstance(recognize(graph_from_mask(n, mask)), SkeletonForest)
    ]
    return np.array(ok, dtype=np.int64)


@lru_cache(maxsize=None)
def _popcounts(n: int) -> np.ndarray:
    total = n * (n - 1) // 2
    bits = np.arange(1 << total, dtype=np.int64)
    out = np.zeros(1 << total, dtype=np.int8)
    for i in range(total):
        out += (bits >> i & 1).astype(np.int8)
    return out


def brute_force_optimum(g: Graph) -> int:
    """Minimum symmetric difference to any quasi-threshold graph on the same nodes."""
    if g.n > MAX_BRUTE_FORCE_NODES:
        raise ValueError(
            f"brute force is limited to {MAX_BRUTE_FORCE_NODES} nodes, got {g.n}"
        )
    if g.n < 4:
        return 0
    return int(_popcounts(g.n)[_qt_masks(g.n) ^ mask_of(g)].min())
