"""Random quasi-threshold graphs with power-law component sizes and planted edits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, make_rng
from .skeleton import NONE, SkeletonForest, closure_of_forest


class GeneratorError(ValueError):
    pass


@dataclass
class GenSpec:
    n: int
    seed: int = 0
    planted_k: int = 0
    size_min: int = 10
    size_max: int | None = None  # defaults to 0.2 * n
    exponent: float = -1.0
    insert_fraction: float = 0.8

    def max_size(self) -> int:
        if self.size_max is not None:
            return self.size_max
        return max(self.size_min, int(0.2 * self.n))


def component_sizes(spec: GenSpec, rng: np.random.Generator) -> list[int]:
    """Power-law distributed sizes in ``[size_min, size_max]`` summing to ``n``.

    Sizes are drawn by inverse CDF over the integer range. The last
    component takes the remainder; draws are adjusted so the remainder does
    not fall below ``size_min`` whenever that is possible.
    """
    lo, hi, n = spec.size_min, spec.max_size(), spec.n
    if n < lo:
        raise GeneratorError(f"n={n} is smaller than the minimum component size {lo}")
    if hi < lo:
        raise GeneratorError(f"size range [{lo}, {hi}] is empty")
    support = np.arange(lo, hi + 1)
    cdf = np.cumsum(support.astype(float) ** spec.exponent)
    cdf /= cdf[-1]
    sizes = []
    remaining = n
    while remaining > 0:
        s = int(support[min(np.searchsorted(cdf, rng.random(), side="right"), len(support) - 1)])
        if s >= remaining:
            s = remaining
        elif remaining - s < lo:
            # leave a remainder of at least lo, or take everything if it fits
            s = remaining if remaining <= hi else max(lo, remaining - lo)
        sizes.append(s)
        remaining -= s
    return sizes


def generate_qt(spec: GenSpec) -> tuple[Graph, SkeletonForest]:
    """Quasi-threshold graph whose components are closures of random recursive trees.

    In a component of size ``s`` local node 0 is the root and node ``v``
    picks its parent uniformly from ``0..v-1``. Components occupy
    consecutive id ranges.
    """
    rng = make_rng(spec.seed)
    parent = [NONE] * spec.n
    offset = 0
    for s in component_sizes(spec, rng):
        if s > 1:
            picks = (rng.random(s - 1) * np.arange(1, s)).astype(np.int64)
            for v, p in enumerate(picks.tolist(), 1):
                parent[offset + v] = offset + p
        offset += s
    forest = SkeletonForest.from_parents(parent)
    return closure_of_forest(forest), forest


def plant_edits(g: Graph, k: int, seed: int, insert_fraction: float = 0.8):
    """Insert ``floor(0.8 k)`` random non-edges and delete ``ceil(0.2 k)`` random edges.

    Returns the edited graph and the applied edits as ``(kind, u, v)``
    tuples with kind ``"+"`` or ``"-"``. Inserted and deleted pairs are
    disjoint, so the result is at distance at most ``k`` from ``g``.
    """
    n_ins = int(np.floor(insert_fraction * k + 1e-9))
    n_del = k - n_ins
    total_pairs = g.n * (g.n - 1) // 2
    if n_del > g.m or n_ins > total_pairs - g.m:
        raise GeneratorError(
            f"cannot plant {n_ins} insertions and {n_del} deletions "
            f"in a graph with n={g.n}, m={g.m}"
        )
    rng = make_rng(seed)
    sets = g.adj_sets
    edges = list(g.edges())
    deleted = [edges[i] for i in sorted(rng.choice(len(edges), n_del, replace=False).tolist())]
    inserted: set[tuple[int, int]] = set()
    if 2 * n_ins <= total_pairs - g.m:
        while len(inserted) < n_ins:
            u, v = rng.integers(0, g.n, 2).tolist()
            if u == v or v in sets[u]:
                continue
            inserted.add((u, v) if u < v else (v, u))
    else:
        # dense case: sample directly from the complement
        non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in sets[u]]
        inserted = {non_edges[i] for i in rng.choice(len(non_edges), n_ins, replace=False).tolist()}
    nbrs = g.mutable_adjacency()
    for u, v in deleted:
        nbrs[u].discard(v)
        nbrs[v].discard(u)
    for u, v in inserted:
        nbrs[u].add(v)
        nbrs[v].add(u)
    edits = [("+", u, v) for u, v in sorted(inserted)] + [("-", u, v) for u, v in deleted]
    return Graph.from_sets(nbrs), edits
