"""Undirected simple graphs, edge-list I/O, node permutation and triangle counts."""

from __future__ import annotations

import gc
import io
from bisect import bisect_left
from collections.abc import Iterable, Iterator
from contextlib import contextmanager

import numpy as np


@contextmanager
def paused_gc():
    """Suspend cyclic garbage collection around allocation-heavy, cycle-free loops."""
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


class GraphFormatError(ValueError):
    """Raised when an edge list cannot be parsed."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def make_rng(seed: int | None) -> np.random.Generator:
    """Seeded PCG64 generator; the algorithm is fixed so seeds are portable."""
    return np.random.Generator(np.random.PCG64(seed))


class Graph:
    """Immutable simple undirected graph over nodes ``0..n-1``.

    Adjacency is stored as one sorted tuple per node. Hash sets for O(1)
    membership tests are built on first use.
    """

    __slots__ = ("n", "adj", "m", "_sets")

    def __init__(self, n: int, adj: list[tuple[int, ...]]):
        self.n = n
        self.adj = adj
        self.m = sum(len(a) for a in adj) // 2
        self._sets: list[frozenset[int]] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, dropping self-loops and duplicate edges."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                continue
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, [tuple(sorted(s)) for s in nbrs])

    @classmethod
    def from_sets(cls, nbrs: list[set[int]]) -> Graph:
        return cls(len(nbrs), [tuple(sorted(s)) for s in nbrs])

    @property
    def adj_sets(self) -> list[frozenset[int]]:
        if self._sets is None:
            self._sets = [frozenset(a) for a in self.adj]
        return self._sets

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        if self._sets is not None:
            return v in self._sets[u]
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in ascending order."""
        for u, a in enumerate(self.adj):
            for v in a[bisect_left(a, u):]:
                yield u, v

    def mutable_adjacency(self) -> list[set[int]]:
        return [set(a) for a in self.adj]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def load_edge_list(text: str | io.TextIOBase, n: int | None = None) -> Graph:
    """Parse a whitespace separated edge list.

    Lines starting with ``#`` or ``%`` are comments. The node count is
    ``max id + 1`` unless ``n`` is given or a ``# nodes: N`` header is
    present. Self-loops and duplicate edges are dropped.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    edges = []
    max_id = -1
    header_n = None
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        if line[0] in "#%":
            body = line[1:].strip().lower()
            if body.startswith("nodes:"):
                try:
                    header_n = int(body.split(":", 1)[1])
                except ValueError:
                    raise GraphFormatError(lineno, f"bad node header {line!r}") from None
            continue
        parts = line.split()
        if len(parts) < 2:
            raise GraphFormatError(lineno, f"expected two node ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(lineno, f"non-integer node id in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(lineno, "node ids must be nonnegative")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    if n is None:
        n = header_n if header_n is not None else max_id + 1
    if max_id >= n:
        raise GraphFormatError(0, f"node id {max_id} exceeds declared node count {n}")
    return Graph.from_edges(n, edges)


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return load_edge_list(fh)


def write_edge_list(g: Graph, fh, header: bool = True) -> None:
    """Write one ``u v`` line per edge, ``u < v``, ascending.

    The ``# nodes: N`` header keeps trailing isolated nodes on a round trip.
    """
    if header:
        fh.write(f"# nodes: {g.n}\n")
    for u, v in g.edges():
        fh.write(f"{u} {v}\n")


def dump_edge_list(g: Graph, header: bool = True) -> str:
    buf = io.StringIO()
    write_edge_list(g, buf, header=header)
    return buf.getvalue()


def permute_nodes(g: Graph, seed: int) -> tuple[Graph, list[int]]:
    """Relabel nodes by a uniformly random permutation.

    Returns the relabelled graph and ``mapping`` with ``mapping[old] == new``.
    """
    mapping = make_rng(seed).permutation(g.n).tolist()
    adj: list[tuple[int, ...]] = [()] * g.n
    for u, a in enumerate(g.adj):
        adj[mapping[u]] = tuple(sorted(mapping[v] for v in a))
    return Graph(g.n, adj), mapping


class TriangleCounts:
    """Per-edge triangle counts aligned with the graph's adjacency tuples.

    ``counts[u][i]`` is the number of triangles through ``{u, g.adj[u][i]}``.
    """

    __slots__ = ("graph", "counts")

    def __init__(self, graph: Graph, counts: list[list[int]]):
        self.graph = graph
        self.counts = counts

    def get(self, u: int, v: int) -> int:
        a = self.graph.adj[u]
        i = bisect_left(a, v)
        if i == len(a) or a[i] != v:
            raise KeyError((u, v))
        return self.counts[u][i]

    def __getitem__(self, edge: tuple[int, int]) -> int:
        return self.get(*edge)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for u, a in enumerate(self.graph.adj):
            row = self.counts[u]
            for i in range(bisect_left(a, u), len(a)):
                yield (u, a[i]), row[i]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.items())

    def total_triangles(self) -> int:
        return sum(sum(row) for row in self.counts) // 6


def count_triangles(g: Graph) -> TriangleCounts:
    """Exact triangle count for every edge.

    Each edge is handled once, from its lower-degree endpoint; the set
    intersection iterates the smaller neighborhood.
    """
    sets = g.adj_sets
    adj = g.adj
    with paused_gc():
        counts = [[0] * len(a) for a in adj]
        for u in range(g.n):
            au = adj[u]
            su = sets[u]
            du = len(au)
            row = counts[u]
            for i, v in enumerate(au):
                dv = len(adj[v])
                if dv < du or (dv == du and v < u):
                    continue
                t = len(su & sets[v])
                if t:
                    row[i] = t
                    counts[v][bisect_left(adj[v], u)] = t
    return TriangleCounts(g, counts)


def pseudo_counter(g: Graph, t: TriangleCounts, u: int, v: int) -> int:
    """``(d(u) - 1 - t) * (d(v) - 1 - t)`` for edge ``{u, v}``.

    Equals the number of C4 through the edge plus the number of P4 having
    it as central edge.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    tri = t.get(u, v)
    return (g.degree(u) - 1 - tri) * (g.degree(v) - 1 - tri)
