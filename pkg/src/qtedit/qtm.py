"""Quasi-Threshold Mover: local moving of single nodes in a skeleton forest.

One move takes a node ``v`` out of the forest and reinserts it below the
parent (plus a set of that parent's children to adopt) that minimizes the
number of edits incident to ``v``. The search only touches ``O(d(v))``
nodes: the neighbors of ``v`` and ancestors reported by them, processed
bottom-up through a depth-ordered priority queue, with short resumable
DFS walks computing how close each subtree is to ``v``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush

from .graph import Graph, make_rng, paused_gc
from .skeleton import NONE, SkeletonForest, count_edits


class MoverError(ValueError):
    pass


@dataclass
class MoveDecision:
    new_parent: int  # NONE for the virtual root
    adopted: list[int]
    savings: int  # edits saved relative to isolating the node


@dataclass
class MoveScratch:
    """Per-node search state, reset to the initial values after every move."""

    child_close: list[int]
    score_max: list[int]
    dfs_cursor: list[int]
    touched: list[bool]
    queued: list[bool]
    best: list[int]
    touched_log: list[int] = field(default_factory=list)

    @classmethod
    def create(cls, size: int) -> MoveScratch:
        return cls(
            [0] * size,
            [-1] * size,
            list(range(size)),
            [False] * size,
            [False] * size,
            list(range(size)),
        )

    def reset(self) -> None:
        cc, sm, dfs = self.child_close, self.score_max, self.dfs_cursor
        touched, queued = self.touched, self.queued
        for x in self.touched_log:
            cc[x] = 0
            sm[x] = -1
            dfs[x] = x
            touched[x] = False
            queued[x] = False
        self.touched_log.clear()

    def is_clean(self) -> bool:
        return (
            not self.touched_log
            and all(c == 0 for c in self.child_close)
            and all(s == -1 for s in self.score_max)
            and all(d == i for i, d in enumerate(self.dfs_cursor))
            and not any(self.touched)
            and not any(self.queued)
        )


@dataclass
class RoundStats:
    round: int
    edits: int
    moves: int
    seconds: float


@dataclass
class QTMResult:
    forest: SkeletonForest
    edits: int
    rounds: int
    initial_edits: int
    trace: list[RoundStats]


class Mover:
    """Mutable skeleton with child arrays and maintained depths.

    The virtual root is an extra node with index ``n`` and depth ``-1``;
    forest roots are its children.
    """

    def __init__(self, g: Graph, forest: SkeletonForest, edits: int | None = None):
        if forest.n != g.n:
            raise MoverError(f"forest has {forest.n} nodes, graph has {g.n}")
        forest.validate()
        n = g.n
        self.g = g
        self.n = n
        self.root = r = n
        self.nbr_sets = g.adj_sets
        self.parent = [r if p == NONE else p for p in forest.parent] + [NONE]
        self.depth = list(forest.depth) + [-1]
        self.children: list[list[int]] = [[] for _ in range(n + 1)]
        self.child_pos = [0] * (n + 1)
        for u in range(n):
            p = self.parent[u]
            self.child_pos[u] = len(self.children[p])
            self.children[p].append(u)
        self.scratch = MoveScratch.create(n + 1)
        self.edits = count_edits(g, forest) if edits is None else edits
        self.last_pushes = 0
        self.detached: int | None = None

    # tree surgery

    def _unlink(self, u: int) -> None:
        p = self.parent[u]
        sibs = self.children[p]
        i = self.child_pos[u]
        last = sibs.pop()
        if last != u:
            sibs[i] = last
            self.child_pos[last] = i

    def _link(self, u: int, p: int) -> None:
        self.parent[u] = p
        self.child_pos[u] = len(self.children[p])
        self.children[p].append(u)

    def _shift_subtree(self, u: int, delta: int, nb=None) -> int:
        """Add ``delta`` to all depths below and at ``u``.

        With ``nb`` given, also returns neighbors minus non-neighbors of the
        node set visited.
        """
        depth, children = self.depth, self.children
        score = 0
        stack = [u]
        while stack:
            x = stack.pop()
            depth[x] += delta
            if nb is not None:
                score += 1 if x in nb else -1
            stack.extend(children[x])
        return score

    def detach(self, v: int) -> tuple[int, list[int], int]:
        """Remove ``v``; its children move up to its parent.

        Returns the old parent, the old children and the score of the old
        position (neighbors minus non-neighbors among ancestors and
        descendants).
        """
        if self.detached is not None:
            raise MoverError(f"node {self.detached} is already detached")
        nb = self.nbr_sets[v]
        parent, r = self.parent, self.root
        p = parent[v]
        score = 0
        a = p
        while a != r:
            score += 1 if a in nb else -1
            a = parent[a]
        self._unlink(v)
        kids = self.children[v]
        self.children[v] = []
        for c in kids:
            self._link(c, p)
            score += self._shift_subtree(c, -1, nb)
        self.detached = v
        return p, kids, score

    def attach(self, v: int, p: int, adopted: list[int]) -> None:
        """Insert ``v`` below ``p`` and make ``adopted`` (children of ``p``) its children."""
        if self.detached != v:
            raise MoverError(f"node {v} is not detached")
        parent = self.parent
        for c in adopted:
            if parent[c] != p:
                raise MoverError(f"node {c} is not a child of {p}")
        self._link(v, p)
        self.depth[v] = self.depth[p] + 1
        for c in adopted:
            self._unlink(c)
            self._link(c, v)
            self._shift_subtree(c, 1)
        self.detached = None

    # the move search

    def try_move(self, vm: int) -> MoveDecision:
        """Best parent and adopted children for the detached node ``vm``."""
        if self.detached != vm:
            raise MoverError(f"node {vm} must be detached before searching")
        s = self.scratch
        cc, sm, dfs = s.child_close, s.score_max, s.dfs_cursor
        touched, queued, best, log = s.touched, s.queued, s.best, s.touched_log
        parent, children, child_pos, depth = self.parent, self.children, self.child_pos, self.depth
        r = self.root
        nb = self.nbr_sets[vm]

        # heap keys order by depth descending, then id: key = x - depth[x] * size
        size = r + 1
        heap = []
        for x in self.g.adj[vm]:
            queued[x] = True
            heap.append(x - depth[x] * size)
        heapify(heap)
        pushes = len(heap)

        while heap:
            u = heappop(heap) % size
            touched[u] = True
            log.append(u)
            ccu = cc[u]
            smu = sm[u]
            if ccu > smu:
                smu = ccu
                best[u] = u
            if u == r:
                sm[u] = smu
                break
            if u in nb:
                ccu += 1
                smu += 1
            else:
                ccu -= 1
                smu -= 1

            if ccu >= 0:
                kids = children[u]
                if kids:
                    x = kids[0]
                    while x != u:
                        if not touched[x] or cc[x] < 0:
                            ccu -= 1
                            x = dfs[x]
                            if ccu < 0:
                                dfs[u] = x
                                break
                            # next node in DFS order below u
                            if children[x]:
                                x = children[x][0]
                                continue
                        # next node after the subtree of x below u
                        while x != u:
                            p = parent[x]
                            i = child_pos[x] + 1
                            sibs = children[p]
                            if i < len(sibs):
                                x = sibs[i]
                                break
                            x = p
            cc[u] = ccu
            sm[u] = smu

            p = parent[u]
            grow = False
            if ccu > 0:
                cc[p] += ccu
                grow = True
            if smu > sm[p]:
                sm[p] = smu
                best[p] = best[u]
                grow = True
            if grow and not queued[p]:
                queued[p] = True
                heappush(heap, p - depth[p] * size)
                pushes += 1

        if sm[r] > 0:
            w = best[r]
            adopted = [c for c in log if c != r and parent[c] == w and cc[c] > 0]
            decision = MoveDecision(NONE if w == r else w, adopted, sm[r])
        else:
            decision = MoveDecision(NONE, [], 0)
        s.reset()
        self.last_pushes = pushes
        return decision

    def apply_move(self, vm: int, decision: MoveDecision, old: tuple[int, list[int], int]) -> bool:
        """Reinsert the detached ``vm``; returns whether the position changed."""
        old_parent, old_children, old_score = old
        if decision.savings > old_score:
            p = self.root if decision.new_parent == NONE else decision.new_parent
            self.attach(vm, p, decision.adopted)
            self.edits -= decision.savings - old_score
            return True
        self.attach(vm, old_parent, old_children)
        return False

    def move(self, vm: int) -> bool:
        old = self.detach(vm)
        return self.apply_move(vm, self.try_move(vm), old)

    def forest(self) -> SkeletonForest:
        r = self.root
        return SkeletonForest(
            [NONE if p == r else p for p in self.parent[:-1]], self.depth[:-1]
        )


def run_qtm(
    g: Graph,
    forest: SkeletonForest,
    max_rounds: int | None = 4,
    seed: int = 0,
    edits: int | None = None,
    check: bool = False,
) -> QTMResult:
    """Run rounds of moves over all nodes in a fresh random order per round.

    Stops after a round that moves nothing, or after ``max_rounds`` rounds
    (``None`` runs until stable). With ``check`` the edit count is
    recomputed from scratch after every round.
    """
    with paused_gc():
        mover = Mover(g, forest, edits)
        rng = make_rng(seed)
        initial = mover.edits
        trace = []
        rounds = 0
        while max_rounds is None or rounds < max_rounds:
            t0 = time.perf_counter()
            rounds += 1
            moves = 0
            move = mover.move
            for v in rng.permutation(g.n).tolist():
                if move(v):
                    moves += 1
            trace.append(RoundStats(rounds, mover.edits, moves, time.perf_counter() - t0))
            if check:
                recount = count_edits(g, mover.forest())
                if recount != mover.edits:
                    raise AssertionError(f"edit count drifted: {mover.edits} != {recount}")
            if moves == 0:
                break
    return QTMResult(mover.forest(), mover.edits, rounds, initial, trace)
