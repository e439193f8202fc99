"""Seeded repetitions of the editing algorithms and their summary statistics."""

from __future__ import annotations

import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .graph import Graph, count_triangles, permute_nodes
from .initialization import initial_skeleton, trivial_skeleton
from .lowerbound import lower_bound
from .nastos_gao import ng_greedy
from .qtm import run_qtm
from .skeleton import count_edits

ALGORITHMS = ("qtm", "init", "ng", "ng-bst", "bound")


@dataclass
class RunResult:
    seed: int
    edits: int
    iterations: int
    ms: float


@dataclass
class Summary:
    algo: str
    n: int
    m: int
    runs: int
    edits_min: int
    edits_mean: float
    edits_std: float
    iterations_mean: float
    iterations_max: int
    ms_mean: float
    ms_std: float

    def row(self) -> str:
        return (
            f"{self.algo}\tn={self.n}\tm={self.m}\truns={self.runs}\t"
            f"min={self.edits_min}\tmean={self.edits_mean:.1f}\tstd={self.edits_std:.1f}\t"
            f"it_mean={self.iterations_mean:.1f}\tit_max={self.iterations_max}\t"
            f"ms_mean={self.ms_mean:.1f}\tms_std={self.ms_std:.1f}"
        )

    def as_dict(self) -> dict:
        return asdict(self)


def run_once(
    algo: str,
    g: Graph,
    seed: int,
    max_rounds: int | None = 4,
    init: str = "heuristic",
    revert_depth: int = 10,
    permute: bool = True,
) -> RunResult:
    """One run on a seeded node permutation of ``g``; time excludes the permutation."""
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}")
    if permute:
        g, _ = permute_nodes(g, seed)
    t0 = time.perf_counter()
    iterations = 0
    if algo in ("qtm", "init"):
        forest = initial_skeleton(g, count_triangles(g)) if init == "heuristic" else trivial_skeleton(g)
        if algo == "qtm":
            res = run_qtm(g, forest, max_rounds, seed=seed)
            edits, iterations = res.edits, res.rounds
        else:
            edits = count_edits(g, forest)
    elif algo == "bound":
        edits = lower_bound(g, seed).bound
    else:
        edits = len(ng_greedy(g, revert_depth, use_bst=algo == "ng-bst").edits)
    return RunResult(seed, edits, iterations, 1000 * (time.perf_counter() - t0))


def _run_star(args):
    return run_once(*args)


def benchmark(
    algo: str,
    g: Graph,
    runs: int = 10,
    seed: int = 0,
    jobs: int = 1,
    **kwargs,
) -> tuple[Summary, list[RunResult]]:
    """``runs`` repetitions with seeds ``seed .. seed + runs - 1``."""
    args = [
        (algo, g, seed + i, kwargs.get("max_rounds", 4), kwargs.get("init", "heuristic"),
         kwargs.get("revert_depth", 10))
        for i in range(runs)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run_star, args))
    else:
        results = [_run_star(a) for a in args]
    edits = [r.edits for r in results]
    its = [r.iterations for r in results]
    ms = [r.ms for r in results]
    summary = Summary(
        algo, g.n, g.m, runs,
        min(edits), statistics.fmean(edits), statistics.pstdev(edits),
        statistics.fmean(its), max(its),
        statistics.fmean(ms), statistics.pstdev(ms),
    )
    return summary, results
