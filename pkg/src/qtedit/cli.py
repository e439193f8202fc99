"""Command line front end: ``qtedit <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import __version__
from .bench import ALGORITHMS, benchmark
from .exact import EditError, apply_edits, bst_solve, read_edits, write_edits
from .generator import GeneratorError, GenSpec, generate_qt, plant_edits
from .graph import GraphFormatError, count_triangles, read_edge_list, write_edge_list
from .initialization import initial_skeleton, trivial_skeleton
from .lowerbound import lower_bound
from .nastos_gao import ng_greedy
from .qtm import run_qtm
from .recognition import recognize
from .skeleton import ForestError, SkeletonForest, count_edits, edit_diff, write_skeleton

log = logging.getLogger("qtedit")


class _Output:
    """Collects ``key=value`` summary lines, or one JSON object with ``--json``."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}

    def __setitem__(self, key, value):
        self.data[key] = value
        if not self.as_json:
            print(f"{key}={value}")

    def finish(self):
        if self.as_json:
            print(json.dumps(self.data, sort_keys=True))


def _write(path, writer, *args):
    with open(path, "w") as fh:
        writer(*args, fh)


def _skeleton(g, kind: str) -> SkeletonForest:
    return initial_skeleton(g, count_triangles(g)) if kind == "heuristic" else trivial_skeleton(g)


def cmd_recognize(args, out):
    g = read_edge_list(args.graph)
    res = recognize(g)
    if isinstance(res, SkeletonForest):
        if not args.json:
            print("quasi-threshold: yes")
        out["quasi_threshold"] = "yes"
        _write(args.out or f"{args.graph}.skeleton", write_skeleton, res)
    else:
        if not args.json:
            print("quasi-threshold: no")
        out["quasi_threshold"] = "no"
        out["certificate"] = f"{res.kind} " + " ".join(map(str, res.nodes))


def cmd_bound(args, out):
    g = read_edge_list(args.graph)
    t0 = time.perf_counter()
    res = lower_bound(g, args.seed, reorder=args.reorder)
    out["bound"] = res.bound
    out["ms"] = round(1000 * (time.perf_counter() - t0), 3)
    if args.pairs:
        for u, v in res.removed_pairs:
            print(f"pair {u} {v}")


def cmd_init(args, out):
    g = read_edge_list(args.graph)
    t0 = time.perf_counter()
    f = _skeleton(g, args.init)
    out["edits"] = count_edits(g, f)
    out["ms"] = round(1000 * (time.perf_counter() - t0), 3)
    if args.out:
        _write(args.out, write_skeleton, f)
    if args.edits_out:
        _write(args.edits_out, write_edits, edit_diff(g, f))


def cmd_qtm(args, out):
    g = read_edge_list(args.graph)
    t0 = time.perf_counter()
    f = _skeleton(g, args.init)
    rounds = None if args.until_stable else args.rounds
    res = run_qtm(g, f, rounds, seed=args.seed)
    elapsed = time.perf_counter() - t0
    out["initial_edits"] = res.initial_edits
    for st in res.trace:
        if not args.json:
            print(f"round={st.round} edits={st.edits} moves={st.moves} ms={1000 * st.seconds:.3f}")
    if args.json:
        out["trace"] = [
            {"round": st.round, "edits": st.edits, "moves": st.moves} for st in res.trace
        ]
    out["edits"] = res.edits
    out["rounds"] = res.rounds
    out["ms"] = round(1000 * elapsed, 3)
    if args.out:
        _write(args.out, write_skeleton, res.forest)
    if args.edits_out:
        _write(args.edits_out, write_edits, edit_diff(g, res.forest))


def cmd_ng(args, out):
    g = read_edge_list(args.graph)
    t0 = time.perf_counter()
    res = ng_greedy(g, args.revert_depth, use_bst=args.bst, allow_reedit=not args.freeze,
                    bst_node_limit=args.node_limit)
    elapsed = time.perf_counter() - t0
    if args.trace:
        for step, (e, (p4, c4)) in enumerate(zip(res.steps, res.trace[1:]), 1):
            print(f"step={step} edit={e.kind}{e.u},{e.v} p4={p4} c4={c4}")
    out["greedy_steps"] = len(res.steps)
    out["edits"] = len(res.edits)
    out["ms"] = round(1000 * elapsed, 3)
    if args.edits_out:
        _write(args.edits_out, write_edits, res.edits)


def cmd_exact(args, out):
    g = read_edge_list(args.graph)
    sol = bst_solve(g, args.kmax)
    if sol is None:
        out["edits"] = "none"
        return
    out["edits"] = len(sol)
    if args.edits_out:
        _write(args.edits_out, write_edits, sol)
    elif not args.json:
        write_edits(sol, sys.stdout)


def cmd_generate(args, out):
    spec = GenSpec(args.n, seed=args.seed, planted_k=args.k)
    qt, forest = generate_qt(spec)
    g, planted = plant_edits(qt, args.k, args.seed)
    _write(f"{args.out}.edges", write_edge_list, g)
    _write(f"{args.out}.skeleton", write_skeleton, forest)
    _write(f"{args.out}.planted", write_edits, planted)
    out["n"] = g.n
    out["m"] = g.m
    out["planted"] = len(planted)


def cmd_bench(args, out):
    g = read_edge_list(args.graph)
    rounds = None if args.until_stable else args.rounds
    summary, runs = benchmark(
        args.algo, g, args.runs, args.seed, args.jobs,
        max_rounds=rounds, init=args.init, revert_depth=args.revert_depth,
    )
    if args.json:
        out.data.update(summary.as_dict())
        out.data["per_run"] = [r.__dict__ for r in runs]
    else:
        print(summary.row())


def cmd_verify(args, out):
    g = read_edge_list(args.graph)
    with open(args.edits) as fh:
        edits = read_edits(fh)
    h = apply_edits(g, edits)
    ok = isinstance(recognize(h), SkeletonForest)
    if not args.json:
        print(f"quasi-threshold: {'yes' if ok else 'no'}")
    out["quasi_threshold"] = "yes" if ok else "no"
    out["edits"] = len(edits)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtedit", description="Quasi-threshold graph editing.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("graph", help="edge list file")
        sp.add_argument("--json", action="store_true", help="print one JSON summary")
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("recognize", cmd_recognize, "test for quasi-threshold, print certificate")
    sp.add_argument("--out", help="skeleton file written on acceptance (default GRAPH.skeleton)")

    sp = graph_cmd("bound", cmd_bound, "lower bound on the edit distance")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--reorder", action="store_true", help="follow current degrees")
    sp.add_argument("--pairs", action="store_true", help="list removed node pairs")

    sp = graph_cmd("init", cmd_init, "initial skeleton and its edit count")
    sp.add_argument("--init", choices=["heuristic", "trivial"], default="heuristic")
    sp.add_argument("--out", help="skeleton file")
    sp.add_argument("--edits-out", help="edit list file")

    sp = graph_cmd("qtm", cmd_qtm, "Quasi-Threshold Mover")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--rounds", type=int, default=4)
    grp.add_argument("--until-stable", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--init", choices=["heuristic", "trivial"], default="heuristic")
    sp.add_argument("--out", help="skeleton file")
    sp.add_argument("--edits-out", help="edit list file")

    sp = graph_cmd("ng", cmd_ng, "greedy P4/C4 editing baseline")
    sp.add_argument("--bst", action="store_true", help="refine the tail with the exact solver")
    sp.add_argument("--revert-depth", type=int, default=10)
    sp.add_argument("--node-limit", type=int, default=None, help="exact solver node cap")
    sp.add_argument("--freeze", action="store_true", help="never re-edit a pair")
    sp.add_argument("--trace", action="store_true", help="print per-step counters")
    sp.add_argument("--edits-out", help="edit list file")

    sp = graph_cmd("exact", cmd_exact, "bounded search tree solver")
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--edits-out", help="edit list file")

    sp = sub.add_parser("generate", help="planted-edit quasi-threshold instance")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", required=True, help="output prefix")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_generate)

    sp = graph_cmd("bench", cmd_bench, "seeded repetitions with min/mean/std statistics")
    sp.add_argument("--algo", choices=ALGORITHMS, default="qtm")
    sp.add_argument("--runs", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--rounds", type=int, default=4)
    grp.add_argument("--until-stable", action="store_true")
    sp.add_argument("--init", choices=["heuristic", "trivial"], default="heuristic")
    sp.add_argument("--revert-depth", type=int, default=10)

    sp = graph_cmd("verify", cmd_verify, "apply an edit list and test the result")
    sp.add_argument("--edits", required=True, help="edit list file")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = _Output(getattr(args, "json", False))
    try:
        args.func(args, out)
    except (OSError, GraphFormatError, EditError, ForestError, GeneratorError) as exc:
        print(f"qtedit: error: {exc}", file=sys.stderr)
        return 1
    out.finish()
    return 0


if __name__ == "__main__":
    sys.exit(main())
