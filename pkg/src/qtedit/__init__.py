"""Quasi-threshold (trivially perfect) graph editing."""

__version__ = "0.1.0"

from .exact import Edit, apply_edits, branch_edits, brute_force_optimum, bst_solve
from .generator import GenSpec, generate_qt, plant_edits
from .graph import (
    Graph,
    TriangleCounts,
    count_triangles,
    load_edge_list,
    permute_nodes,
    pseudo_counter,
    read_edge_list,
    write_edge_list,
)
from .initialization import count_edits, initial_skeleton, trivial_skeleton
from .lowerbound import BoundResult, lower_bound
from .nastos_gao import count_p4_c4, delta_p4_c4, ng_greedy
from .qtm import MoveDecision, Mover, run_qtm
from .recognition import Certificate, recognize, verify_certificate
from .skeleton import NONE, SkeletonForest, closure_of_forest

__all__ = [
    "NONE", "BoundResult", "Certificate", "Edit", "GenSpec", "Graph", "MoveDecision",
    "Mover", "SkeletonForest", "TriangleCounts", "apply_edits", "branch_edits",
    "brute_force_optimum", "bst_solve", "closure_of_forest", "count_edits",
    "count_p4_c4", "count_triangles", "delta_p4_c4", "generate_qt", "initial_skeleton",
    "load_edge_list", "lower_bound", "ng_greedy", "permute_nodes", "plant_edits",
    "pseudo_counter", "read_edge_list", "recognize", "run_qtm", "trivial_skeleton",
    "verify_certificate", "write_edge_list",
]
