import io
import random

import pytest

import oracles
from conftest import complete, cycle, path
from qtedit.exact import (
    Edit,
    EditError,
    SearchLimitExceeded,
    apply_edits,
    branch_edits,
    brute_force_optimum,
    bst_solve,
    read_edits,
    write_edits,
)
from qtedit.graph import Graph
from qtedit.recognition import C4, P4, Certificate, is_quasi_threshold, recognize, verify_certificate


@pytest.mark.parametrize("kind,dels,ins", [(P4, 3, 3), (C4, 4, 2)])
def test_branch_edits_shape(kind, dels, ins):
    edits = branch_edits(Certificate(kind, (0, 1, 2, 3)))
    assert len(edits) == 6 and len(set(edits)) == 6
    assert sum(e.kind == "-" for e in edits) == dels
    assert sum(e.kind == "+" for e in edits) == ins


@pytest.mark.parametrize("g", [path(4), cycle(4)])
def test_branch_edits_destroy_witness(g):
    cert = recognize(g)
    for e in branch_edits(cert):
        assert not verify_certificate(apply_edits(g, [e]), cert)


def test_bst_examples():
    sol = bst_solve(path(4), 1)
    assert len(sol) == 1 and is_quasi_threshold(apply_edits(path(4), sol))
    sol = bst_solve(cycle(4), 1)
    assert len(sol) == 1 and sol[0].kind == "+"
    assert bst_solve(complete(5), 3) == []
    assert bst_solve(cycle(5), 1) is None
    assert len(bst_solve(cycle(5), 5)) == 2


def test_brute_force_examples():
    assert brute_force_optimum(path(4)) == 1
    assert brute_force_optimum(cycle(4)) == 1
    assert brute_force_optimum(cycle(5)) == 2
    assert brute_force_optimum(path(3)) == 0


def test_brute_force_refuses_large():
    with pytest.raises(ValueError):
        brute_force_optimum(path(7))


def test_brute_force_matches_enumeration_oracle():
    rnd = random.Random(0)
    for _ in range(20):
        g = oracles.random_graph(rnd, 5, rnd.random())
        assert brute_force_optimum(g) == oracles.optimum_by_enumeration(g)


def test_bst_equals_brute_force():
    rnd = random.Random(1)
    for _ in range(150):
        g = oracles.random_graph(rnd, rnd.randint(4, 6), rnd.random())
        opt = brute_force_optimum(g)
        for prune in (True, False):
            sol = bst_solve(g, opt, prune=prune)
            assert len(sol) == opt
            assert is_quasi_threshold(apply_edits(g, sol))
        if opt:
            assert bst_solve(g, opt - 1) is None


def test_bst_on_larger_graphs_is_valid():
    rnd = random.Random(2)
    for _ in range(20):
        g = oracles.random_graph(rnd, 10, 0.3)
        sol = bst_solve(g, 6)
        if sol is not None:
            assert is_quasi_threshold(apply_edits(g, sol))


def test_node_limit():
    g = oracles.random_graph(random.Random(3), 12, 0.5)
    with pytest.raises(SearchLimitExceeded):
        bst_solve(g, 20, node_limit=5)


def test_apply_edits_errors():
    g = path(3)
    with pytest.raises(EditError):
        apply_edits(g, [Edit("+", 0, 1)])
    with pytest.raises(EditError):
        apply_edits(g, [Edit("-", 0, 2)])
    with pytest.raises(EditError):
        apply_edits(g, [Edit("-", 0, 1), Edit("+", 1, 0)])
    with pytest.raises(EditError):
        apply_edits(g, [Edit("+", 0, 9)])


def test_edit_file_round_trip():
    edits = [Edit("+", 0, 2), Edit("-", 1, 3)]
    buf = io.StringIO()
    write_edits(edits, buf)
    assert buf.getvalue() == "+ 0 2\n- 1 3\n"
    assert read_edits(io.StringIO(buf.getvalue())) == edits
    assert read_edits(io.StringIO("- 3 1\n")) == [Edit("-", 1, 3)]
    with pytest.raises(EditError):
        read_edits(io.StringIO("* 0 1\n"))
    with pytest.raises(EditError):
        read_edits(io.StringIO("+ a 1\n"))


def test_apply_returns_new_graph():
    g = path(4)
    h = apply_edits(g, [Edit("-", 1, 2)])
    assert g.m == 3 and h.m == 2 and isinstance(h, Graph)
