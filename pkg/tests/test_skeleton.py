import io
import random

import pytest

import oracles
from conftest import complete, path
from qtedit.skeleton import (
    NONE,
    ForestError,
    SkeletonForest,
    closure_of_forest,
    compute_depths,
    count_edits,
    edit_diff,
    read_skeleton,
    write_skeleton,
)


def test_depths():
    assert compute_depths([NONE, 0, 1, 0]) == [0, 1, 2, 1]


@pytest.mark.parametrize("parent", [[1, 0], [0], [NONE, 5], [NONE, -3]])
def test_bad_parent_maps(parent):
    with pytest.raises(ForestError):
        compute_depths(parent)


def test_closure_examples():
    assert closure_of_forest(SkeletonForest.trivial(5)).m == 0
    star = closure_of_forest(SkeletonForest.from_parents([NONE, 0, 0, 0]))
    assert sorted(star.edges()) == [(0, 1), (0, 2), (0, 3)]
    chain = closure_of_forest(SkeletonForest.from_parents([NONE, 0, 1]))
    assert chain == complete(3)


def test_closure_rejects_cycle():
    with pytest.raises(ForestError):
        closure_of_forest(SkeletonForest([1, 0], [0, 0]))


def test_count_edits_examples():
    assert count_edits(path(3), SkeletonForest.from_parents([NONE, 0, 1])) == 1
    g = oracles.random_graph(random.Random(0), 10, 0.4)
    assert count_edits(g, SkeletonForest.trivial(10)) == g.m


def test_count_edits_rejects_inconsistent_depth():
    with pytest.raises(ForestError):
        count_edits(path(3), SkeletonForest([NONE, 0, 1], [0, 1, 1]))


def test_count_edits_and_diff_match_oracle():
    rnd = random.Random(1)
    for _ in range(200):
        n = rnd.randint(1, 12)
        g = oracles.random_graph(rnd, n, rnd.random())
        parent = oracles.random_forest(rnd, n)
        f = SkeletonForest.from_parents(parent)
        expected = oracles.edit_distance_to_forest(g, parent)
        assert count_edits(g, f) == expected
        diff = list(edit_diff(g, f))
        assert len(diff) == expected
        closure = oracles.closure_pairs(parent)
        for kind, u, v in diff:
            assert u < v
            assert (kind == "+") == ((u, v) in closure) != g.has_edge(u, v)


def test_skeleton_round_trip():
    f = SkeletonForest.from_parents(oracles.random_forest(random.Random(2), 20))
    buf = io.StringIO()
    write_skeleton(f, buf)
    assert read_skeleton(io.StringIO(buf.getvalue())) == f


def test_forest_queries():
    f = SkeletonForest.from_parents([NONE, 0, 1, 0, NONE])
    assert f.roots() == [0, 4]
    assert f.children()[0] == [1, 3]
    assert list(f.ancestors(2)) == [1, 0]
    assert f.is_ancestor(0, 2) and not f.is_ancestor(3, 2)
    assert f.closure_size() == 4
    assert closure_of_forest(f).n == 5
    with pytest.raises(ForestError):
        closure_of_forest(f, 7)
