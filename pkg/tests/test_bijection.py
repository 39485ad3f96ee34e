import pytest

from grandmotzkin.bijection import (
    grand_to_super_tree,
    path_to_tree,
    super_tree_to_grand,
    tree_to_path,
)
from grandmotzkin.errors import DomainError
from grandmotzkin.paths import (
    GrandMotzkinPath,
    MotzkinPath,
    enumerate_grand,
    enumerate_motzkin,
)
from grandmotzkin.trees import (
    enumerate_super_trees,
    enumerate_trees,
    parse_super_tree,
    parse_tree,
    preorder_edges,
    serialize,
)


def test_tree_to_path_examples():
    assert tree_to_path(parse_tree("()")).steps == ""
    assert tree_to_path(parse_tree("(()())")).steps == "UD"
    assert tree_to_path(parse_tree("((())())")).steps == "UFD"


def test_path_to_tree_examples():
    assert serialize(path_to_tree(MotzkinPath(""))) == "()"
    assert serialize(path_to_tree(MotzkinPath("FF"))) == "((()))"
    assert serialize(path_to_tree(MotzkinPath("UFD"))) == "((())())"


def test_path_to_tree_rejects_non_motzkin():
    with pytest.raises(DomainError):
        path_to_tree("DU")


def test_round_trip_tree_side():
    for nodes in range(1, 14):
        for tree in enumerate_trees(nodes):
            path = tree_to_path(tree)
            assert len(path) == tree.node_count - 1
            assert path_to_tree(path) == tree


def test_round_trip_path_side():
    for n in range(13):
        for path in enumerate_motzkin(n):
            assert tree_to_path(path_to_tree(path)).steps == path.steps


def test_step_statistics_law():
    for nodes in range(1, 10):
        for tree in enumerate_trees(nodes):
            edges = preorder_edges(tree)
            steps = tree_to_path(tree).steps
            assert steps.count("F") == edges.count("single")
            assert steps.count("U") == edges.count("left")
            assert steps.count("D") == edges.count("right")
            assert edges.count("left") == edges.count("right")


def test_image_is_full_motzkin_set():
    for n in range(10):
        image = {tree_to_path(t).steps for t in enumerate_trees(n + 1)}
        assert image == {p.steps for p in enumerate_motzkin(n)}


def test_super_tree_to_grand_examples():
    assert super_tree_to_grand(parse_super_tree("(())")).steps == ""
    assert super_tree_to_grand(parse_super_tree("(()()())")).steps == "DU"
    assert super_tree_to_grand(parse_super_tree("((())()(()))")).steps == "FDUF"


def test_grand_to_super_tree_examples():
    assert serialize(grand_to_super_tree(GrandMotzkinPath(""))) == "(())"
    assert serialize(grand_to_super_tree(GrandMotzkinPath("DU"))) == "(()()())"
    got = grand_to_super_tree(GrandMotzkinPath("FDUF"))
    assert serialize(got) == "((())()(()))"
    assert got.node_count == 6


def test_grand_round_trip_tree_side():
    for nodes in range(2, 13):
        for st in enumerate_super_trees(nodes):
            path = super_tree_to_grand(st)
            assert len(path) == st.node_count - 2
            assert grand_to_super_tree(path) == st


def test_grand_round_trip_path_side():
    for n in range(11):
        for path in enumerate_grand(n):
            st = grand_to_super_tree(path)
            assert st.node_count == len(path) + 2
            assert super_tree_to_grand(st).steps == path.steps
