"""Rooted ordered trees with outdegree at most 2, and super-rooted trees.

A tree is written as nested parentheses: "()" is a single node, and a
node's children follow in order inside its parentheses.  A super-tree
is a root with an odd number of children, each of which is a {0,1,2}-tree;
it serializes the same way, the root simply escaping the outdegree bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Union

from .errors import ArityError, BoundExceededError, DomainError, TreeParseError

#: Default cap on exhaustive tree enumeration (node count).
DEFAULT_ENUMERATION_BOUND = 16

#: Edge labels used by the pre-order encoding.
SINGLE, LEFT, RIGHT = "single", "left", "right"


@dataclass(frozen=True)
class Tree012:
    """An ordered tree in which every node has 0, 1, or 2 children."""

    children: tuple["Tree012", ...] = ()

    def __post_init__(self):
        if len(self.children) > 2:
            raise ArityError(
                f"node has {len(self.children)} children; at most 2 allowed"
            )

    @cached_property
    def node_count(self) -> int:
        return 1 + sum(c.node_count for c in self.children)

    @property
    def edge_count(self) -> int:
        return self.node_count - 1

    def __str__(self) -> str:
        return serialize(self)


@dataclass(frozen=True)
class SuperTree:
    """A root with an odd number of {0,1,2}-tree children.

    node_count includes the super-root itself.
    """

    children: tuple[Tree012, ...]

    def __post_init__(self):
        if len(self.children) % 2 == 0:
            raise ArityError(
                f"super-root has {len(self.children)} children; must be odd"
            )

    @cached_property
    def node_count(self) -> int:
        return 1 + sum(c.node_count for c in self.children)

    def __str__(self) -> str:
        return serialize(self)


LEAF = Tree012()


def serialize(tree: Union[Tree012, SuperTree]) -> str:
    """Canonical nested-parentheses text."""
    return "(" + "".join(serialize(c) for c in tree.children) + ")"


def _parse_children(text: str, start: int, limit: int | None) -> tuple[list[Tree012], int]:
    """Parse child groups from text[start:] until the enclosing ')'."""
    children: list[Tree012] = []
    i = start
    while i < len(text) and text[i] == "(":
        child, i = _parse_group(text, i)
        children.append(child)
        if limit is not None and len(children) > limit:
            raise TreeParseError(
                f"node starting at position {start - 1} has more than "
                f"{limit} children"
            )
    return children, i


def _parse_group(text: str, i: int) -> tuple[Tree012, int]:
    # caller guarantees text[i] == "("
    children, j = _parse_children(text, i + 1, limit=2)
    if j >= len(text) or text[j] != ")":
        raise TreeParseError(f"unbalanced parentheses at position {j}")
    return Tree012(tuple(children)), j + 1


def parse_tree(text: str) -> Tree012:
    """Parse a nested-parentheses string into a Tree012."""
    if not text or text[0] != "(":
        raise TreeParseError("expected '(' at position 0")
    tree, end = _parse_group(text, 0)
    if end != len(text):
        raise TreeParseError(f"trailing input at position {end}")
    return tree


def parse_super_tree(text: str) -> SuperTree:
    """Parse a super-tree: the root may have any odd arity, children are Tree012."""
    if not text or text[0] != "(":
        raise TreeParseError("expected '(' at position 0")
    children, j = _parse_children(text, 1, limit=None)
    if j != len(text) - 1 or text[j] != ")":
        raise TreeParseError(f"unbalanced parentheses at position {j}")
    return SuperTree(tuple(children))


def _check_bound(nodes: int, minimum: int, bound: int):
    if nodes < minimum:
        raise DomainError(f"node count must be at least {minimum}, got {nodes}")
    if nodes > bound:
        raise BoundExceededError(nodes, bound)


def _trees_with(nodes: int) -> Iterator[Tree012]:
    if nodes == 1:
        yield LEAF
        return
    for child in _trees_with(nodes - 1):
        yield Tree012((child,))
    for left_nodes in range(1, nodes - 1):
        for left in _trees_with(left_nodes):
            for right in _trees_with(nodes - 1 - left_nodes):
                yield Tree012((left, right))


def enumerate_trees(
    nodes: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[Tree012]:
    """All {0,1,2}-trees with the given node count, ordered by serialization."""
    _check_bound(nodes, 1, bound)
    return sorted(_trees_with(nodes), key=serialize)


def _forests_with(nodes: int, count: int) -> Iterator[tuple[Tree012, ...]]:
    """Ordered forests of `count` trees with `nodes` total nodes."""
    if count == 0:
        if nodes == 0:
            yield ()
        return
    for head_nodes in range(1, nodes - count + 2):
        for head in _trees_with(head_nodes):
            for rest in _forests_with(nodes - head_nodes, count - 1):
                yield (head,) + rest


def enumerate_super_trees(
    nodes: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[SuperTree]:
    """All super-trees with the given total node count (super-root included)."""
    _check_bound(nodes, 2, bound)
    found = []
    arity = 1
    while arity <= nodes - 1:
        for forest in _forests_with(nodes - 1, arity):
            found.append(SuperTree(forest))
        arity += 2
    return sorted(found, key=serialize)


def preorder_edges(tree: Tree012) -> list[str]:
    """Edge labels in pre-order-first-seen order: single, left, or right."""
    out: list[str] = []

    def visit(node: Tree012):
        if len(node.children) == 1:
            out.append(SINGLE)
            visit(node.children[0])
        elif len(node.children) == 2:
            out.append(LEFT)
            visit(node.children[0])
            out.append(RIGHT)
            visit(node.children[1])

    visit(tree)
    return out
