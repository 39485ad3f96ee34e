"""Pre-order bijection between {0,1,2}-trees and Motzkin paths, lifted
to super-trees and Grand Motzkin paths.

Walking a tree in pre-order and recording each edge the first time it is
seen, a single edge becomes a flat step, a left edge an up-step and a
right edge a down-step.  A tree with n+1 nodes maps to a Motzkin path of
length n.  For super-trees, the 2k+1 children are encoded separately and
assembled with grand_compose; the super-root and the extra leaf node
account for the path being two nodes shorter than the tree.
"""

from __future__ import annotations

from .errors import DomainError
from .paths import (
    GrandMotzkinPath,
    MotzkinPath,
    grand_compose,
    grand_decompose,
)
from .trees import SuperTree, Tree012


def tree_to_path(tree: Tree012) -> MotzkinPath:
    """Encode a tree as a Motzkin path of length node_count - 1."""
    out: list[str] = []

    def encode(node: Tree012):
        if len(node.children) == 1:
            out.append("F")
            encode(node.children[0])
        elif len(node.children) == 2:
            out.append("U")
            encode(node.children[0])
            out.append("D")
            encode(node.children[1])

    encode(tree)
    return MotzkinPath("".join(out))


def path_to_tree(path: MotzkinPath) -> Tree012:
    """Decode a Motzkin path back into the unique tree encoding it.

    Recursion depth is bounded by len(path) + 1 (worst case: all-U prefix).
    """
    if not isinstance(path, MotzkinPath):
        path = MotzkinPath(str(path))
    steps = path.steps

    def decode(i: int) -> tuple[Tree012, int]:
        """Parse one subtree starting at step i; returns (tree, next index)."""
        if i == len(steps) or steps[i] == "D":
            return Tree012(), i
        if steps[i] == "F":
            child, j = decode(i + 1)
            return Tree012((child,)), j
        # U: left subtree runs to the matching D, right subtree follows
        left, j = decode(i + 1)
        if j == len(steps) or steps[j] != "D":
            raise DomainError(f"no matching D for U at index {i}")
        right, j = decode(j + 1)
        return Tree012((left, right)), j

    tree, end = decode(0)
    if end != len(steps):
        raise DomainError(f"unexpected step at index {end}")
    return tree


def super_tree_to_grand(st: SuperTree) -> GrandMotzkinPath:
    """Encode a super-tree as a Grand Motzkin path of length node_count - 2."""
    k = (len(st.children) - 1) // 2
    return grand_compose(k, [tree_to_path(c) for c in st.children])


def grand_to_super_tree(path: GrandMotzkinPath) -> SuperTree:
    """Decode a Grand Motzkin path into a super-tree with length + 2 nodes.

    The depth k of the minimum is read off the path, never supplied.
    """
    if not isinstance(path, GrandMotzkinPath):
        path = GrandMotzkinPath(str(path))
    decomposition = grand_decompose(path)
    return SuperTree(tuple(path_to_tree(s) for s in decomposition.segments))
