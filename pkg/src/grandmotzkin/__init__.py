"""Motzkin and Grand Motzkin paths, {0,1,2}-trees, and the bijections
between them, with exact integer series and counting."""

from .paths import (
    GrandDecomposition,
    GrandMotzkinPath,
    LatticePath,
    MotzkinPath,
    classify,
    enumerate_ending_at,
    enumerate_grand,
    enumerate_motzkin,
    grand_compose,
    grand_decompose,
    parse_path,
)
from .trees import (
    SuperTree,
    Tree012,
    enumerate_super_trees,
    enumerate_trees,
    parse_super_tree,
    parse_tree,
    preorder_edges,
    serialize,
)
from .bijection import (
    grand_to_super_tree,
    path_to_tree,
    super_tree_to_grand,
    tree_to_path,
)
from .series import IntSeries, grand_series, motzkin_series, q_series, subst_v
from .counting import (
    forest_count,
    grand_count,
    level_count,
    motzkin_number,
    super_tree_count,
    trinomial,
)
from .sampling import (
    make_rng,
    sample_grand,
    sample_motzkin,
    sample_super_tree,
    sample_tree,
)

__version__ = "0.1.0"
