"""Cross-checks every identity the library rests on, at a configurable bound.

Each check pits two independent computations against each other: exhaustive
enumeration against closed-form counts, bijections against round-trips and
image comparisons, and series against their defining polynomial identities.
All comparisons are exact integer equalities; the only statistical check is
sampler uniformity, with a 5-sigma frequency window.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Callable

from . import bijection, counting, sampling, series, trees
from . import paths as paths_mod

SERIES_ORDER = 30
FOREST_BOUND = 20
SAMPLE_SEED = 20260823
SAMPLE_COUNT = 90_000
# 5-sigma window around 10000 for 9 equiprobable outcomes over 90000 draws:
# sigma = sqrt(90000 * (1/9) * (8/9)) ~ 94.3, so 5 sigma ~ 472; 600 is safe.
SAMPLE_TOLERANCE = 600


def _brute_force_strings(n: int):
    return ("".join(s) for s in product("UFD", repeat=n))


def check_figure_reproduction(max_n: int) -> bool:
    """enumerate_motzkin(4) matches the brute-force filter of all 3^4 strings."""
    emitted = paths_mod.enumerate_motzkin(4)
    if len(emitted) != 9 or len(set(p.steps for p in emitted)) != 9:
        return False
    oracle = {
        s
        for s in _brute_force_strings(4)
        if paths_mod.classify(paths_mod.parse_path(s)) == "Motzkin"
    }
    return {p.steps for p in emitted} == oracle and all(
        len(p) == 4 for p in emitted
    )


def check_counts_vs_enumeration(max_n: int) -> bool:
    for n in range(min(max_n, 12) + 1):
        if len(paths_mod.enumerate_motzkin(n)) != counting.motzkin_number(n):
            return False
    for n in range(min(max_n, 10) + 1):
        grand = len(paths_mod.enumerate_grand(n))
        if grand != counting.grand_count(n) or grand != counting.trinomial(n, n):
            return False
    return True


def check_bijection_round_trips(max_n: int) -> bool:
    for n in range(min(max_n, 12) + 1):
        for path in paths_mod.enumerate_motzkin(n):
            tree = bijection.path_to_tree(path)
            if tree.node_count != n + 1:
                return False
            if bijection.tree_to_path(tree).steps != path.steps:
                return False
    for n in range(min(max_n, 9) + 1):
        image = {
            bijection.tree_to_path(t).steps
            for t in trees.enumerate_trees(n + 1)
        }
        expected = {p.steps for p in paths_mod.enumerate_motzkin(n)}
        if image != expected:
            return False
    for n in range(min(max_n, 10) + 1):
        for path in paths_mod.enumerate_grand(n):
            st = bijection.grand_to_super_tree(path)
            if st.node_count != n + 2:
                return False
            if bijection.super_tree_to_grand(st).steps != path.steps:
                return False
    return True


def check_grand_decomposition(max_n: int) -> bool:
    for n in range(min(max_n, 10) + 1):
        for path in paths_mod.enumerate_grand(n):
            dec = paths_mod.grand_decompose(path)
            if dec.k != -path.min_level:
                return False
            if len(dec.segments) != 2 * dec.k + 1:
                return False
            # MotzkinPath construction already validated each segment
            if paths_mod.grand_compose(dec.k, dec.segments).steps != path.steps:
                return False
    return True


def check_series_identities(max_n: int) -> bool:
    order = SERIES_ORDER
    m = series.motzkin_series(order)
    q = series.q_series(order)
    g = series.grand_series(order)
    z = series.identity(order)
    one = series.one(order)

    if series.one(order) + z * m + z * z * m * m != m:
        return False
    if z * m != q:
        return False
    if series.from_coeffs([1, -2, -3], order) * g * g != one:
        return False

    zv = series.subst_v(order)
    if q.compose(zv) != series.identity(order):
        return False
    lhs = g.compose(zv) * series.from_coeffs([1, 0, -1], order)
    if lhs != series.from_coeffs([1, 1, 1], order):
        return False

    for n in range(order + 1):
        if g.coefficient(n) != counting.trinomial(n, n):
            return False
    for n in range(1, FOREST_BOUND + 1):
        qn = series.q_series(n)
        for j in range(1, n + 1):
            if qn.pow(j).coefficient(n) != counting.forest_count(n, j):
                return False
    return True


def check_level_counts(max_n: int) -> bool:
    for n in range(min(max_n, 10) + 1):
        for k in range(n + 1):
            if len(paths_mod.enumerate_ending_at(n, k)) != counting.level_count(n, k):
                return False
    if counting.level_count(4, 2) != 9:
        return False
    for n in range(min(max_n, 20) + 1):
        for k in range(n + 1):
            expected = counting.trinomial(n, n - k) - counting.trinomial(
                n, n - k - 2
            )
            if counting.level_count(n, k) != expected:
                return False
    return True


def check_sampler_uniformity(max_n: int) -> bool:
    rng = sampling.make_rng(SAMPLE_SEED)
    freq = Counter(
        sampling.sample_motzkin(4, rng).steps for _ in range(SAMPLE_COUNT)
    )
    if set(freq) != {p.steps for p in paths_mod.enumerate_motzkin(4)}:
        return False
    target = SAMPLE_COUNT // 9
    if any(abs(c - target) > SAMPLE_TOLERANCE for c in freq.values()):
        return False
    # determinism: replaying the seed reproduces the stream exactly
    rng_a = sampling.make_rng(SAMPLE_SEED)
    rng_b = sampling.make_rng(SAMPLE_SEED)
    return all(
        sampling.sample_grand(6, rng_a).steps
        == sampling.sample_grand(6, rng_b).steps
        for _ in range(200)
    )


CHECKS: list[tuple[str, Callable[[int], bool]]] = [
    ("figure reproduction (9 Motzkin paths of length 4)", check_figure_reproduction),
    ("enumeration counts match closed forms", check_counts_vs_enumeration),
    ("tree/path bijections round-trip and cover", check_bijection_round_trips),
    ("grand decomposition law (2k+1 Motzkin segments)", check_grand_decomposition),
    ("series identity suite at order 30", check_series_identities),
    ("level-k counts match enumeration and trinomials", check_level_counts),
    ("sampler uniformity and determinism", check_sampler_uniformity),
]


def run_verification(max_n: int = 12) -> tuple[list[tuple[str, bool]], bool]:
    """Run every check at the given bound; returns (results, all_passed)."""
    results = [(name, check(max_n)) for name, check in CHECKS]
    return results, all(ok for _, ok in results)
