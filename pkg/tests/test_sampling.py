from collections import Counter

import pytest

from grandmotzkin import counting
from grandmotzkin.errors import DomainError
from grandmotzkin.paths import classify, enumerate_motzkin
from grandmotzkin.sampling import (
    make_rng,
    sample_grand,
    sample_motzkin,
    sample_super_tree,
    sample_tree,
)
from grandmotzkin.trees import serialize


def test_trivial_cases():
    rng = make_rng(0)
    assert sample_motzkin(0, rng).steps == ""
    assert sample_motzkin(1, rng).steps == "F"
    assert sample_grand(0, rng).steps == ""
    assert sample_grand(1, rng).steps == "F"
    assert serialize(sample_tree(1, rng)) == "()"
    assert serialize(sample_super_tree(2, rng)) == "(())"


def test_domain_errors():
    rng = make_rng(0)
    with pytest.raises(DomainError):
        sample_motzkin(-1, rng)
    with pytest.raises(DomainError):
        sample_tree(0, rng)
    with pytest.raises(DomainError):
        sample_super_tree(1, rng)


def test_samples_are_valid():
    rng = make_rng(123)
    for n in range(0, 20):
        assert classify(sample_motzkin(n, rng)) == "Motzkin"
        p = sample_grand(n, rng)
        assert p.final_level == 0
        assert sample_tree(n + 1, rng).node_count == n + 1
        assert sample_super_tree(n + 2, rng).node_count == n + 2


def test_determinism():
    a = [sample_motzkin(8, make_rng(99)).steps for _ in range(1)]
    for _ in range(3):
        assert [sample_motzkin(8, make_rng(99)).steps] == a
    ra, rb = make_rng(7), make_rng(7)
    for _ in range(50):
        assert sample_grand(9, ra).steps == sample_grand(9, rb).steps
        assert serialize(sample_super_tree(8, ra)) == serialize(
            sample_super_tree(8, rb)
        )


def test_motzkin_uniformity_n4():
    rng = make_rng(20260823)
    freq = Counter(sample_motzkin(4, rng).steps for _ in range(90_000))
    paths = {p.steps for p in enumerate_motzkin(4)}
    assert set(freq) == paths
    # 5-sigma window: sigma = sqrt(90000 * 1/9 * 8/9) ~ 94.3
    for count in freq.values():
        assert abs(count - 10_000) <= 600


def test_grand_uniformity_n2():
    rng = make_rng(4242)
    draws = 9_000
    freq = Counter(sample_grand(2, rng).steps for _ in range(draws))
    assert set(freq) == {"FF", "UD", "DU"}
    # sigma = sqrt(9000 * 1/3 * 2/3) ~ 44.7; allow 5 sigma
    for count in freq.values():
        assert abs(count - 3_000) <= 224


def test_tree_uniformity_n5():
    rng = make_rng(77)
    draws = 9_000
    freq = Counter(serialize(sample_tree(5, rng)) for _ in range(draws))
    assert len(freq) == counting.motzkin_number(4) == 9
    # sigma = sqrt(9000 * 1/9 * 8/9) ~ 29.8; allow 5 sigma
    for count in freq.values():
        assert abs(count - 1_000) <= 150
