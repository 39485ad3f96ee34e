from itertools import product

import pytest

from grandmotzkin import counting, series
from grandmotzkin.errors import DomainError


def test_trinomial_examples():
    assert counting.trinomial(2, 2) == 3
    for n in range(10):
        assert counting.trinomial(n, 0) == 1
    assert counting.trinomial(3, -2) == 0
    assert counting.trinomial(3, 7) == 0


def test_trinomial_row_symmetry_and_sum():
    for n in range(41):
        row = counting.trinomial_row(n)
        assert len(row) == 2 * n + 1
        assert row == row[::-1]
        assert sum(row) == 3**n


def test_trinomial_against_expansion():
    poly = series.from_coeffs([1, 1, 1], 24)
    for n in range(13):
        p = poly.pow(n)
        for k in range(2 * n + 1):
            assert counting.trinomial(n, k) == p.coefficient(k)


def test_motzkin_numbers():
    assert counting.motzkin_number(0) == 1
    assert counting.motzkin_number(4) == 9
    assert counting.motzkin_number(12) == 15511
    m = series.motzkin_series(30)
    for n in range(31):
        assert counting.motzkin_number(n) == m.coefficient(n)


def test_grand_count():
    assert counting.grand_count(0) == 1
    assert counting.grand_count(2) == 3
    assert counting.grand_count(4) == 19
    g = series.grand_series(30)
    for n in range(31):
        assert counting.grand_count(n) == g.coefficient(n)


def test_grand_count_brute_force():
    for n in range(9):
        brute = sum(
            1
            for s in product((1, 0, -1), repeat=n)
            if sum(s) == 0
        )
        assert counting.grand_count(n) == brute


def test_level_count_examples():
    assert counting.level_count(1, 1) == 1
    assert counting.level_count(4, 2) == 9
    for n in range(12):
        assert counting.level_count(n, 0) == counting.motzkin_number(n)
    assert counting.level_count(2, 3) == 0


def test_level_count_trinomial_difference():
    for n in range(21):
        for k in range(n + 1):
            expected = counting.trinomial(n, n - k) - counting.trinomial(
                n, n - k - 2
            )
            assert counting.level_count(n, k) == expected


def test_forest_count_examples():
    assert counting.forest_count(4, 1) == 4
    assert counting.forest_count(3, 3) == 1
    assert counting.forest_count(4, 2) == 5
    for n in range(1, 15):
        assert counting.forest_count(n, n) == 1
        for j in range(n + 1, n + 4):
            assert counting.forest_count(n, j) == 0


def test_super_tree_count():
    assert counting.super_tree_count(2) == 1
    assert counting.super_tree_count(4) == 3
    assert counting.super_tree_count(6) == 19
    for n in range(13):
        assert counting.super_tree_count(n + 2) == counting.grand_count(n)
    with pytest.raises(DomainError):
        counting.super_tree_count(1)


def test_super_tree_count_as_odd_forest_sum():
    for nodes in range(2, 16):
        total = sum(
            counting.forest_count(nodes - 1, j)
            for j in range(1, nodes, 2)
        )
        assert counting.super_tree_count(nodes) == total


def test_counts_exceed_machine_words():
    # 3^n growth: exactness must survive well past 64-bit range
    assert counting.grand_count(100) > 2**63
    assert counting.trinomial(100, 100) == counting.grand_count(100)
