"""Exact big-integer counting of paths, trees and forests.

All results are Python ints (arbitrary precision); Grand Motzkin counts
grow like 3^n and leave 64-bit range near n = 40, so nothing here ever
goes through floating point.
"""

from __future__ import annotations

import threading

from .errors import DomainError
from . import series

_row_lock = threading.Lock()
_rows: list[tuple[int, ...]] = [(1,)]

_motzkin_lock = threading.Lock()
_motzkin: list[int] = [1]


def trinomial_row(n: int) -> tuple[int, ...]:
    """Row n of the trinomial triangle: coefficients of (1 + z + z^2)^n."""
    if n < 0:
        raise DomainError(f"row index must be nonnegative, got {n}")
    with _row_lock:
        while len(_rows) <= n:
            prev = _rows[-1]
            m = len(prev)
            row = tuple(
                (prev[k - 2] if k >= 2 else 0)
                + (prev[k - 1] if 1 <= k <= m else 0)
                + (prev[k] if k < m else 0)
                for k in range(m + 2)
            )
            _rows.append(row)
        return _rows[n]


def trinomial(n: int, k: int) -> int:
    """[z^k] (1 + z + z^2)^n; zero outside 0 <= k <= 2n."""
    if k < 0 or k > 2 * n:
        return 0
    return trinomial_row(n)[k]


def motzkin_number(n: int) -> int:
    """Number of Motzkin paths of length n (and of trees with n+1 nodes)."""
    if n < 0:
        raise DomainError(f"length must be nonnegative, got {n}")
    with _motzkin_lock:
        while len(_motzkin) <= n:
            m = len(_motzkin)  # computing M_m
            _motzkin.append(
                _motzkin[m - 1]
                + sum(_motzkin[i] * _motzkin[m - 2 - i] for i in range(m - 1))
            )
        return _motzkin[n]


def grand_count(n: int) -> int:
    """Number of Grand Motzkin paths of length n: the central trinomial."""
    if n < 0:
        raise DomainError(f"length must be nonnegative, got {n}")
    return trinomial(n, n)


def level_count(n: int, k: int) -> int:
    """Number of nonnegative paths of length n ending at level k."""
    if n < 0 or k < 0:
        raise DomainError(f"arguments must be nonnegative, got n={n}, k={k}")
    if k > n:
        return 0
    # [z^n] z^k M^{k+1}
    m = series.motzkin_series(n - k)
    return m.pow(k + 1).coefficient(n - k)


def forest_count(n: int, j: int) -> int:
    """Number of ordered forests of j {0,1,2}-trees with n total nodes."""
    if n < 1 or j < 1:
        raise DomainError(f"arguments must be positive, got n={n}, j={j}")
    count = trinomial(n - 1, n - j) - trinomial(n - 1, n - j - 2)
    assert count >= 0
    return count


def super_tree_count(nodes: int) -> int:
    """Number of super-trees with the given total node count."""
    if nodes < 2:
        raise DomainError(f"a super-tree has at least 2 nodes, got {nodes}")
    return grand_count(nodes - 2)
