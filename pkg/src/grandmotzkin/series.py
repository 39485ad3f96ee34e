"""Truncated formal power series with exact integer coefficients.

A series is a tuple of coefficients indexed 0..order; everything beyond
the order is unrepresented.  Arithmetic truncates to the smaller operand
order, and composition truncates to the inner order.  No rationals and
no radicals anywhere: series defined by a square root in closed form are
constructed from their defining polynomial identity instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError


@dataclass(frozen=True)
class IntSeries:
    """Integer coefficients c[0..N] of a series truncated at order N."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.order:
            raise DomainError(
                f"coefficient {n} beyond truncation order {self.order}"
            )
        return self.coeffs[n]

    def truncate(self, order: int) -> "IntSeries":
        if order >= self.order:
            return self
        return IntSeries(self.coeffs[: order + 1])

    def __add__(self, other: "IntSeries") -> "IntSeries":
        n = min(self.order, other.order)
        return IntSeries(
            tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1))
        )

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        n = min(self.order, other.order)
        return IntSeries(
            tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1))
        )

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        n = min(self.order, other.order)
        return IntSeries(_convolve(self.coeffs, other.coeffs, n))

    def pow(self, j: int) -> "IntSeries":
        """j-th power by repeated squaring; pow(0) is the constant 1."""
        if j < 0:
            raise DomainError(f"exponent must be nonnegative, got {j}")
        result = one(self.order)
        base = self
        while j:
            if j & 1:
                result = result * base
            base = base * base
            j >>= 1
        return result

    def inverse(self) -> "IntSeries":
        """Multiplicative inverse; requires constant term +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise DomainError(
                f"constant term must be +1 or -1 for an integer inverse, got {c0}"
            )
        n = self.order
        inv = [c0] + [0] * n
        for m in range(1, n + 1):
            acc = 0
            for i in range(1, min(m, self.order) + 1):
                acc += self.coeffs[i] * inv[m - i]
            inv[m] = -c0 * acc
        return IntSeries(tuple(inv))

    def compose(self, inner: "IntSeries") -> "IntSeries":
        """Substitute `inner` (zero constant term) into this series (Horner)."""
        if inner.coeffs[0] != 0:
            raise DomainError("inner series must have zero constant term")
        n = inner.order
        acc = [0] * (n + 1)
        for c in reversed(self.coeffs):
            acc = list(_convolve(tuple(acc), inner.coeffs, n))
            acc[0] += c
        return IntSeries(tuple(acc))

    def __str__(self) -> str:
        return " + ".join(f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c)


def _convolve(a: Sequence[int], b: Sequence[int], order: int) -> tuple[int, ...]:
    out = [0] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return tuple(out)


def from_coeffs(coeffs: Sequence[int], order: int | None = None) -> IntSeries:
    """Build a series, zero-padding up to `order` when given."""
    c = list(coeffs)
    if order is not None:
        if len(c) > order + 1:
            c = c[: order + 1]
        c += [0] * (order + 1 - len(c))
    return IntSeries(tuple(c))


def one(order: int) -> IntSeries:
    return from_coeffs([1], order)


def identity(order: int) -> IntSeries:
    """The series z, truncated at the given order."""
    return from_coeffs([0, 1], order)


def motzkin_series(order: int) -> IntSeries:
    """The series M with M = 1 + z*M + z^2*M^2, by fixpoint iteration.

    Each pass stabilizes at least one more coefficient, so at most
    order + 1 passes are needed; iteration stops as soon as a pass is a
    no-op.
    """
    if order < 0:
        raise DomainError(f"order must be nonnegative, got {order}")
    m = one(order)
    for _ in range(order + 1):
        m2 = m * m
        nxt = [1] + [
            m.coeffs[i - 1] + (m2.coeffs[i - 2] if i >= 2 else 0)
            for i in range(1, order + 1)
        ]
        nxt_series = IntSeries(tuple(nxt))
        if nxt_series == m:
            break
        m = nxt_series
    return m


def q_series(order: int) -> IntSeries:
    """The tree series Q = z*M(z), satisfying Q = z + z*Q + z*Q^2."""
    if order < 0:
        raise DomainError(f"order must be nonnegative, got {order}")
    if order == 0:
        return IntSeries((0,))
    return IntSeries((0,) + motzkin_series(order - 1).coeffs)


def grand_series(order: int) -> IntSeries:
    """The series G with G(0) = 1 and (1 - 2z - 3z^2) * G^2 = 1.

    Computed coefficientwise: H = G^2 satisfies H_n = 2H_{n-1} + 3H_{n-2},
    and G is recovered as the integer square root of H term by term.
    """
    if order < 0:
        raise DomainError(f"order must be nonnegative, got {order}")
    h = [1] + [0] * order
    for n in range(1, order + 1):
        h[n] = 2 * h[n - 1] + (3 * h[n - 2] if n >= 2 else 0)
    g = [1] + [0] * order
    for n in range(1, order + 1):
        acc = h[n] - sum(g[i] * g[n - i] for i in range(1, n))
        if acc % 2:
            raise AssertionError("square-root extraction lost integrality")
        g[n] = acc // 2
    return IntSeries(tuple(g))


def subst_v(order: int) -> IntSeries:
    """The substitution series z(v) = v / (1 + v + v^2), as a series in v."""
    if order < 0:
        raise DomainError(f"order must be nonnegative, got {order}")
    if order == 0:
        return IntSeries((0,))
    inv = from_coeffs([1, 1, 1], order - 1).inverse()
    return IntSeries((0,) + inv.coeffs)
