"""Lattice paths over the steps U=(1,1), F=(1,0), D=(1,-1).

Paths are stored as immutable step strings.  A Motzkin path never goes
below the x-axis and ends on it; a Grand Motzkin path only has to end
on it.  Besides validation and exhaustive enumeration, this module
implements the canonical decomposition of a Grand Motzkin path into an
odd number of Motzkin segments around its minimum level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import ArityError, BoundExceededError, DomainError, PathParseError

STEP_KINDS = "UFD"
DISPLACEMENT = {"U": 1, "F": 0, "D": -1}

#: Default cap on exhaustive enumeration length (3^n candidates).
DEFAULT_ENUMERATION_BOUND = 16


@dataclass(frozen=True)
class LatticePath:
    """A finite sequence of U/F/D steps, one character per step."""

    steps: str

    def __post_init__(self):
        for i, ch in enumerate(self.steps):
            if ch not in DISPLACEMENT:
                raise PathParseError(i, ch)

    def __len__(self) -> int:
        return len(self.steps)

    @cached_property
    def levels(self) -> tuple[int, ...]:
        """Prefix heights, starting at 0; has len(steps) + 1 entries."""
        out = [0]
        for ch in self.steps:
            out.append(out[-1] + DISPLACEMENT[ch])
        return tuple(out)

    @property
    def final_level(self) -> int:
        return self.levels[-1]

    @property
    def min_level(self) -> int:
        return min(self.levels)

    def __str__(self) -> str:
        return self.steps


class MotzkinPath(LatticePath):
    """A path that stays weakly above the x-axis and ends on it."""

    def __post_init__(self):
        super().__post_init__()
        if self.min_level < 0:
            raise DomainError(f"path {self.steps!r} goes below the x-axis")
        if self.final_level != 0:
            raise DomainError(
                f"path {self.steps!r} ends at level {self.final_level}, not 0"
            )


class GrandMotzkinPath(LatticePath):
    """A path that ends on the x-axis; negative levels are allowed."""

    def __post_init__(self):
        super().__post_init__()
        if self.final_level != 0:
            raise DomainError(
                f"path {self.steps!r} ends at level {self.final_level}, not 0"
            )


@dataclass(frozen=True)
class GrandDecomposition:
    """A Grand Motzkin path split at its minimum level -k into 2k+1 Motzkin segments."""

    k: int
    segments: tuple[MotzkinPath, ...]

    def __post_init__(self):
        if len(self.segments) != 2 * self.k + 1:
            raise ArityError(
                f"expected {2 * self.k + 1} segments for k={self.k}, "
                f"got {len(self.segments)}"
            )


def parse_path(text: str) -> LatticePath:
    """Parse a step string; raises PathParseError on any character outside UFD."""
    return LatticePath(text)


def classify(path: LatticePath) -> str:
    """Return 'Motzkin', 'GrandOnly', or 'EndsAtLevel(k)' for k != 0."""
    if path.final_level != 0:
        return f"EndsAtLevel({path.final_level})"
    if path.min_level < 0:
        return "GrandOnly"
    return "Motzkin"


def _check_bound(n: int, bound: int):
    if n < 0:
        raise DomainError(f"length must be nonnegative, got {n}")
    if n > bound:
        raise BoundExceededError(n, bound)


def _walk(n: int, target: int, nonnegative: bool) -> Iterator[str]:
    """Yield step strings of length n ending at `target`, in U < F < D order.

    A partial path at level l with s steps left survives iff
    |l - target| <= s, and l >= 0 when `nonnegative` is set.
    """
    buf: list[str] = []

    def rec(level: int, remaining: int):
        if remaining == 0:
            if level == target:
                yield "".join(buf)
            return
        for ch in STEP_KINDS:
            nxt = level + DISPLACEMENT[ch]
            if (nxt >= 0 or not nonnegative) and abs(nxt - target) <= remaining - 1:
                buf.append(ch)
                yield from rec(nxt, remaining - 1)
                buf.pop()

    yield from rec(0, n)


def enumerate_motzkin(
    n: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[MotzkinPath]:
    """All Motzkin paths of length n, lexicographic with U < F < D."""
    _check_bound(n, bound)
    return [MotzkinPath(s) for s in _walk(n, 0, nonnegative=True)]


def enumerate_grand(
    n: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[GrandMotzkinPath]:
    """All Grand Motzkin paths of length n, lexicographic with U < F < D."""
    _check_bound(n, bound)
    return [GrandMotzkinPath(s) for s in _walk(n, 0, nonnegative=False)]


def enumerate_ending_at(
    n: int, k: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[LatticePath]:
    """All nonnegative paths of length n from level 0 to level k."""
    if k < 0:
        raise DomainError(f"target level must be nonnegative, got {k}")
    _check_bound(n, bound)
    return [LatticePath(s) for s in _walk(n, k, nonnegative=True)]


def grand_decompose(path: GrandMotzkinPath) -> GrandDecomposition:
    """Split a Grand Motzkin path into 2k+1 Motzkin segments, k = -min level.

    The descent is cut at the first visits to levels -1, ..., -k (each
    reached by a forced D), the ascent at the last visits (each left by a
    forced U), and the middle segment sits between the first and last
    visit to -k.  Each piece, shifted up to start at 0, is a Motzkin path.
    """
    if path.final_level != 0:
        raise DomainError(f"path {path.steps!r} does not end at level 0")
    levels = path.levels
    k = -min(levels)
    if k == 0:
        return GrandDecomposition(0, (MotzkinPath(path.steps),))

    first = {}  # level -> first position at that level
    last = {}  # level -> last position at that level
    for pos, lvl in enumerate(levels):
        if lvl not in first:
            first[lvl] = pos
        last[lvl] = pos

    segments: list[MotzkinPath] = []
    for i in range(1, k + 1):
        # steps between the first visit to -(i-1) and the D into -i
        segments.append(MotzkinPath(path.steps[first[-(i - 1)] : first[-i] - 1]))
    segments.append(MotzkinPath(path.steps[first[-k] : last[-k]]))
    for i in range(k, 0, -1):
        # steps after the U out of -i up to the last visit to -(i-1)
        segments.append(MotzkinPath(path.steps[last[-i] + 1 : last[-(i - 1)]]))
    return GrandDecomposition(k, tuple(segments))


def grand_compose(k: int, segments: Sequence[MotzkinPath]) -> GrandMotzkinPath:
    """Inverse of grand_decompose: w0 D w1 D ... w(k-1) D wk U ... U w(2k)."""
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if len(segments) != 2 * k + 1:
        raise ArityError(
            f"expected {2 * k + 1} segments for k={k}, got {len(segments)}"
        )
    parts = []
    for i, seg in enumerate(segments):
        if not isinstance(seg, MotzkinPath):
            seg = MotzkinPath(str(seg))
        parts.append(seg.steps)
        if i < k:
            parts.append("D")
        elif i < 2 * k:
            parts.append("U")
    return GrandMotzkinPath("".join(parts))
