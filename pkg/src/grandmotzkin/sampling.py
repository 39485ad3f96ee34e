"""Uniform random generation via exact suffix counts.

At every step the sampler knows how many valid completions each of U, F,
D leads to, and picks one with probability proportional to that count.
The counts are exact integers, so uniformity is structural rather than
statistical; no rejection and no floats.  Suffix tables are immutable
once built and may be shared, but a random source must not be shared
between concurrent samplers.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .bijection import grand_to_super_tree, path_to_tree
from .errors import DomainError
from .paths import GrandMotzkinPath, MotzkinPath
from .trees import SuperTree, Tree012


def make_rng(seed: int) -> random.Random:
    """Deterministic random source; same seed, same sample sequence."""
    return random.Random(seed)


@lru_cache(maxsize=None)
def _motzkin_table(n: int) -> tuple[tuple[int, ...], ...]:
    """table[s][l] = completions of s steps from level l staying >= 0, ending at 0."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for s in range(1, n + 1):
        prev = table[s - 1]
        for l in range(n + 1):
            acc = prev[l]
            if l + 1 <= n:
                acc += prev[l + 1]
            if l >= 1:
                acc += prev[l - 1]
            table[s][l] = acc
    return tuple(tuple(row) for row in table)


@lru_cache(maxsize=None)
def _grand_table(n: int) -> tuple[tuple[int, ...], ...]:
    """table[s][l + n] = completions of s steps from level l ending at 0, any sign."""
    width = 2 * n + 1
    table = [[0] * width for _ in range(n + 1)]
    table[0][n] = 1
    for s in range(1, n + 1):
        prev = table[s - 1]
        for idx in range(width):
            acc = prev[idx]
            if idx + 1 < width:
                acc += prev[idx + 1]
            if idx >= 1:
                acc += prev[idx - 1]
            table[s][idx] = acc
    return tuple(tuple(row) for row in table)


def _draw_path(n: int, rng: random.Random, table, offset: int, floor: int) -> str:
    steps = []
    level = 0
    for s in range(n, 0, -1):
        row = table[s - 1]
        weights = []
        for ch, d in (("U", 1), ("F", 0), ("D", -1)):
            nxt = level + d
            idx = nxt + offset
            w = row[idx] if floor <= nxt and 0 <= idx < len(row) else 0
            weights.append((ch, d, w))
        total = sum(w for _, _, w in weights)
        r = rng.randrange(total)
        for ch, d, w in weights:
            if r < w:
                steps.append(ch)
                level += d
                break
            r -= w
    return "".join(steps)


def sample_motzkin(n: int, rng: random.Random) -> MotzkinPath:
    """A uniformly random Motzkin path of length n."""
    if n < 0:
        raise DomainError(f"length must be nonnegative, got {n}")
    return MotzkinPath(_draw_path(n, rng, _motzkin_table(n), offset=0, floor=0))


def sample_grand(n: int, rng: random.Random) -> GrandMotzkinPath:
    """A uniformly random Grand Motzkin path of length n."""
    if n < 0:
        raise DomainError(f"length must be nonnegative, got {n}")
    return GrandMotzkinPath(
        _draw_path(n, rng, _grand_table(n), offset=n, floor=-n)
    )


def sample_tree(nodes: int, rng: random.Random) -> Tree012:
    """A uniformly random {0,1,2}-tree with the given node count."""
    if nodes < 1:
        raise DomainError(f"node count must be positive, got {nodes}")
    return path_to_tree(sample_motzkin(nodes - 1, rng))


def sample_super_tree(nodes: int, rng: random.Random) -> SuperTree:
    """A uniformly random super-tree with the given total node count."""
    if nodes < 2:
        raise DomainError(f"a super-tree has at least 2 nodes, got {nodes}")
    return grand_to_super_tree(sample_grand(nodes - 2, rng))
