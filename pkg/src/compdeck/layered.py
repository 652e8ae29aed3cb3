"""Layered permutations and their correspondence with compositions.

A layered permutation is a direct sum of decreasing permutations, e.g.
``2,1,3,6,5,4,7,9,8`` is ``21 + 1 + 321 + 1 + 21`` and corresponds to the
composition ``2,1,3,1,2``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .composition import Composition, as_composition

Permutation = tuple[int, ...]

MAX_PATTERN_LENGTH = 12


def as_permutation(entries: Iterable[int]) -> Permutation:
    p = tuple(entries)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def parse_permutation(text: str) -> Permutation:
    s = text.strip()
    if not s:
        raise ValueError("empty permutation text")
    try:
        entries = [int(field) for field in s.split(",")]
    except ValueError:
        raise ValueError(f"bad permutation {text!r}") from None
    return as_permutation(entries)


def format_permutation(p: Sequence[int]) -> str:
    return ",".join(str(e) for e in p)


def direct_sum(sigma: Sequence[int], pi: Sequence[int]) -> Permutation:
    m = len(sigma)
    return tuple(sigma) + tuple(e + m for e in pi)


def composition_to_layered(w: Iterable[int]) -> Permutation:
    out: list[int] = []
    for part in as_composition(w):
        base = len(out)
        out.extend(range(base + part, base, -1))
    return tuple(out)


def layered_to_composition(p: Sequence[int]) -> Composition:
    """Return the layer lengths of `p`; ValueError if `p` is not layered."""
    p = as_permutation(p)
    layers = []
    start = 0
    top = 0
    for i, e in enumerate(p):
        top = max(top, e)
        if top == i + 1:
            # p[start..i] holds exactly start+1..i+1; it must be decreasing
            if p[start:i + 1] != tuple(range(i + 1, start, -1)):
                raise ValueError(f"{format_permutation(p)} is not layered")
            layers.append(i + 1 - start)
            start = i + 1
    return tuple(layers)


def is_layered(p: Sequence[int]) -> bool:
    try:
        layered_to_composition(p)
    except ValueError:
        return False
    return True


def _pattern(seq: Sequence[int]) -> tuple[int, ...]:
    ranks = sorted(seq)
    return tuple(ranks.index(e) + 1 for e in seq)


def pattern_contains(sigma: Sequence[int], pi: Sequence[int]) -> bool:
    """True if some subsequence of `pi` is order-isomorphic to `sigma` (brute force)."""
    if len(pi) > MAX_PATTERN_LENGTH:
        raise ValueError(f"pattern search limited to length {MAX_PATTERN_LENGTH}")
    target = tuple(sigma)
    if len(target) > len(pi):
        return False
    return any(_pattern(sub) == target for sub in combinations(pi, len(target)))
