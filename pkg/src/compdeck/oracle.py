"""Brute-force preimage search and the lower-bound witnesses.

Nothing here uses the reconstruction procedures; decks are computed with the
containment-filter route so the oracle does not share code paths with the
validation step of `reconstruct`.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .composition import (
    Composition,
    Deck,
    canonical_sorted,
    compositions,
    k_deletions,
)

MAX_ORACLE_N = 22


def enumerate_compositions(n: int) -> list[Composition]:
    """All compositions of `n` in canonical enumeration order (2**(n-1) of them)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(compositions(n))


def _check_guard(n: int) -> None:
    if n > MAX_ORACLE_N:
        raise ValueError(f"n={n} exceeds the enumeration guard n <= {MAX_ORACLE_N}")


@lru_cache(maxsize=16)
def deck_table(n: int, k: int) -> dict[frozenset[Composition], tuple[Composition, ...]]:
    """Group the compositions of `n` by their k-deletion set."""
    _check_guard(n)
    if k > n:
        return {}
    groups: dict[frozenset[Composition], list[Composition]] = defaultdict(list)
    for w in compositions(n):
        groups[k_deletions(w, k, method="filter").elements].append(w)
    return {key: tuple(ws) for key, ws in groups.items()}


def brute_force_preimages(deck: Deck, k: int) -> set[Composition]:
    """Every composition of ``deck.target_sum + k`` whose k-deletion set is `deck`."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = deck.target_sum + k
    _check_guard(n)
    return set(deck_table(n, k).get(deck.elements, ()))


def ambiguity_census(k: int, n: int) -> int:
    """Number of distinct decks shared by two or more compositions of `n`."""
    return sum(1 for ws in deck_table(n, k).values() if len(ws) >= 2)


def collision_classes(k: int, n: int) -> list[list[Composition]]:
    """The collision classes counted by `ambiguity_census`, canonically sorted."""
    classes = [canonical_sorted(ws) for ws in deck_table(n, k).values() if len(ws) >= 2]
    return sorted(classes, key=lambda c: [(len(w), w) for w in c])


def compositions_with_max_part(n: int, largest: int) -> list[Composition]:
    return [w for w in compositions(n) if all(p <= largest for p in w)]


def tightness_witness(k: int) -> tuple[Composition, Composition, Deck]:
    """Return ``(12)^k``, ``(21)^k`` and their common k-deletion deck.

    Raises AssertionError if the two decks differ or the deck is not the set
    of compositions of 2k with no part above 2.
    """
    if k < 1:
        raise ValueError("k must be positive")
    up = (1, 2) * k
    down = (2, 1) * k
    deck = k_deletions(up, k)
    assert k_deletions(down, k) == deck, "witness decks differ"
    assert deck.elements == frozenset(compositions_with_max_part(2 * k, 2)), \
        "witness deck is not the set of compositions of 2k with parts <= 2"
    return up, down, deck
