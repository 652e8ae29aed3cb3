"""Reconstruct a composition of n >= 3k+1 from its set of k-deletions.

The deck is first sorted into one of three regimes by how many 1's the
unknown composition has compared with k, and each regime has its own
procedure.  Every answer is checked by recomputing the deck.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Union

from .composition import (
    Composition,
    Deck,
    count_ones,
    deck_contains_probe,
    exceedance,
    format_composition,
    k_deletions,
)
from .oracle import brute_force_preimages


class OnesRegime(enum.Enum):
    FEWER_THAN_K = "fewer-than-k"
    EXACTLY_K = "exactly-k"
    MORE_THAN_K = "more-than-k"


@dataclass(frozen=True)
class Unique:
    composition: Composition


@dataclass(frozen=True)
class Ambiguous:
    candidates: frozenset[Composition]


@dataclass(frozen=True)
class NotADeck:
    reason: str


ReconstructionResult = Union[Unique, Ambiguous, NotADeck]


class NotADeckError(ValueError):
    """Raised by the regime procedures when the input cannot be a k-deletion deck."""


@dataclass(frozen=True)
class GapVector:
    """Numbers of 1's before, between and after the parts >= 2 of a composition."""

    entries: tuple[int, ...]

    @property
    def holes(self) -> int:
        return sum(1 for z in self.entries if z == 0)

    def interleave(self, big_parts: Composition) -> Composition:
        if len(self.entries) != len(big_parts) + 1:
            raise ValueError("gap vector must be one longer than the big parts")
        w: list[int] = [1] * self.entries[0]
        for p, z in zip(big_parts, self.entries[1:]):
            w.append(p)
            w.extend([1] * z)
        return tuple(w)

    @classmethod
    def of(cls, w: Composition) -> "GapVector":
        gaps = [0]
        for p in w:
            if p == 1:
                gaps[-1] += 1
            else:
                gaps.append(0)
        return cls(tuple(gaps))


def _total(deck: Deck, k: int) -> int:
    return deck.target_sum + k


def _check_theorem_range(deck: Deck, k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    n = _total(deck, k)
    if n < 3 * k + 1:
        raise ValueError(f"n={n} is below 3k+1={3 * k + 1}; use the brute-force oracle")
    return n


def _largest_fill(deck: Deck, probe: Callable[[int], tuple[int, ...]], cap: int) -> int:
    """Largest s in 1..cap with probe(s) in the deck, or 0 if even s=1 fails.

    Probes are monotone in s, so the scan stops at the first failure.
    """
    s = 0
    while s < cap and deck_contains_probe(deck.elements, probe(s + 1)):
        s += 1
    return s


def classify_ones(deck: Deck, k: int) -> OnesRegime:
    """Decide whether the unknown composition has fewer than, exactly, or more than k 1's."""
    n = _check_theorem_range(deck, k)
    lengths = [len(d) for d in deck.elements]
    at_least_k = (1,) * (n - k) in deck or max(lengths) - min(lengths) == k
    if not at_least_k:
        return OnesRegime.FEWER_THAN_K
    if any(1 not in d for d in deck.elements):
        return OnesRegime.EXACTLY_K
    return OnesRegime.MORE_THAN_K


# fewer than k ones

def few_ones_profile(deck: Deck, k: int) -> tuple[Composition, int]:
    """Return ``(a, t)`` where a(i) is the largest s such that ``1..1 s 1..1``
    (s at position i) lies under some deck element, and t is the exceedance
    of a longest deck element."""
    n = _check_theorem_range(deck, k)
    m = max(len(d) for d in deck.elements)
    longest = next(d for d in deck.ordered() if len(d) == m)
    t = exceedance(longest)
    a = tuple(
        _largest_fill(deck, lambda s, i=i: (1,) * i + (s,) + (1,) * (m - i - 1), n - k)
        for i in range(m))
    return a, t


def reconstruct_few_ones(deck: Deck, k: int) -> Composition:
    n = _total(deck, k)
    a, t = few_ones_profile(deck, k)
    if 0 in a:
        raise NotADeckError("a single-part probe fails at size 1")
    short = n - sum(a)
    if short == 0:
        return a
    peaks = [i for i, p in enumerate(a) if p == t + 1]
    if short < 0 or len(peaks) != 1:
        raise NotADeckError(
            f"profile {format_composition(a)} sums to {sum(a)} with {len(peaks)} "
            f"entries at t+1={t + 1}; cannot complete to {n}")
    i = peaks[0]
    return a[:i] + (a[i] + short,) + a[i + 1:]


# exactly k ones

def exactly_k_layout(deck: Deck, k: int) -> tuple[Composition, tuple[bool, ...]]:
    """Return the 1-free deck element and, per position, whether it holds a part >= 2."""
    _check_theorem_range(deck, k)
    m = k + min(len(d) for d in deck.elements)
    v = next((d for d in deck.ordered() if 1 not in d), None)
    if v is None:
        raise NotADeckError("no deck element without 1's")
    flags = tuple(
        deck_contains_probe(deck.elements, (1,) * i + (2,) + (1,) * (m - i - 1))
        for i in range(m))
    return v, flags


def reconstruct_exactly_k(deck: Deck, k: int) -> Composition:
    v, flags = exactly_k_layout(deck, k)
    m = len(flags)
    if m - len(v) != k or sum(flags) != len(v):
        raise NotADeckError(
            f"{sum(flags)} positions flagged for {len(v)} big parts in length {m}")
    big = iter(v)
    return tuple(next(big) if flag else 1 for flag in flags)


# more than k ones

def big_parts_of_fewest_ones(deck: Deck) -> Composition:
    """Parts >= 2, in order, of the deck elements with the fewest 1's."""
    fewest = min(count_ones(d) for d in deck.elements)
    candidates = {tuple(p for p in d if p >= 2)
                  for d in deck.elements if count_ones(d) == fewest}
    if len(candidates) != 1:
        raise NotADeckError("fewest-1's deck elements disagree on their big parts")
    return candidates.pop()


def empty_gaps(deck: Deck, big: Composition) -> tuple[bool, ...]:
    """Entry i is True when there is no 1 between big parts i-1 and i.

    Probe ``2^(i) 1 2^(l-i)``: its lone 1 has to land in gap i.
    """
    ell = len(big)
    return tuple(
        not deck_contains_probe(deck.elements, (2,) * i + (1,) + (2,) * (ell - i))
        for i in range(ell + 1))


def _gap_skeleton(zero: tuple[bool, ...], i: int) -> tuple[int, ...]:
    # 1 where the neighbouring gap on the far side of gap i is empty, else 2
    ell = len(zero) - 1
    return tuple(
        1 if (j < i and zero[j]) or (j >= i and zero[j + 1]) else 2
        for j in range(ell))


def many_ones_gaps(deck: Deck, k: int) -> tuple[Composition, GapVector, tuple[int | None, ...]]:
    """Return the big parts, the measured gap vector x, and each gap's measurement cap.

    ``x[i] == min(z[i], cap[i])`` for the true gap vector z; the cap is
    None for empty gaps.
    """
    n = _check_theorem_range(deck, k)
    big = big_parts_of_fewest_ones(deck)
    zero = empty_gaps(deck, big)
    x: list[int] = []
    caps: list[int | None] = []
    for i, is_empty in enumerate(zero):
        if is_empty:
            x.append(0)
            caps.append(None)
            continue
        b = _gap_skeleton(zero, i)
        x.append(_largest_fill(deck, lambda s, b=b, i=i: b[:i] + (1,) * s + b[i:], n - k))
        caps.append(n - k - sum(b))
    return big, GapVector(tuple(x)), tuple(caps)


def reconstruct_many_ones(deck: Deck, k: int) -> Composition:
    n = _total(deck, k)
    big, x, caps = many_ones_gaps(deck, k)
    gaps = list(x.entries)
    short = n - sum(big) - sum(gaps)
    if short > 0:
        # A single run of 1's can exceed what the probes measure; it is the
        # only gap whose measurement reached its cap.
        capped = [i for i, c in enumerate(caps) if c is not None and gaps[i] == c]
        if len(capped) != 1:
            raise NotADeckError(
                f"{short} ones unaccounted for and {len(capped)} gaps at their cap")
        gaps[capped[0]] += short
    elif short < 0:
        raise NotADeckError(f"big parts and gaps overshoot n={n}")
    return GapVector(tuple(gaps)).interleave(big)


_PROCEDURES = {
    OnesRegime.FEWER_THAN_K: reconstruct_few_ones,
    OnesRegime.EXACTLY_K: reconstruct_exactly_k,
    OnesRegime.MORE_THAN_K: reconstruct_many_ones,
}


def reconstruct(deck: Deck, k: int) -> ReconstructionResult:
    """Recover the composition whose k-deletion set is `deck`.

    For ``n = deck.target_sum + k >= 3k+1`` the regime procedure runs and
    its answer is validated.  Smaller n goes to the brute-force oracle,
    which may report several candidates.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = _total(deck, k)
    if k == 0:
        if len(deck) == 1:
            return Unique(next(iter(deck.elements)))
        return NotADeck("a 0-deletion deck has exactly one element")
    if n <= 3 * k:
        found = brute_force_preimages(deck, k)
        if not found:
            return NotADeck(f"no composition of {n} has this set of {k}-deletions")
        if len(found) == 1:
            return Unique(found.pop())
        return Ambiguous(frozenset(found))
    regime = classify_ones(deck, k)
    try:
        w = _PROCEDURES[regime](deck, k)
    except NotADeckError as exc:
        return NotADeck(f"{regime.value}: {exc}")
    if k_deletions(w, k) != deck:
        return NotADeck(
            f"{regime.value}: candidate {format_composition(w)} has a different "
            f"set of {k}-deletions")
    return Unique(w)
