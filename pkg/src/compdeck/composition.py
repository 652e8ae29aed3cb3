"""Compositions, their statistics, the containment order and deletion decks.

A composition is stored as a plain tuple of positive ints.  The empty tuple
is the unique composition of 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Composition = tuple[int, ...]

EMPTY_TEXT = "()"


def as_composition(parts: Iterable[int]) -> Composition:
    """Validate `parts` and return them as a composition tuple."""
    w = tuple(parts)
    for p in w:
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError(f"composition parts must be ints, got {p!r}")
        if p < 1:
            raise ValueError(f"composition parts must be positive, got {p}")
    return w


def sum_of(w: Sequence[int]) -> int:
    return sum(w)


def exceedance(w: Sequence[int]) -> int:
    """Total excess of the parts over 1, i.e. ``sum(w) - len(w)``."""
    return sum(w) - len(w)


def second_exceedance(w: Sequence[int]) -> int:
    """Total excess over 2 of the parts that are at least 2."""
    return sum(p - 2 for p in w if p >= 2)


def count_ones(w: Sequence[int]) -> int:
    return sum(1 for p in w if p == 1)


def contains(u: Sequence[int], w: Sequence[int]) -> bool:
    """Return True if `u` embeds in `w`.

    That is, `w` has a subword ``w[i_1] ... w[i_l]`` of length ``len(u)``
    with ``u[j] <= w[i_j]`` for every j.  Matching each part of `u` to the
    leftmost unused part of `w` that is large enough finds an embedding
    whenever one exists.
    """
    m = len(u)
    if m == 0:
        return True
    if m > len(w):
        return False
    j = 0
    for p in w:
        if u[j] <= p:
            j += 1
            if j == m:
                return True
    return False


def one_deletions(w: Sequence[int]) -> set[Composition]:
    """All compositions obtained by lowering a part >= 2 or dropping a 1."""
    w = tuple(w)
    if not w:
        raise ValueError("the empty composition has no 1-deletions")
    out = set()
    for i, p in enumerate(w):
        if p == 1:
            out.add(w[:i] + w[i + 1:])
        else:
            out.add(w[:i] + (p - 1,) + w[i + 1:])
    return out


def canonical_key(w: Composition) -> tuple[int, Composition]:
    """Sort key: shorter first, then lexicographic on parts."""
    return (len(w), w)


def canonical_sorted(items: Iterable[Composition]) -> list[Composition]:
    return sorted(items, key=canonical_key)


@dataclass(frozen=True)
class Deck:
    """A nonempty set of compositions that all have the same sum."""

    elements: frozenset[Composition]
    target_sum: int

    def __post_init__(self):
        if not self.elements:
            raise ValueError("a deck must be nonempty")
        for d in self.elements:
            if sum(d) != self.target_sum:
                raise ValueError(
                    f"deck element {format_composition(d)} has sum {sum(d)}, "
                    f"expected {self.target_sum}")

    @classmethod
    def of(cls, items: Iterable[Iterable[int]]) -> "Deck":
        """Build a deck, deduplicating and inferring the common sum."""
        elements = frozenset(as_composition(d) for d in items)
        if not elements:
            raise ValueError("a deck must be nonempty")
        sums = {sum(d) for d in elements}
        if len(sums) != 1:
            raise ValueError(f"deck elements have differing sums {sorted(sums)}")
        return cls(elements, sums.pop())

    def ordered(self) -> list[Composition]:
        return canonical_sorted(self.elements)

    def __iter__(self) -> Iterator[Composition]:
        return iter(self.ordered())

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.elements


def compositions(n: int) -> Iterator[Composition]:
    """Yield every composition of `n`, choosing the first part in ascending order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def _iterated_deletions(w: Composition, k: int) -> frozenset[Composition]:
    layer = {w}
    for _ in range(k):
        nxt: set[Composition] = set()
        for u in layer:
            nxt |= one_deletions(u)
        layer = nxt
    return frozenset(layer)


def _filtered_deletions(w: Composition, k: int) -> frozenset[Composition]:
    return frozenset(u for u in compositions(sum(w) - k) if contains(u, w))


def k_deletions(w: Iterable[int], k: int, method: str = "iterate") -> Deck:
    """Return the deck of k-deletions of `w`.

    ``method="iterate"`` applies `one_deletions` k times; ``method="filter"``
    keeps every composition of ``sum(w) - k`` contained in `w`.  Both give the
    same set.
    """
    w = as_composition(w)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > sum(w):
        raise ValueError(f"cannot delete {k} from a composition of {sum(w)}")
    if method == "iterate":
        elements = _iterated_deletions(w, k)
    elif method == "filter":
        elements = _filtered_deletions(w, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Deck(elements, sum(w) - k)


def deck_contains_probe(deck: Iterable[Composition], probe: Sequence[int]) -> bool:
    """True if `probe` is contained in some element of `deck`."""
    return any(contains(probe, d) for d in deck)


# text formats

def format_composition(w: Sequence[int]) -> str:
    if not w:
        return EMPTY_TEXT
    return ",".join(str(p) for p in w)


def parse_composition(text: str) -> Composition:
    """Parse ``"2,1,3"`` (or ``"()"`` for the empty composition)."""
    s = text.strip()
    if s == EMPTY_TEXT:
        return ()
    if not s:
        raise ValueError("empty composition text; write () for the empty composition")
    parts = []
    for field in s.split(","):
        field = field.strip()
        if not field.isdigit():
            raise ValueError(f"bad composition part {field!r} in {text!r}")
        parts.append(int(field))
    return as_composition(parts)


class DeckParseError(ValueError):
    """Malformed deck text, with a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_deck(text: str) -> Deck:
    """Parse a deck file: one composition per line, ``#`` comments, blank lines skipped.

    Duplicates are dropped.  Every composition must have the same sum.
    """
    seen: dict[Composition, int] = {}
    target = None
    first_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        column = raw.index(line[0]) + 1
        try:
            w = parse_composition(line)
        except ValueError as exc:
            raise DeckParseError(str(exc), lineno, column) from None
        if target is None:
            target, first_line = sum(w), lineno
        elif sum(w) != target:
            raise DeckParseError(
                f"composition {format_composition(w)} has sum {sum(w)} but line "
                f"{first_line} has sum {target}", lineno, column)
        seen.setdefault(w, lineno)
    if target is None:
        raise DeckParseError("no compositions found", max(1, len(text.splitlines())))
    return Deck(frozenset(seen), target)


def format_deck(deck: Deck) -> str:
    return "\n".join(format_composition(d) for d in deck.ordered())
