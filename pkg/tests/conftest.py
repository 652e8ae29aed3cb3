from itertools import combinations

import pytest


def embeds_brute(u, w):
    """Containment by trying every index subsequence of w."""
    u = tuple(u)
    return any(all(a <= b for a, b in zip(u, sub)) for sub in combinations(w, len(u)))


def all_compositions(n):
    """Compositions of n via binary cut vectors (independent of the package enumerator)."""
    if n == 0:
        return [()]
    out = []
    for mask in range(2 ** (n - 1)):
        parts, run = [], 1
        for bit in range(n - 1):
            if mask >> bit & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


def c(text):
    """Shorthand for single-digit compositions: c("5122") == (5, 1, 2, 2)."""
    return tuple(int(ch) for ch in text)


# decks printed in the three worked examples (k=3, n=10)
EXAMPLE_1 = [c(s) for s in "52 322 412 421 511 2122 3112 3121 4111".split()]
EXAMPLE_2 = [c(s) for s in (
    "322 2212 2221 3112 3121 3211 12121 12211 21121 "
    "21211 22111 31111 111211 121111 211111").split()]
EXAMPLE_3 = [c(s) for s in (
    "1222 2212 11122 11212 11221 12112 12211 "
    "111112 111121 111211 112111 1111111").split()]


@pytest.fixture
def example_decks():
    from compdeck import Deck
    return {
        1: Deck.of(EXAMPLE_1),
        2: Deck.of(EXAMPLE_2),
        3: Deck.of(EXAMPLE_3),
    }
