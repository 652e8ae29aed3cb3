"""Set reconstruction of integer compositions from their k-deletions."""

from .composition import (
    Composition,
    Deck,
    DeckParseError,
    as_composition,
    compositions,
    contains,
    count_ones,
    deck_contains_probe,
    exceedance,
    format_composition,
    format_deck,
    k_deletions,
    one_deletions,
    parse_composition,
    parse_deck,
    second_exceedance,
    sum_of,
)
from .layered import (
    composition_to_layered,
    layered_to_composition,
    pattern_contains,
)
from .oracle import (
    ambiguity_census,
    brute_force_preimages,
    enumerate_compositions,
    tightness_witness,
)
from .reconstruct import (
    Ambiguous,
    GapVector,
    NotADeck,
    OnesRegime,
    Unique,
    classify_ones,
    reconstruct,
)
from .verify import SweepReport, sweep

__version__ = "0.1.0"
