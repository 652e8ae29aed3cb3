"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (not a deck, failed sweep,
violated precondition), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .composition import (
    DeckParseError,
    count_ones,
    exceedance,
    format_composition,
    k_deletions,
    parse_composition,
    parse_deck,
    second_exceedance,
)
from .layered import (
    composition_to_layered,
    format_permutation,
    layered_to_composition,
    parse_permutation,
)
from .oracle import ambiguity_census, collision_classes, tightness_witness
from .reconstruct import Ambiguous, Unique, reconstruct
from .verify import sweep

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _emit(pairs: list[tuple[str, object]], machine: bool) -> None:
    sep = "=" if machine else ": "
    for key, value in pairs:
        print(f"{key}{sep}{value}")


def _composition_arg(text: str):
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_deck(args) -> int:
    w = _composition_arg(args.composition)
    if args.k < 0 or args.k > sum(w):
        raise DomainError(f"k must lie in 0..{sum(w)} for {format_composition(w)}")
    deck = k_deletions(w, args.k)
    if args.machine:
        _emit([("k", args.k), ("target_sum", deck.target_sum), ("size", len(deck))], True)
        for d in deck.ordered():
            print(f"element={format_composition(d)}")
    else:
        for d in deck.ordered():
            print(format_composition(d))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    try:
        if args.file in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read deck: {exc}") from None
    try:
        deck = parse_deck(text)
    except DeckParseError as exc:
        raise UsageError(f"{args.file or '<stdin>'}: {exc}") from None
    if args.k < 0:
        raise UsageError("k must be nonnegative")
    result = reconstruct(deck, args.k)
    if isinstance(result, Unique):
        if args.machine:
            _emit([("result", "unique"),
                   ("composition", format_composition(result.composition))], True)
        else:
            print(f"UNIQUE {format_composition(result.composition)}")
        return EXIT_OK
    if isinstance(result, Ambiguous):
        cands = sorted(result.candidates, key=lambda w: (len(w), w))
        if args.machine:
            _emit([("result", "ambiguous"), ("count", len(cands))], True)
            for w in cands:
                print(f"candidate={format_composition(w)}")
        else:
            print("AMBIGUOUS")
            for w in cands:
                print(format_composition(w))
        return EXIT_OK
    if args.machine:
        _emit([("result", "not-a-deck"), ("reason", result.reason)], True)
    else:
        print(f"NOT A DECK {result.reason}")
    return EXIT_DOMAIN


def cmd_verify(args) -> int:
    try:
        report = sweep(args.k, args.n_min, args.n_max, jobs=args.jobs)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    if args.machine:
        print(report.to_keyvalue(include_elapsed=args.timing))
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_DOMAIN


def cmd_witness(args) -> int:
    if args.k < 1:
        raise DomainError("k must be positive")
    up, down, deck = tightness_witness(args.k)
    if args.machine:
        _emit([("k", args.k), ("first", format_composition(up)),
               ("second", format_composition(down)), ("deck_size", len(deck))], True)
        for d in deck.ordered():
            print(f"element={format_composition(d)}")
    else:
        print(f"{format_composition(up)} and {format_composition(down)} "
              f"share {len(deck)} {args.k}-deletions:")
        for d in deck.ordered():
            print(f"  {format_composition(d)}")
    return EXIT_OK


def cmd_census(args) -> int:
    if args.k < 0 or args.n < 0:
        raise DomainError("k and n must be nonnegative")
    try:
        count = ambiguity_census(args.k, args.n)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    if args.machine:
        _emit([("k", args.k), ("n", args.n), ("classes", count)], True)
        for cls in collision_classes(args.k, args.n):
            print("class=" + " ".join(format_composition(w) for w in cls))
    else:
        print(f"collision classes: {count}")
        for cls in collision_classes(args.k, args.n):
            print("  " + " ".join(format_composition(w) for w in cls))
    return EXIT_OK


def cmd_stats(args) -> int:
    w = _composition_arg(args.composition)
    _emit([
        ("sum", sum(w)),
        ("length", len(w)),
        ("ex", exceedance(w)),
        ("ex2", second_exceedance(w)),
        ("ones", count_ones(w)),
    ], args.machine)
    return EXIT_OK


def cmd_bridge(args) -> int:
    if args.direction == "to-permutation":
        w = _composition_arg(args.value)
        out = format_permutation(composition_to_layered(w))
    else:
        try:
            p = parse_permutation(args.value)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        try:
            out = format_composition(layered_to_composition(p))
        except ValueError as exc:
            raise DomainError(str(exc)) from None
    if args.machine:
        _emit([("direction", args.direction), ("value", out)], True)
    else:
        print(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true",
                        help="line-oriented key=value output")

    parser = argparse.ArgumentParser(
        prog="compdeck",
        description="Reconstruct integer compositions from their sets of k-deletions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deck", parents=[common], help="print the k-deletions of a composition")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("composition", help="e.g. 5,1,2,2")
    p.set_defaults(func=cmd_deck)

    p = sub.add_parser("reconstruct", parents=[common],
                       help="reconstruct a composition from a deck file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-f", "--file", help="deck file (default: standard input)")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", parents=[common],
                       help="exhaustive round-trip check over a range of n")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--from", dest="n_min", type=int, required=True)
    p.add_argument("--to", dest="n_max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true",
                   help="include elapsed time in --machine output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", parents=[common],
                       help="show (12)^k and (21)^k sharing a deck")
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("census", parents=[common],
                       help="count decks shared by several compositions of n")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("stats", parents=[common], help="composition statistics")
    p.add_argument("composition")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bridge", parents=[common],
                       help="convert between compositions and layered permutations")
    p.add_argument("direction", choices=["to-permutation", "to-composition"])
    p.add_argument("value")
    p.set_defaults(func=cmd_bridge)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"compdeck {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"compdeck {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
