"""Exhaustive round-trip sweeps over every composition in a range of n."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .composition import Composition, compositions, format_composition, k_deletions
from .oracle import MAX_ORACLE_N
from .reconstruct import Ambiguous, NotADeck, ReconstructionResult, Unique, reconstruct


def describe(result: ReconstructionResult) -> str:
    if isinstance(result, Unique):
        return f"UNIQUE {format_composition(result.composition)}"
    if isinstance(result, Ambiguous):
        cands = sorted(result.candidates, key=lambda w: (len(w), w))
        return "AMBIGUOUS " + " ".join(format_composition(w) for w in cands)
    return f"NOT A DECK {result.reason}"


@dataclass
class SweepReport:
    k: int
    n_range: tuple[int, int]
    total_checked: int = 0
    failures: list[tuple[Composition, ReconstructionResult]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        lo, hi = self.n_range
        lines = [
            f"k: {self.k}",
            f"n: {lo}..{hi}",
            f"total: {self.total_checked}",
            f"failures: {len(self.failures)}",
            f"elapsed: {self.elapsed:.3f}s",
        ]
        for w, result in self.failures:
            lines.append(f"  {format_composition(w)} -> {describe(result)}")
        return "\n".join(lines)

    def to_keyvalue(self, include_elapsed: bool = True) -> str:
        lo, hi = self.n_range
        lines = [
            f"k={self.k}",
            f"n_min={lo}",
            f"n_max={hi}",
            f"total={self.total_checked}",
            f"failures={len(self.failures)}",
        ]
        if include_elapsed:
            lines.append(f"elapsed={self.elapsed:.6f}")
        for w, result in self.failures:
            lines.append(f"failure={format_composition(w)}|{describe(result)}")
        return "\n".join(lines)


def check_composition(w: Composition, k: int) -> ReconstructionResult | None:
    """Round-trip one composition; return the bad result, or None on success."""
    result = reconstruct(k_deletions(w, k), k)
    if result == Unique(w):
        return None
    return result


def _check_first_parts(args: tuple[int, int, int, int]) -> tuple[int, list]:
    # work unit: compositions of n whose first part lies in [lo, hi)
    n, k, lo, hi = args
    checked = 0
    bad = []
    for first in range(lo, hi):
        for rest in compositions(n - first):
            w = (first,) + rest
            checked += 1
            result = check_composition(w, k)
            if result is not None:
                bad.append((w, result))
    return checked, bad


def _work_units(k: int, n_min: int, n_max: int) -> list[tuple[int, int, int, int]]:
    # first parts 1, 2, 3 carry half, a quarter, an eighth ... of the work
    units = []
    for n in range(n_min, n_max + 1):
        for first in range(1, min(n, 6)):
            units.append((n, k, first, first + 1))
        if n >= 6:
            units.append((n, k, 6, n + 1))
        else:
            units.append((n, k, n, n + 1))
    return units


def sweep(k: int, n_min: int, n_max: int, jobs: int = 1) -> SweepReport:
    """Check ``reconstruct(k_deletions(w, k), k) == Unique(w)`` for every w of every n in range."""
    if k < 1:
        raise ValueError("k must be positive")
    if n_min < 3 * k + 1:
        raise ValueError(f"n_min={n_min} is below 3k+1={3 * k + 1}")
    if n_max > MAX_ORACLE_N:
        raise ValueError(f"n_max={n_max} exceeds {MAX_ORACLE_N}")
    report = SweepReport(k, (n_min, n_max))
    if n_max < n_min:
        return report
    start = time.perf_counter()
    units = _work_units(k, n_min, n_max)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_first_parts, units))
    else:
        results = [_check_first_parts(u) for u in units]
    for checked, bad in results:
        report.total_checked += checked
        report.failures.extend(bad)
    report.elapsed = time.perf_counter() - start
    return report
