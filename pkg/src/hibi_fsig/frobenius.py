"""Finite-q tallies of conic classes over the grid {0, -1/q, ..., -(q-1)/q}^d.

Each grid point y of the semi-open cube lies in exactly one cell; counting
points per cell and dividing by q^d approximates the cell volumes.  The
scan works in integers: with Y = q y, the class coordinate is
ceil((B . Y) / q) where B holds the band coefficients.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .cycles import FundamentalCycle, SpanningTree

DEFAULT_BUDGET = 10**8
_CHUNK = 1 << 18


class BudgetExceededError(ValueError):
    pass


@dataclass(frozen=True)
class FrobeniusTally:
    q: int
    dim: int
    counts: dict = field(compare=False)

    @property
    def total(self) -> int:
        return self.q ** self.dim

    def density(self, c) -> Fraction:
        return Fraction(self.counts.get(tuple(c), 0), self.total)


def prime_power(q: int):
    """(p, e) if q = p^e with p prime and e >= 1, else None."""
    if q < 2:
        return None
    p = next(k for k in range(2, q + 1) if q % k == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


def frobenius_tally(t: SpanningTree, cycles: list[FundamentalCycle], q: int,
                    budget: int = DEFAULT_BUDGET) -> FrobeniusTally:
    if q < 1:
        raise ValueError("q must be positive")
    d = len(t.tree_edges)
    if q ** d > budget:
        raise BudgetExceededError(f"q^d = {q}^{d} exceeds the scan budget {budget}")
    bands = np.array([cyc.band_coefficients(t) for cyc in cycles], dtype=np.int64).reshape(len(cycles), d)
    counts: Counter = Counter()
    total = q ** d
    # grid point number g <-> digits of g in base q, Y_i = -digit_i
    place = q ** np.arange(d - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        g = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        grid = -((g[:, None] // place) % q)
        s = grid @ bands.T
        classes = -((-s) // q)                        # exact ceil(s / q)
        if classes.shape[1] == 0:
            counts[()] += len(g)
            continue
        keys, freq = np.unique(classes, axis=0, return_counts=True)
        for k, f in zip(keys, freq):
            counts[tuple(int(x) for x in k)] += int(f)
    return FrobeniusTally(q, d, dict(sorted(counts.items())))


@dataclass(frozen=True)
class ConvergenceReport:
    qs: tuple[int, ...]
    deviations: dict            # class -> tuple of |count/q^d - s| per q
    max_deviation: tuple[Fraction, ...]
    missing: dict               # q -> conic classes absent from that tally
    never_seen: tuple           # classes absent from every tally


def convergence_report(tallies: list[FrobeniusTally], exact: dict) -> ConvergenceReport:
    qs = tuple(tl.q for tl in tallies)
    dev = {c: tuple(abs(tl.density(c) - s) for tl in tallies) for c, s in exact.items()}
    maxdev = tuple(max((dev[c][k] for c in exact), default=Fraction(0)) for k in range(len(tallies)))
    missing = {tl.q: tuple(c for c in exact if c not in tl.counts) for tl in tallies}
    never = tuple(c for c in exact if all(c not in tl.counts for tl in tallies))
    return ConvergenceReport(qs, dev, maxdev, missing, never)
