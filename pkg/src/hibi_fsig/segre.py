"""Eulerian numbers, hypersimplices and closed forms for Segre products.

Index convention: ``eulerian(k, d)`` counts permutations of S_d with exactly
k descents.  With it, the slice k-1 <= z_d - z_0 <= k of the band region in
R^d has volume eulerian(k - 1, d) / d!, and the two-ring value for class c is
eulerian(c + s, d) / d!.  The literal index printed alongside these closed
forms elsewhere is one larger (it counts with the k-1 descents convention).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

import numpy as np

from .alcove import AlcovedForm, _descent_tables, count_alcoves, path_from_order
from .poset import BOT, TOP, Poset


class SegreClassError(ValueError):
    pass


@dataclass(frozen=True)
class SegreSpec:
    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes or any(r < 0 for r in self.sizes):
            raise ValueError(f"need at least one non-negative chain size, got {self.sizes}")

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def dim(self) -> int:
        return sum(self.sizes) + 1


@lru_cache(maxsize=None)
def _eulerian_row(d: int) -> tuple[int, ...]:
    if d == 0:
        return (1,)
    if d == 1:
        return (1,)
    prev = _eulerian_row(d - 1)
    row = []
    for k in range(d):
        a = (k + 1) * prev[k] if k < len(prev) else 0
        b = (d - k) * prev[k - 1] if 0 < k <= len(prev) else 0
        row.append(a + b)
    return tuple(row)


def eulerian(k: int, d: int) -> int:
    """Number of w in S_d with exactly k descents (recurrence A(k,d) = (k+1)A(k,d-1) + (d-k)A(k-1,d-1))."""
    if d == 0:
        return int(k == 0)
    if not 0 <= k <= d - 1:
        return 0
    return _eulerian_row(d)[k]


def eulerian_bruteforce(k: int, d: int) -> int:
    full, prefix = _descent_tables(d)
    return int((prefix[:, d] == k).sum())


def chain_name(i: int, j: int) -> str:
    return f"p{i}_{j}"


def build_segre_poset(spec: SegreSpec) -> Poset:
    """Disjoint chains of lengths r_1..r_t, with the tree {e_ij} + {e_t0} and edge order by chain.

    Zero-length chains are dropped (a polynomial ring in one variable is a
    unit for the Segre product).
    """
    sizes = [r for r in spec.sizes if r > 0]
    elements, covers = [], []
    for i, r in enumerate(sizes, start=1):
        chain = [chain_name(i, j) for j in range(1, r + 1)]
        elements += chain
        covers += list(zip(chain, chain[1:]))
    if not sizes:
        return Poset((), ())
    order, tree = [], []
    t = len(sizes)
    for i, r in enumerate(sizes, start=1):
        chain = [BOT] + [chain_name(i, j) for j in range(1, r + 1)] + [TOP]
        edges = list(zip(chain, chain[1:]))
        order += edges
        tree += edges[1:]
        if i == t:
            tree.append(edges[0])
    return Poset(tuple(elements), tuple(covers), tuple(tree), tuple(order))


def segre_path(spec: SegreSpec, h):
    """The path bot, chain t, chain t-1, ..., chain 1, top (virtual steps between chains)."""
    sizes = [r for r in spec.sizes if r > 0]
    order = [BOT]
    for i in range(len(sizes), 0, -1):
        order += [chain_name(i, j) for j in range(1, sizes[i - 1] + 1)]
    order.append(TOP)
    return path_from_order(h, order)


def segre_conic_classes(spec: SegreSpec) -> list[tuple[int, ...]]:
    """Lattice points of -r_t <= z_i <= r_i, -r_j <= z_i - z_j <= r_i."""
    r = spec.sizes
    t = spec.t
    ranges = [range(-r[-1], r[i] + 1) for i in range(t - 1)]
    return [c for c in product(*ranges)
            if all(-r[j] <= c[i] - c[j] <= r[i] for i in range(t - 1) for j in range(i + 1, t - 1))]


def in_c_t(c) -> bool:
    return (all(abs(x) <= 1 for x in c)
            and all(abs(a - b) <= 1 for i, a in enumerate(c) for b in c[i + 1:]))


def fsig_segre_2var(t: int, c) -> Fraction:
    """Closed form for S(t) = k[x1,y1] # ... # k[xt,yt]."""
    c = tuple(c)
    if len(c) != t - 1 or not in_c_t(c):
        raise SegreClassError(f"{c} is not a conic class of S({t})")
    q = sum(1 for x in c if x)
    if q == 0:
        return Fraction(2, t + 1)
    return Fraction(1, comb(t, q) * (t + 1))


def hypersimplex_form(k: int, d: int) -> AlcovedForm:
    """The slice k-1 <= z_d - z_0 <= k of the band region in R^d."""
    cons = [(i - 1, i, 0, 1) for i in range(1, d + 1)]
    if d >= 2:
        cons.append((0, d, k - 1, k))
    else:
        cons = [(0, 1, max(0, k - 1), min(1, k))]
    return AlcovedForm(d, tuple(cons))


def hypersimplex_volume(k: int, d: int) -> Fraction:
    """Volume of the hypersimplex slice in R^d, by counting alcoves."""
    form = hypersimplex_form(k, d)
    if any(lo > hi for _, _, lo, hi in form.constraints):
        return Fraction(0)
    return Fraction(count_alcoves(form), factorial(d))


@dataclass(frozen=True)
class TwoRingValue:
    value: Fraction
    eulerian_index: int         # k with value = eulerian(k, d) / d!
    printed_index: int          # index as it appears in the closed form, c + s + 1


def fsig_segre_two_rings(r: int, s: int, c: int) -> TwoRingValue:
    if not -s <= c <= r:
        raise SegreClassError(f"class {c} outside [-{s}, {r}]")
    d = r + s + 1
    value = hypersimplex_volume(c + s + 1, d)
    return TwoRingValue(value, c + s, c + s + 1)


def fsig_segre_theorem(spec: SegreSpec, c) -> Fraction:
    """Sum over alpha of |U(alpha)| / d!, with U given by the two descent conditions.

    Positions: chain t occupies 1..r_t, chain t-1 the next r_{t-1} slots, and
    so on; chain i starts at sum_{q>i} r_q + 1 and ends at sum_{q>=i} r_q.
    """
    r = spec.sizes
    t = spec.t
    if any(x <= 0 for x in r):
        raise ValueError("the closed form needs every chain size >= 1")
    c = tuple(c)
    if c not in set(segre_conic_classes(spec)):
        raise SegreClassError(f"{c} is not in the conic region")
    d = spec.dim
    full, prefix = _descent_tables(d)

    def start(i):      # 1-based chain index
        return sum(r[q - 1] for q in range(i + 1, t + 1)) + 1

    def end(i):
        return sum(r[q - 1] for q in range(i, t + 1))

    total = 0
    for alpha in product(*(range(ri + 1) for ri in r[:-1])):
        mask = np.ones(len(full), dtype=bool)
        for i in range(1, t):
            target = r[-1] - r[i - 1] + c[i - 1] + sum(alpha[i - 1:])
            mask &= prefix[:, start(i)] == target
        for i in range(2, t + 1):
            a = sum(alpha[:i - 1])
            pos = end(i)
            dsc = prefix[:, d] - prefix[:, pos]
            below = full[:, pos] < full[:, d]
            mask &= ((dsc == a) & below) | ((dsc == a + 1) & ~below)
        total += int(mask.sum())
    return Fraction(total, factorial(d))
