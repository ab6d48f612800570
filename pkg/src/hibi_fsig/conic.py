"""Conic region of class-group coordinates and its lattice points."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cycles import Circuit, FundamentalCycle, SpanningTree
from .polytope import HPolytope, UnboundedPolytopeError, enumerate_vertices
from .poset import HasseHat

ClassVector = tuple[int, ...]


class UnboundedRegionError(ValueError):
    pass


@dataclass(frozen=True)
class ConicRegion:
    """Two-sided inequalities lo <= coeffs . z <= hi, one per circuit."""

    dim: int
    inequalities: tuple[tuple[tuple[int, ...], int, int], ...]

    def contains(self, z) -> bool:
        return all(lo <= sum(a * x for a, x in zip(coeffs, z)) <= hi
                   for coeffs, lo, hi in self.inequalities)

    def as_polytope(self) -> HPolytope:
        return HPolytope.from_bounds(self.dim, self.inequalities)


def build_conic_region(h: HasseHat, t: SpanningTree, circuits: list[Circuit]) -> ConicRegion:
    slot = {k: i for i, k in enumerate(t.cotree_edges)}
    rows = []
    for circ in circuits:
        coeffs = [0] * len(t.cotree_edges)
        for k in circ.z_plus(t):
            coeffs[slot[k]] += 1
        for k in circ.z_minus(t):
            coeffs[slot[k]] -= 1
        rows.append((tuple(coeffs), 1 - len(circ.x_minus), len(circ.x_plus) - 1))
    return ConicRegion(len(t.cotree_edges), tuple(rows))


def coordinate_box(region: ConicRegion) -> list[tuple[int, int]]:
    """Integer range of each coordinate over the (bounded) real region."""
    if region.dim == 0:
        return []
    try:
        verts = enumerate_vertices(region.as_polytope(), max_dim=max(region.dim, 8))
    except UnboundedPolytopeError as exc:
        raise UnboundedRegionError(f"conic region is unbounded: {exc}") from None
    if not verts:
        raise UnboundedRegionError("conic region is empty; the zero class should always lie in it")
    return [(math.ceil(min(v[i] for v in verts)), math.floor(max(v[i] for v in verts)))
            for i in range(region.dim)]


def enumerate_conic_classes(region: ConicRegion) -> list[ClassVector]:
    """All lattice points of the region, lexicographically sorted."""
    box = coordinate_box(region)
    ranges = [range(lo, hi + 1) for lo, hi in box]
    return [z for z in product(*ranges) if region.contains(z)]


def reduce_to_class(y, cycles: list[FundamentalCycle], t: SpanningTree) -> ClassVector:
    """Class of the cell containing y (tree-edge coordinates, y in (-1, 0]^d)."""
    out = []
    for cyc in cycles:
        s = sum((Fraction(a) * Fraction(x) for a, x in zip(cyc.band_coefficients(t), y)), Fraction(0))
        out.append(math.ceil(s))
    return tuple(out)
