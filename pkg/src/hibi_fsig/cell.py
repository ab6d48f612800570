"""The cell F_c in (-1, 0]^d attached to a conic class."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cycles import FundamentalCycle, SpanningTree
from .polytope import HPolytope, enumerate_vertices


@dataclass(frozen=True)
class CellPolytope:
    """lo <= a.y <= hi for each constraint; y_i is the slack of the i-th tree edge.

    The first ``dim`` constraints are the cube, the rest are the unit bands of
    the cotree edges in order.
    """

    dim: int
    constraints: tuple[tuple[tuple[int, ...], Fraction, Fraction], ...]
    klass: tuple[int, ...]

    @property
    def bands(self):
        return self.constraints[self.dim:]

    def polytope(self) -> HPolytope:
        return HPolytope.from_bounds(self.dim, self.constraints)


def build_cell(t: SpanningTree, cycles: list[FundamentalCycle], c) -> CellPolytope:
    d = len(t.tree_edges)
    cons = [(tuple(int(i == j) for j in range(d)), Fraction(-1), Fraction(0)) for i in range(d)]
    for cyc, cj in zip(cycles, c):
        cons.append((cyc.band_coefficients(t), Fraction(cj - 1), Fraction(cj)))
    return CellPolytope(d, tuple(cons), tuple(c))


def membership(cell: CellPolytope, y, semiopen: bool = True) -> bool:
    """Closed test uses <= on both sides; semi-open makes every lower bound strict."""
    for a, lo, hi in cell.constraints:
        v = sum(Fraction(ai) * Fraction(yi) for ai, yi in zip(a, y))
        if v > hi or v < lo or (semiopen and v == lo):
            return False
    return True


def interior_point(cell: CellPolytope):
    """Barycentre of the vertices; strictly interior iff the cell is full-dimensional."""
    verts = enumerate_vertices(cell.polytope())
    if not verts:
        return None
    n = len(verts)
    return tuple(sum(v[i] for v in verts) / n for i in range(cell.dim))


def is_strictly_interior(cell: CellPolytope, y) -> bool:
    for a, lo, hi in cell.constraints:
        v = sum(Fraction(ai) * Fraction(yi) for ai, yi in zip(a, y))
        if not lo < v < hi:
            return False
    return True
