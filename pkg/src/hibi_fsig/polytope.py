"""Exact rational H-polytopes: vertex enumeration, triangulation and volume.

Everything here runs on ``fractions.Fraction`` and Python integers; there is
no floating point anywhere in this module.

Vertex enumeration is an incremental double description on the homogenised
cone {(x, t) : a.x <= b t, t >= 0}; rays with t > 0 are vertices, rays with
t = 0 are recession directions.  Volume is computed from a pulling
triangulation: each face is coned from its lexicographically smallest vertex
over the facets not containing it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import factorial, gcd

DEFAULT_MAX_DIM = 8


class UnboundedPolytopeError(ValueError):
    pass


class EmptyPolytopeError(ValueError):
    pass


class DimensionLimitError(ValueError):
    pass


# ---------------------------------------------------------------- linear algebra

def rank(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve(a, b):
    """Unique solution of the square system a x = b, or None if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n] for row in m]


def det(rows) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = -out
        out *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return out


def _primitive(v):
    g = reduce(gcd, v, 0)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _integral_row(a, b):
    """Scale the halfspace a.x <= b to integer coefficients (same halfspace)."""
    fr = [Fraction(x) for x in a] + [Fraction(b)]
    den = reduce(lambda x, y: x * y // gcd(x, y), (f.denominator for f in fr), 1)
    return [int(f * den) for f in fr]


# ---------------------------------------------------------------- polytopes

@dataclass(frozen=True)
class HPolytope:
    """{x in R^dim : a.x <= b for (a, b) in halfspaces}."""

    dim: int
    halfspaces: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    @classmethod
    def from_bounds(cls, dim, constraints):
        """Build from two-sided constraints ``(a, lo, hi)`` meaning lo <= a.x <= hi."""
        hs = []
        for a, lo, hi in constraints:
            a = tuple(Fraction(x) for x in a)
            hs.append((a, Fraction(hi)))
            hs.append((tuple(-x for x in a), -Fraction(lo)))
        return cls(dim, tuple(hs))

    def contains(self, x) -> bool:
        return all(sum(ai * xi for ai, xi in zip(a, x)) <= b for a, b in self.halfspaces)

    def transformed(self, matrix):
        """Image-free pullback: the polytope {u : matrix u in self}."""
        hs = []
        for a, b in self.halfspaces:
            row = tuple(sum(Fraction(a[i]) * matrix[i][j] for i in range(self.dim))
                        for j in range(len(matrix[0])))
            hs.append((row, b))
        return HPolytope(len(matrix[0]), tuple(hs))


@dataclass(frozen=True)
class VolumeResult:
    value: Fraction
    vertex_count: int
    simplex_count: int


def _double_description(rows, dim):
    """Extreme rays of the pointed cone {v : g.v <= 0 for g in rows}; rows are integer."""
    order = []
    basis = []
    for i, g in enumerate(rows):
        if rank(basis + [g]) > len(basis):
            basis.append(g)
            order.append(i)
        if len(basis) == dim:
            break
    if len(basis) < dim:
        raise ValueError("cone is not pointed")
    # initial simplicial cone: ray k is tight on every basis row except k
    rays = []
    full = set(order)
    for k, i in enumerate(order):
        e = [Fraction(0)] * dim
        e[k] = Fraction(-1)
        r = solve(basis, e)
        den = reduce(lambda x, y: x * y // gcd(x, y), (f.denominator for f in r), 1)
        vec = _primitive([int(f * den) for f in r])
        tight = 0
        for j in full - {i}:
            tight |= 1 << j
        rays.append((vec, tight))

    for i, g in enumerate(rows):
        if i in full:
            continue
        vals = [sum(a * b for a, b in zip(g, vec)) for vec, _ in rays]
        plus = [k for k, v in enumerate(vals) if v > 0]
        if not plus:
            rays = [(vec, tight | (1 << i) if vals[k] == 0 else tight)
                    for k, (vec, tight) in enumerate(rays)]
            continue
        minus = [k for k, v in enumerate(vals) if v < 0]
        new = [(vec, tight | (1 << i) if vals[k] == 0 else tight)
               for k, (vec, tight) in enumerate(rays) if vals[k] <= 0]
        tights = [t for _, t in rays]
        for p in plus:
            for m in minus:
                common = tights[p] & tights[m]
                if bin(common).count("1") < dim - 2:
                    continue
                if any((t & common) == common for k, t in enumerate(tights) if k != p and k != m):
                    continue
                vp, vm = rays[p][0], rays[m][0]
                gp, gm = vals[p], vals[m]
                vec = _primitive([gp * b - gm * a for a, b in zip(vp, vm)])
                new.append((vec, common | (1 << i)))
        rays = new
    return rays


def enumerate_vertices(p: HPolytope, max_dim: int = DEFAULT_MAX_DIM):
    """All vertices of a bounded H-polytope as tuples of Fractions, sorted.

    Raises ``UnboundedPolytopeError`` if the polyhedron is nonempty and
    unbounded; an empty polytope gives ``[]``.
    """
    if p.dim > max_dim:
        raise DimensionLimitError(f"dimension {p.dim} exceeds limit {max_dim}")
    if p.dim == 0:
        return [()] if all(b >= 0 for _, b in p.halfspaces) else []
    rows = [_integral_row(a, b) for a, b in p.halfspaces]
    a_rows = [r[:-1] for r in rows]
    r = rank(a_rows)
    if r < p.dim:
        # a lineality direction exists: unbounded unless empty; test emptiness in the row space
        basis = []
        for row in a_rows:
            if rank(basis + [row]) > len(basis):
                basis.append(row)
        sub = HPolytope(r, tuple(
            (tuple(sum(Fraction(x) * y for x, y in zip(row, bvec)) for bvec in basis), Fraction(rr[-1]))
            for row, rr in zip(a_rows, rows)))
        try:
            if not enumerate_vertices(sub, max_dim):
                return []
        except UnboundedPolytopeError:
            pass
        raise UnboundedPolytopeError("polyhedron contains a line")
    # homogenise: a.x - b t <= 0, -t <= 0
    cone_rows = [ar + [-rr[-1]] for ar, rr in zip(a_rows, rows)]
    cone_rows.append([0] * p.dim + [-1])
    rays = _double_description(cone_rows, p.dim + 1)
    verts = set()
    recession = False
    for vec, _ in rays:
        t = vec[-1]
        if t > 0:
            verts.add(tuple(Fraction(x, t) for x in vec[:-1]))
        elif any(vec[:-1]):
            recession = True
    if verts and recession:
        raise UnboundedPolytopeError("polyhedron has a recession direction")
    return sorted(verts)


def enumerate_vertices_bruteforce(p: HPolytope):
    """Reference: solve every dim-subset of constraints and keep feasible points."""
    verts = set()
    for subset in combinations(p.halfspaces, p.dim):
        x = solve([a for a, _ in subset], [b for _, b in subset])
        if x is not None and p.contains(x):
            verts.add(tuple(x))
    return sorted(verts)


def _affine_dim(points) -> int:
    if not points:
        return -1
    base = points[0]
    return rank([[a - b for a, b in zip(q, base)] for q in points[1:]])


def triangulate(p: HPolytope, vertices=None):
    """Pulling triangulation of a full-dimensional polytope.

    Returns ``(vertices, simplices)`` where each simplex is a tuple of
    ``dim + 1`` vertex indices.  Lower-dimensional polytopes give no simplices.
    """
    if vertices is None:
        vertices = enumerate_vertices(p)
    if _affine_dim(vertices) < p.dim:
        return vertices, []
    tight = []
    for v in vertices:
        mask = 0
        for k, (a, b) in enumerate(p.halfspaces):
            if sum(x * y for x, y in zip(a, v)) == b:
                mask |= 1 << k
        tight.append(mask)
    n_hs = len(p.halfspaces)
    memo: dict = {}

    def tri(face: frozenset, fdim: int):
        if fdim == 0:
            return [tuple(face)]
        key = face
        if key in memo:
            return memo[key]
        v0 = min(face, key=lambda i: vertices[i])
        facets = set()
        for k in range(n_hs):
            sub = frozenset(i for i in face if tight[i] >> k & 1)
            if sub == face or v0 in sub or len(sub) < fdim or sub in facets:
                continue
            if _affine_dim([vertices[i] for i in sorted(sub)]) == fdim - 1:
                facets.add(sub)
        out = []
        for f in sorted(facets, key=sorted):
            for simplex in tri(f, fdim - 1):
                out.append((v0, *simplex))
        memo[key] = out
        return out

    return vertices, tri(frozenset(range(len(vertices))), p.dim)


def simplex_volume(points) -> Fraction:
    base = points[0]
    m = [[a - b for a, b in zip(q, base)] for q in points[1:]]
    return abs(det(m)) / factorial(len(m))


def volume(p: HPolytope, max_dim: int = DEFAULT_MAX_DIM) -> VolumeResult:
    vertices = enumerate_vertices(p, max_dim)
    if not vertices:
        return VolumeResult(Fraction(0), 0, 0)
    if p.dim == 0:
        return VolumeResult(Fraction(1), 1, 1)
    vertices, simplices = triangulate(p, vertices)
    total = sum((simplex_volume([vertices[i] for i in s]) for s in simplices), Fraction(0))
    return VolumeResult(total, len(vertices), len(simplices))


def coordinate_bounds(p: HPolytope, f, max_dim: int = DEFAULT_MAX_DIM):
    """Exact (min, max) of the linear functional ``f`` over ``p``."""
    vertices = enumerate_vertices(p, max_dim)
    if not vertices:
        raise EmptyPolytopeError("polytope is empty")
    vals = [sum(Fraction(a) * x for a, x in zip(f, v)) for v in vertices]
    return min(vals), max(vals)


def cube(dim, lo=-1, hi=0) -> HPolytope:
    return HPolytope.from_bounds(dim, [(tuple(int(i == j) for j in range(dim)), lo, hi)
                                       for i in range(dim)])
