import random
from fractions import Fraction
import math
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hibi_fsig.polytope import (DimensionLimitError, HPolytope, UnboundedPolytopeError, cube, det,
                                enumerate_vertices, enumerate_vertices_bruteforce, simplex_volume,
                                triangulate, volume)


def standard_simplex(d):
    rows = [(tuple(-int(i == j) for j in range(d)), Fraction(0)) for i in range(d)]
    rows.append((tuple([1] * d), Fraction(1)))
    return HPolytope(d, tuple((tuple(map(Fraction, a)), b) for a, b in rows))


@pytest.mark.parametrize("d", range(1, 7))
def test_cube(d):
    res = volume(cube(d))
    assert res.value == 1 and res.vertex_count == 2 ** d


@pytest.mark.parametrize("d", range(1, 7))
def test_simplex(d):
    assert volume(standard_simplex(d)).value == Fraction(1, factorial(d))


def test_empty_and_flat():
    empty = HPolytope.from_bounds(2, [((1, 0), 1, 0)])
    assert enumerate_vertices(empty) == []
    assert volume(empty).value == 0
    flat = HPolytope.from_bounds(2, [((1, 0), 0, 0), ((0, 1), 0, 1)])
    assert volume(flat).value == 0


def test_unbounded():
    half = HPolytope.from_bounds(2, [((1, 0), 0, 1)])
    with pytest.raises(UnboundedPolytopeError):
        enumerate_vertices(half)


def test_dimension_limit():
    with pytest.raises(DimensionLimitError):
        volume(cube(4), max_dim=3)


def shoelace(points):
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)
    pts = sorted(points, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
    s = sum(a[0] * b[1] - b[0] * a[1] for a, b in zip(pts, pts[1:] + pts[:1]))
    return abs(Fraction(s)) / 2


def random_cut_cube(rng, d, cuts):
    rows = [(tuple(int(i == j) for j in range(d)), -2, 2) for i in range(d)]
    for _ in range(cuts):
        a = tuple(rng.randint(-2, 2) for _ in range(d))
        if any(a):
            rows.append((a, -rng.randint(1, 4), rng.randint(0, 4)))
    return HPolytope.from_bounds(d, rows)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_polygon_area_against_shoelace(seed):
    p = random_cut_cube(random.Random(seed), 2, 3)
    verts = enumerate_vertices(p)
    assert volume(p).value == (shoelace(verts) if len(verts) >= 3 else 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.integers(0, 10**6))
def test_vertices_against_bruteforce(d, seed):
    p = random_cut_cube(random.Random(seed), d, 3)
    assert enumerate_vertices(p) == enumerate_vertices_bruteforce(p)


def random_unimodular(rng, d):
    m = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(3 * d):
        i, j = rng.sample(range(d), 2)
        c = rng.choice([-1, 1])
        for k in range(d):
            m[i][k] += c * m[j][k]
    return m


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 4), st.integers(0, 10**6))
def test_unimodular_invariance(d, seed):
    rng = random.Random(seed)
    p = random_cut_cube(rng, d, 2)
    m = random_unimodular(rng, d)
    assert abs(det(m)) == 1
    assert volume(p.transformed(m)).value == volume(p).value


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 4), st.integers(0, 10**6))
def test_additivity_under_a_cut(d, seed):
    rng = random.Random(seed)
    p = random_cut_cube(rng, d, 2)
    a = tuple(Fraction(rng.randint(-2, 2)) for _ in range(d))
    b = Fraction(rng.randint(-2, 2))
    left = HPolytope(d, p.halfspaces + ((a, b),))
    right = HPolytope(d, p.halfspaces + ((tuple(-x for x in a), -b),))
    assert volume(left).value + volume(right).value == volume(p).value


def test_triangulation_simplices_are_proper():
    verts, simplices = triangulate(cube(3))
    assert len(simplices) == 6
    assert all(simplex_volume([verts[i] for i in s]) == Fraction(1, 6) for s in simplices)
