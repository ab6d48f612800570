from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hibi_fsig.cell import interior_point, is_strictly_interior, membership
from hibi_fsig.conic import reduce_to_class
from hibi_fsig.fixtures import EXAMPLE_VALUES_OVER_120

from conftest import grid


def test_example_volumes(example):
    for c, v in EXAMPLE_VALUES_OVER_120.items():
        assert example.volume(c) == Fraction(v, 120)


@pytest.mark.parametrize("name", ["worked", "bowtie", "uneven", "segre_1_1_1", "diamond"])
@pytest.mark.parametrize("q", [2, 3])
def test_grid_partition(fixtures, name, q):
    s = fixtures[name]
    cells = [s.cell(c) for c in s.classes]
    for y in grid(q, s.dim):
        inside = [cell.klass for cell in cells if membership(cell, y)]
        assert inside == [reduce_to_class(y, s.cycles, s.tree)]


def test_semiopen_boundary(example):
    cell = example.cell((0, 0))
    origin = (0,) * 5
    assert membership(cell, origin)
    corner = (-1,) * 5
    assert not membership(cell, corner)


def test_interior_points(example):
    for c in example.classes:
        cell = example.cell(c)
        pt = interior_point(cell)
        assert is_strictly_interior(cell, pt)
        assert reduce_to_class(pt, example.cycles, example.tree) == c


def test_empty_cell(example):
    assert interior_point(example.cell((5, 5))) is None
    assert example.volume((5, 5)) == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.fractions(-1, 0).filter(lambda x: x > -1), min_size=5, max_size=5))
def test_membership_matches_reduction(example, y):
    c = reduce_to_class(y, example.cycles, example.tree)
    assert membership(example.cell(c), y)


def test_values_do_not_depend_on_the_tree():
    from hibi_fsig.analysis import compute_fsig, prepare
    from hibi_fsig.fixtures import EXAMPLE
    trees = [None, [0, 1, 2, 3, 5], [0, 2, 3, 4, 6], [1, 2, 3, 4, 5]]
    multisets = []
    for t in trees:
        rep = compute_fsig(prepare(EXAMPLE, t))
        multisets.append(sorted(e.value for e in rep.entries))
    assert all(m == multisets[0] for m in multisets)
