import math
import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hibi_fsig.analysis import prepare
from hibi_fsig.cell import build_cell, interior_point
from hibi_fsig.conic import reduce_to_class
from hibi_fsig.fixtures import EXAMPLE_CLASSES, named_fixtures, random_poset
from hibi_fsig.segre import SegreSpec, build_segre_poset, segre_conic_classes


def nonempty_cells(s):
    """Classes c whose cell has an interior point, searched over the box the bands allow."""
    ranges = []
    for cyc in s.cycles:
        a = cyc.band_coefficients(s.tree)
        lo = -sum(x for x in a if x > 0)
        hi = -sum(x for x in a if x < 0)
        ranges.append(range(lo, hi + 1))
    out = []
    for c in product(*ranges):
        pt = interior_point(build_cell(s.tree, s.cycles, c))
        if pt is not None and all(-1 < x < 0 for x in pt):
            out.append(c)
    return sorted(out)


def test_example_classes(example):
    assert sorted(example.classes) == sorted(EXAMPLE_CLASSES)
    assert len(example.classes) == 9


@pytest.mark.parametrize("name", [n for n in sorted(named_fixtures())
                                  if n not in ("segre_1_1_1_1_1", "segre_3_3", "segre_2_2_2")])
def test_classes_are_the_nonempty_cells(name, fixtures):
    s = fixtures[name]
    assert s.classes == nonempty_cells(s)


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6))
def test_classes_random(n, seed):
    s = prepare(random_poset(n, random.Random(seed)))
    assert s.classes == nonempty_cells(s)


def test_chain_single_empty_class(fixtures):
    assert fixtures["chain3"].classes == [()]


@pytest.mark.parametrize("r, s", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)])
def test_two_chain_classes(r, s):
    st_ = prepare(build_segre_poset(SegreSpec((r, s))))
    assert st_.classes == [(c,) for c in range(-s, r + 1)]


@pytest.mark.parametrize("sizes", [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 1, 1), (2, 2, 1)])
def test_segre_classes(sizes):
    spec = SegreSpec(sizes)
    assert prepare(build_segre_poset(spec)).classes == segre_conic_classes(spec)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-12, 0), min_size=5, max_size=5))
def test_reduce_lands_in_conic_region(example, ks):
    y = [Fraction(k, 13) for k in ks]
    c = reduce_to_class(y, example.cycles, example.tree)
    assert c in example.classes
    assert example.region.contains(c)
