import random
from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hibi_fsig.alcove import (AlcovedForm, DescentDimensionError, alcove_inclusion, complement,
                              count_alcoves, descents_between, find_hamiltonian_path,
                              inclusion_mask, permutation_table, substitution_matrix,
                              transform_to_alcoved)
from hibi_fsig.analysis import prepare
from hibi_fsig.fixtures import EXAMPLE_WITNESSES_10, random_poset
from hibi_fsig.polytope import det, volume

from conftest import form_polytope


def test_permutation_table_is_lexicographic():
    for d in range(1, 6):
        assert [tuple(r) for r in permutation_table(d)] == list(permutations(range(1, d + 1)))


def test_descents_between():
    w = (3, 1, 2)
    assert descents_between(w, 0, 3) == 1
    assert descents_between((2, 1, 3), 0, 2) == 1
    assert descents_between((1, 2, 3), 0, 3) == 0


def test_example_substitution_on_its_path(example_on_path):
    s = example_on_path
    rows, consts = substitution_matrix(s.hat, s.tree, s.hamiltonian_path)
    assert abs(det([r[1:] for r in rows])) == 1
    # y1..y5 -> z2-z3, z1-z2, z0-z1, z4-z3-1, z5-z4-1
    assert [(r, c) for r, c in zip(rows, consts)] == [
        ([0, 0, 1, -1, 0, 0], 0), ([0, 1, -1, 0, 0, 0], 0), ([1, -1, 0, 0, 0, 0], 0),
        ([0, 0, 0, -1, 1, 0], -1), ([0, 0, 0, 0, -1, 1], -1)]


def test_example_forms_on_its_path(example_on_path):
    s = example_on_path
    for c1, c2 in s.classes:
        forms = transform_to_alcoved(s.cell((c1, c2)), s.hamiltonian_path, s.tree, s.hat)
        assert len(forms) == 1
        f = forms[0]
        assert f.bounds(0, 5) == (2 - c1, 3 - c1)
        assert f.bounds(1, 4) == (1 - c2, 2 - c2)
        assert all(f.bounds(k - 1, k) == (0, 1) for k in range(1, 6))


def test_example_witnesses(example_on_path):
    res = example_on_path.descent((1, 0), witnesses=True)
    assert {"".join(map(str, w)) for w, _ in res.witnesses} == EXAMPLE_WITNESSES_10
    assert res.count == 13


@pytest.mark.parametrize("name", ["worked", "uneven", "diamond", "bowtie", "zigzag",
                                  "segre_1_2", "segre_2_1_1", "segre_1_1_1_1"])
def test_each_slice_volume_is_its_alcove_count(fixtures, name):
    s = fixtures[name]
    for c in s.classes:
        forms = transform_to_alcoved(s.cell(c), s.hamiltonian_path, s.tree, s.hat)
        assert forms
        for f in forms:
            assert Fraction(count_alcoves(f), factorial(s.dim)) == volume(form_polytope(f)).value


@pytest.mark.parametrize("name", ["worked", "uneven", "bowtie", "segre_1_1_1_1"])
def test_scalar_and_vector_inclusion_agree(fixtures, name):
    s = fixtures[name]
    perms = permutation_table(s.dim)
    for c in s.classes:
        for f in transform_to_alcoved(s.cell(c), s.hamiltonian_path, s.tree, s.hat):
            scalar = np.array([alcove_inclusion(tuple(w), f) for w in perms])
            assert (scalar == inclusion_mask(f)).all()


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6))
def test_paths_cover_every_vertex(n, seed):
    s = prepare(random_poset(n, random.Random(seed)))
    p = find_hamiltonian_path(s.hat)
    assert sorted(p.order) == list(range(len(s.hat.vertices)))
    for (a, b), e in zip(zip(p.order, p.order[1:]), p.path_edges):
        if e is not None:
            assert s.hat.edge_index[(a, b)] == e
        else:
            assert (a, b) not in s.hat.edge_index


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6))
def test_random_substitution_unimodular_and_exact(n, seed):
    s = prepare(random_poset(n, random.Random(seed)))
    rows, _ = substitution_matrix(s.hat, s.tree, s.hamiltonian_path)
    assert abs(det([r[1:] for r in rows])) == 1
    for c in s.classes:
        assert s.descent(c).value == s.volume(c)


@pytest.mark.parametrize("name", ["worked", "bowtie", "diamond", "segre_1_1_1", "segre_2_2",
                                  "segre_1_1_1_1", "chain3"])
def test_witness_reversal(fixtures, name):
    s = fixtures[name]
    assert s.pure
    for c in s.classes:
        w_c = Counter(complement(w) for w, _ in s.descent(c, witnesses=True).witnesses)
        w_neg = Counter(w for w, _ in s.descent(tuple(-x for x in c), witnesses=True).witnesses)
        assert w_c == w_neg


def test_complement_is_an_involution():
    for w in permutations(range(1, 5)):
        assert complement(complement(w)) == w


def test_dimension_limit(example):
    with pytest.raises(DescentDimensionError):
        example.descent((0, 0), max_dim=4)


def test_form_without_constraints_is_the_band_region():
    d = 4
    f = AlcovedForm(d, tuple((k - 1, k, 0, 1) for k in range(1, d + 1)))
    assert count_alcoves(f) == factorial(d)
