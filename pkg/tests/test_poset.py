import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from hibi_fsig.fixtures import EXAMPLE, UNEVEN, random_poset
from hibi_fsig.poset import (CycleError, DuplicateElementError, EdgeSpecError, Poset,
                             PosetSyntaxError, ReservedNameError, TransitiveCoverError,
                             build_hat, chain_poset, is_pure, parse_poset)


def test_example_hat():
    h = build_hat(EXAMPLE)
    assert h.dim == 5
    assert h.n_edges == 7
    assert h.vertices[0] == "bot" and h.vertices[-1] == "top"
    assert [h.edge_names(k) for k in range(7)] == list(EXAMPLE.edge_order)


def test_chain_hat_is_a_path():
    h = build_hat(chain_poset(3))
    assert h.dim == 4 and h.n_edges == 4


def test_empty_poset():
    h = build_hat(Poset((), ()))
    assert h.dim == 1 and h.edges == ((0, 1),)


@pytest.mark.parametrize("doc, err", [
    ({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]}, CycleError),
    ({"elements": ["a", "a"], "covers": []}, DuplicateElementError),
    ({"elements": ["bot"], "covers": []}, ReservedNameError),
    ({"elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"], ["a", "c"]]}, TransitiveCoverError),
    ({"elements": ["a"], "covers": [["a", "z"]]}, PosetSyntaxError),
    ({"elements": ["a"], "covers": [], "extra": 1}, PosetSyntaxError),
    ({"elements": ["a"]}, PosetSyntaxError),
    ({"elements": ["a"], "covers": [["a"]]}, PosetSyntaxError),
])
def test_invalid_documents(doc, err):
    with pytest.raises(err):
        parse_poset(json.dumps(doc))


def test_not_json():
    with pytest.raises(PosetSyntaxError):
        parse_poset("{elements")


def test_bad_edge_order():
    p = Poset(("a",), (), edge_order=(("bot", "a"), ("a", "nope")))
    with pytest.raises(EdgeSpecError):
        build_hat(p)


def test_purity():
    assert is_pure(EXAMPLE)
    assert is_pure(chain_poset(4))
    assert not is_pure(UNEVEN)


def test_round_trip():
    assert parse_poset(EXAMPLE.to_json()) == EXAMPLE


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(0, 10**6))
def test_random_hat_edges(n, seed):
    p = random_poset(n, random.Random(seed))
    h = build_hat(p)
    names = {h.edge_names(k) for k in range(h.n_edges)}
    lower = {a for a, _ in p.covers}
    upper = {b for _, b in p.covers}
    expected = set(p.covers)
    expected |= {("bot", x) for x in p.elements if x not in upper}
    expected |= {(x, "top") for x in p.elements if x not in lower}
    if not p.elements:
        expected = {("bot", "top")}
    assert names == expected
    assert parse_poset(p.to_json()) == p
