from fractions import Fraction
from itertools import product

import pytest

from hibi_fsig.analysis import prepare
from hibi_fsig.fixtures import EXAMPLE, EXAMPLE_PATH_ORDER, named_fixtures
from hibi_fsig.alcove import path_from_order
from hibi_fsig.polytope import HPolytope


@pytest.fixture(scope="session")
def example():
    return prepare(EXAMPLE)


@pytest.fixture(scope="session")
def example_on_path():
    s = prepare(EXAMPLE)
    return prepare(EXAMPLE, path=path_from_order(s.hat, EXAMPLE_PATH_ORDER))


@pytest.fixture(scope="session")
def fixtures():
    return {name: prepare(p) for name, p in named_fixtures().items()}


def form_polytope(form) -> HPolytope:
    """The alcoved form as an H-polytope in z_1..z_d (z_0 = 0)."""
    d = form.dim
    rows = []
    for i, j, lo, hi in form.constraints:
        a = [0] * d
        a[j - 1] += 1
        if i:
            a[i - 1] -= 1
        rows.append((tuple(a), lo, hi))
    return HPolytope.from_bounds(d, rows)


def grid(q, d):
    """All points of {0, -1/q, ..., -(q-1)/q}^d."""
    return [tuple(Fraction(-k, q) for k in ks) for ks in product(range(q), repeat=d)]
