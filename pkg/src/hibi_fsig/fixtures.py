"""Named posets used by the tests, the self-test and the scripts."""

from __future__ import annotations

import random

from .poset import Poset, chain_poset
from .segre import SegreSpec, build_segre_poset

# worked example: edges numbered e_1..e_7 in this order, tree {e_1..e_5}
EXAMPLE_EDGES = (
    ("bot", "p1"), ("p1", "p2"), ("p2", "top"),
    ("bot", "p3"), ("p3", "p4"), ("p4", "top"),
    ("p3", "p2"),
)
EXAMPLE = Poset(
    ("p1", "p2", "p3", "p4"),
    (("p1", "p2"), ("p3", "p2"), ("p3", "p4")),
    spanning_tree=EXAMPLE_EDGES[:5],
    edge_order=EXAMPLE_EDGES,
)
# the Hamiltonian path that labels the witness permutations below
EXAMPLE_PATH_ORDER = ("top", "p2", "p1", "bot", "p3", "p4")
EXAMPLE_CLASSES = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (2, 1), (-2, -1)]
EXAMPLE_VALUES_OVER_120 = {
    (0, 0): 54, (1, 0): 13, (-1, 0): 13, (1, 1): 13, (-1, -1): 13,
    (0, 1): 6, (0, -1): 6, (2, 1): 1, (-2, -1): 1,
}
EXAMPLE_WITNESSES_10 = {
    "14523", "13524", "13425", "12534", "15234", "12435", "14235",
    "13245", "25134", "24135", "21345", "23145", "31245",
}

# p1 < p2 with p3 isolated: not pure
UNEVEN = Poset(("p1", "p2", "p3"), (("p1", "p2"),))

DIAMOND = Poset(("a", "b", "c", "d"), (("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")))

# two minimal, two maximal, all four covers: the Boolean-like "bowtie"
BOWTIE = Poset(("a", "b", "c", "d"), (("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")))

# a non-pure poset with a longer circuit
ZIGZAG = Poset(("a", "b", "c", "d", "e"),
               (("a", "b"), ("b", "c"), ("d", "c"), ("a", "e")))


def named_fixtures() -> dict[str, Poset]:
    out = {
        "worked": EXAMPLE,
        "empty": Poset((), ()),
        "chain1": chain_poset(1),
        "chain3": chain_poset(3),
        "uneven": UNEVEN,
        "diamond": DIAMOND,
        "bowtie": BOWTIE,
        "zigzag": ZIGZAG,
    }
    for sizes in [(1, 1), (1, 2), (2, 2), (1, 1, 1), (2, 1, 1), (1, 1, 1, 1), (1, 1, 1, 1, 1),
                  (3, 3), (2, 2, 2)]:
        out["segre_" + "_".join(map(str, sizes))] = build_segre_poset(SegreSpec(sizes))
    return out


def random_poset(n: int, rng: random.Random, density: float = 0.4) -> Poset:
    """Random poset on n elements: random DAG on a shuffled order, then its cover relations."""
    names = [f"q{i}" for i in range(n)]
    order = names[:]
    rng.shuffle(order)
    rel = {(order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density}
    # transitive closure
    closure = set(rel)
    for k in order:
        for i in order:
            if (i, k) in closure:
                for j in order:
                    if (k, j) in closure:
                        closure.add((i, j))
    covers = {(a, b) for a, b in closure
              if not any((a, x) in closure and (x, b) in closure for x in names)}
    return Poset(tuple(names), tuple(sorted(covers)))
