"""End-to-end computation of generalized F-signatures for one poset."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial

from . import alcove
from .alcove import HamiltonianPath, find_hamiltonian_path
from .cell import CellPolytope, build_cell
from .conic import build_conic_region, enumerate_conic_classes
from .cycles import choose_spanning_tree, enumerate_circuits, fundamental_cycles
from .frobenius import DEFAULT_BUDGET, FrobeniusTally, frobenius_tally
from .polytope import DEFAULT_MAX_DIM, volume
from .poset import Poset, build_hat, is_pure

METHODS = ("both", "volume", "descent")


class ConsistencyError(RuntimeError):
    pass


@dataclass
class HibiSetup:
    """Everything that depends on the poset and the chosen spanning tree."""

    poset: Poset
    tree_request: object = None
    path: HamiltonianPath | None = None      # set before the first descent call; it is cached

    @cached_property
    def hat(self):
        return build_hat(self.poset)

    @property
    def dim(self) -> int:
        return self.hat.dim

    @cached_property
    def tree(self):
        return choose_spanning_tree(self.hat, self.tree_request)

    @cached_property
    def cycles(self):
        return fundamental_cycles(self.hat, self.tree)

    @cached_property
    def circuits(self):
        return enumerate_circuits(self.hat)

    @cached_property
    def region(self):
        return build_conic_region(self.hat, self.tree, self.circuits)

    @cached_property
    def classes(self):
        return enumerate_conic_classes(self.region)

    @cached_property
    def hamiltonian_path(self) -> HamiltonianPath:
        return self.path if self.path is not None else find_hamiltonian_path(self.hat)

    @cached_property
    def pure(self) -> bool:
        return is_pure(self.poset)

    def cell(self, c) -> CellPolytope:
        return build_cell(self.tree, self.cycles, c)

    def volume(self, c, max_dim: int = DEFAULT_MAX_DIM) -> Fraction:
        return volume(self.cell(c).polytope(), max_dim).value

    def descent(self, c, witnesses: bool = False, max_dim: int = alcove.DEFAULT_MAX_DIM):
        return alcove.fsig_descent(self.cell(c), self.hat, self.tree, self.hamiltonian_path,
                                   witnesses, max_dim)

    def tally(self, q: int, budget: int = DEFAULT_BUDGET) -> FrobeniusTally:
        return frobenius_tally(self.tree, self.cycles, q, budget)

    def edge_label(self, k: int) -> str:
        a, b = self.hat.edge_names(k)
        return f"e{k + 1}={a}:{b}"


def prepare(poset: Poset, tree=None, path=None) -> HibiSetup:
    return HibiSetup(poset, tree, path)


def poset_digest(poset: Poset) -> str:
    return hashlib.sha256(poset.to_json().encode()).hexdigest()[:16]


def fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fmt_over(x: Fraction, den: int) -> str:
    """``x`` written over ``den`` when exact (the d! form kept unreduced)."""
    num = x * den
    return f"{num.numerator}/{den}" if num.denominator == 1 else fmt(x)


@dataclass
class ClassEntry:
    vector: tuple[int, ...]
    value: Fraction
    volume: Fraction | None = None
    descent: Fraction | None = None
    tallies: dict = field(default_factory=dict)      # q -> count

    @property
    def consistent(self) -> bool:
        vals = [v for v in (self.volume, self.descent) if v is not None]
        return all(v == vals[0] for v in vals)


@dataclass
class FSigReport:
    digest: str
    dim: int
    n_edges: int
    tree: tuple[str, ...]
    method: str
    pure: bool
    entries: list[ClassEntry]
    complete: bool                       # all conic classes were computed
    qs: tuple[int, ...] = ()

    @property
    def total(self) -> Fraction:
        return sum((e.value for e in self.entries), Fraction(0))

    @property
    def sum_ok(self) -> bool | None:
        return self.total == 1 if self.complete else None

    @property
    def consistent(self) -> bool:
        return all(e.consistent for e in self.entries)

    @property
    def duality_ok(self) -> bool | None:
        if not (self.pure and self.complete):
            return None
        vals = {e.vector: e.value for e in self.entries}
        return all(vals.get(tuple(-x for x in c)) == v for c, v in vals.items())

    @property
    def ok(self) -> bool:
        return self.consistent and self.sum_ok is not False

    def to_dict(self) -> dict:
        den = factorial(self.dim)
        classes = []
        for e in self.entries:
            item = {
                "class": list(e.vector),
                "s": fmt(e.value),
                "s_over_d_factorial": fmt_over(e.value, den),
                "decimal": f"{float(e.value):.10f}",
                "methods": {},
                "consistent": e.consistent,
            }
            if e.volume is not None:
                item["methods"]["volume"] = fmt(e.volume)
            if e.descent is not None:
                item["methods"]["descent"] = fmt(e.descent)
            if e.tallies:
                item["tallies"] = {
                    str(q): {"count": n, "density": fmt(Fraction(n, q ** self.dim)),
                             "deviation": fmt(abs(Fraction(n, q ** self.dim) - e.value))}
                    for q, n in e.tallies.items()}
            classes.append(item)
        return {
            "poset_digest": self.digest,
            "d": self.dim,
            "n": self.n_edges,
            "spanning_tree": list(self.tree),
            "method": self.method,
            "classes": classes,
            "global": {
                "sum": fmt(self.total),
                "sum_check": self.sum_ok,
                "pure": self.pure,
                "gorenstein": self.pure,
                "duality_check": self.duality_ok,
                "consistent": self.consistent,
            },
        }


def compute_fsig(setup: HibiSetup, method: str = "both", classes=None, qs=(),
                 max_dim: int | None = None, budget: int = DEFAULT_BUDGET) -> FSigReport:
    """Per-class values by the requested method(s); ``max_dim`` overrides both engines' limits."""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    all_classes = setup.classes
    chosen = all_classes if classes is None else [tuple(c) for c in classes]
    for c in chosen:
        if c not in set(all_classes):
            raise ValueError(f"{c} is not a conic class for this tree")
    tallies = {q: setup.tally(q, budget) for q in qs}
    entries = []
    for c in chosen:
        vol = (setup.volume(c, max_dim or DEFAULT_MAX_DIM)
               if method in ("both", "volume") else None)
        dsc = (setup.descent(c, max_dim=max_dim or alcove.DEFAULT_MAX_DIM).value
               if method in ("both", "descent") else None)
        value = vol if vol is not None else dsc
        entries.append(ClassEntry(c, value, vol, dsc, {q: tl.counts.get(c, 0) for q, tl in tallies.items()}))
    tree = tuple(setup.edge_label(k) for k in setup.tree.tree_edges)
    return FSigReport(poset_digest(setup.poset), setup.dim, setup.hat.n_edges, tree, method,
                      setup.pure, entries, classes is None, tuple(qs))
