"""Cells as alcoved polytopes and their volumes as descent counts over S_d.

A Hamiltonian path of P-hat (virtual edges added when none exists) orders
the vertices as positions 0..d.  The tree-edge slack y_e of e = {p < p'} is
replaced by z_j - z_i - 1 when p comes first on the path (i < j) and by
z_j - z_i otherwise, with i, j the positions of p, p' and z_0 = 0.  Every
constraint of the cell then bounds a single difference z_j - z_i by
integers.  Consecutive pairs that are not already confined to a unit band
are cut into unit slices and each slice is translated back into the band
region 0 <= z_k - z_{k-1} <= 1, where alcoves correspond to permutations.

Inclusion rule for a constraint lo <= z_j - z_i <= hi (i < j) and w in S_d
with the sentinel w_0 = 0: with D = des(w_i ... w_j), require lo <= D <= hi,
and D == lo forces w_i < w_j while D == hi forces w_i > w_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .cell import CellPolytope
from .cycles import SpanningTree
from .polytope import det
from .poset import HasseHat

DEFAULT_MAX_DIM = 10

Constraint = tuple[int, int, int, int]


class DescentDimensionError(ValueError):
    pass


class SubstitutionError(RuntimeError):
    """The y -> z substitution broke an internal invariant."""


@dataclass(frozen=True)
class HamiltonianPath:
    order: tuple[int, ...]                  # order[k] = vertex at position k
    path_edges: tuple[int | None, ...]      # edge between positions k, k+1; None if virtual

    @property
    def position(self) -> dict[int, int]:
        return {v: k for k, v in enumerate(self.order)}

    @property
    def virtual_pairs(self) -> list[tuple[int, int]]:
        return [(self.order[k], self.order[k + 1])
                for k, e in enumerate(self.path_edges) if e is None]


def _search(adj, n, starts):
    for s in starts:
        path = [s]
        on = [False] * n
        on[s] = True
        stack = [iter(adj[s])]
        while stack:
            if len(path) == n:
                return path
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on[path.pop()] = False
                continue
            if not on[nxt]:
                on[nxt] = True
                path.append(nxt)
                stack.append(iter(adj[nxt]))
    return None


def _linear_extension(h: HasseHat) -> list[int]:
    indeg = [0] * len(h.vertices)
    up: list[list[int]] = [[] for _ in h.vertices]
    for a, b in h.edges:
        up[a].append(b)
        indeg[b] += 1
    ready = sorted(v for v in range(len(h.vertices)) if indeg[v] == 0)
    out = []
    while ready:
        v = ready.pop(0)
        out.append(v)
        for w in up[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    return out


def path_from_order(h: HasseHat, order) -> HamiltonianPath:
    """Wrap an explicit vertex order (names or indices); non-adjacent steps become virtual."""
    order = tuple(h.index[v] if isinstance(v, str) else v for v in order)
    if sorted(order) != list(range(len(h.vertices))):
        raise ValueError("order must visit every vertex of P-hat exactly once")
    edges = tuple(h.edge_index.get((a, b)) for a, b in zip(order, order[1:]))
    return HamiltonianPath(order, edges)


def find_hamiltonian_path(h: HasseHat) -> HamiltonianPath:
    """Backtracking search (bot first, neighbours in index order).

    If the Hasse diagram has no Hamiltonian path, virtual edges joining
    consecutive vertices of a linear extension are added one at a time until
    the search succeeds.
    """
    n = len(h.vertices)
    adj = [list(a) for a in h.adjacency]
    starts = list(range(n))
    found = _search(adj, n, starts)
    if found is None:
        ext = _linear_extension(h)
        for a, b in zip(ext, ext[1:]):
            if b in adj[a]:
                continue
            adj[a] = sorted(adj[a] + [b])
            adj[b] = sorted(adj[b] + [a])
            found = _search(adj, n, starts)
            if found is not None:
                break
    return path_from_order(h, found)


@dataclass(frozen=True)
class AlcovedForm:
    """lo <= z_j - z_i <= hi for each (i, j, lo, hi), i < j, z_0 = 0, inside the band region.

    ``offsets[k]`` is the integer added to z_k by the slice translation and
    ``label`` the unit-slice index chosen for each split consecutive pair.
    """

    dim: int
    constraints: tuple[Constraint, ...]
    offsets: tuple[int, ...] = ()
    label: tuple[int, ...] = ()

    def bounds(self, i, j):
        for a, b, lo, hi in self.constraints:
            if (a, b) == (i, j):
                return lo, hi
        return None


def substitution_matrix(h: HasseHat, t: SpanningTree, path: HamiltonianPath):
    """Rows: tree edges; columns: z_0..z_d; plus the constant term of each y_e."""
    pos = path.position
    d = h.dim
    rows, consts = [], []
    for k in t.tree_edges:
        lower, upper = h.edges[k]
        i, j = pos[lower], pos[upper]
        row = [0] * (d + 1)
        row[j] += 1
        row[i] -= 1
        rows.append(row)
        consts.append(-1 if i < j else 0)
    return rows, consts


def _difference_bounds(dim, constraints):
    """Floyd-Warshall on the difference constraints; None if infeasible.

    Returns ``dist`` with dist[i][j] = max of z_j - z_i.
    """
    n = dim + 1
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for i, j, lo, hi in constraints:
        dist[i][j] = min(dist[i][j], hi)
        dist[j][i] = min(dist[j][i], -lo)
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    if any(dist[i][i] < 0 for i in range(n)):
        return None
    return dist


def _merge(constraints):
    box: dict[tuple[int, int], list[int]] = {}
    for i, j, lo, hi in constraints:
        if i > j:
            i, j, lo, hi = j, i, -hi, -lo
        if (i, j) in box:
            cur = box[(i, j)]
            cur[0], cur[1] = max(cur[0], lo), min(cur[1], hi)
        else:
            box[(i, j)] = [lo, hi]
    return tuple((i, j, lo, hi) for (i, j), (lo, hi) in sorted(box.items()))


def cell_difference_constraints(cell: CellPolytope, h: HasseHat, t: SpanningTree,
                                path: HamiltonianPath) -> tuple[Constraint, ...]:
    """All cell constraints rewritten as bounds on single differences z_j - z_i."""
    rows, consts = substitution_matrix(h, t, path)
    d = h.dim
    if abs(det([row[1:] for row in rows])) != 1:
        raise SubstitutionError("y -> z substitution is not unimodular")
    out = []
    for a, lo, hi in cell.constraints:
        lin = [0] * (d + 1)
        shift = 0
        for coef, row, const in zip(a, rows, consts):
            if coef:
                for col, v in enumerate(row):
                    lin[col] += coef * v
                shift += coef * const
        plus = [k for k, v in enumerate(lin) if v == 1]
        minus = [k for k, v in enumerate(lin) if v == -1]
        if len(plus) != 1 or len(minus) != 1 or sum(map(abs, lin)) != 2:
            raise SubstitutionError(f"constraint {a} does not reduce to a single difference: {lin}")
        if lo.denominator != 1 or hi.denominator != 1:
            raise SubstitutionError("cell bounds must be integral")
        # lo <= z_B - z_A + shift <= hi
        out.append((minus[0], plus[0], int(lo) - shift, int(hi) - shift))
    return _merge(out)


def transform_to_alcoved(cell: CellPolytope, path: HamiltonianPath, t: SpanningTree,
                         h: HasseHat) -> list[AlcovedForm]:
    d = h.dim
    base = list(cell_difference_constraints(cell, h, t, path))
    dist = _difference_bounds(d, base)
    if dist is None:
        return []

    def consecutive_range(dist, k):
        return -dist[k][k - 1], dist[k - 1][k]

    split = []
    for k in range(1, d + 1):
        lo, hi = consecutive_range(dist, k)
        if lo >= 0 and hi <= 1:
            base.append((k - 1, k, 0, 1))
        else:
            split.append(k)
    base = list(_merge(base))

    slices: list[tuple[list[Constraint], dict[int, int]]] = [(base, {})]
    for k in split:
        nxt = []
        for cons, label in slices:
            dist = _difference_bounds(d, cons)
            lo, hi = consecutive_range(dist, k)
            for m in range(lo, hi):
                trial = cons + [(k - 1, k, m, m + 1)]
                tight = _difference_bounds(d, trial)
                if tight is None or _degenerate(tight, d):
                    continue
                nxt.append((list(_merge(trial)), {**label, k: m}))
        slices = nxt

    forms = []
    for cons, label in slices:
        offsets = [0] * (d + 1)
        for k in range(1, d + 1):
            offsets[k] = offsets[k - 1] + label.get(k, 0)
        shifted = tuple((i, j, lo - (offsets[j] - offsets[i]), hi - (offsets[j] - offsets[i]))
                        for i, j, lo, hi in cons)
        if any(lo > hi for _, _, lo, hi in shifted):
            continue
        forms.append(AlcovedForm(d, shifted, tuple(offsets), tuple(label.get(k, 0) for k in split)))
    return forms


def _degenerate(dist, d) -> bool:
    return any(dist[i][j] + dist[j][i] == 0 for i in range(d + 1) for j in range(i + 1, d + 1))


# ---------------------------------------------------------------- descents

def descents_between(w, i, j) -> int:
    """des(w_i ... w_j) with the sentinel w_0 = 0; ``w`` is one-line notation w_1..w_d."""
    full = (0, *w)
    return sum(1 for ell in range(i, j) if full[ell] > full[ell + 1])


def alcove_inclusion(w, form: AlcovedForm) -> bool:
    full = (0, *w)
    for i, j, lo, hi in form.constraints:
        dsc = descents_between(w, i, j)
        if not lo <= dsc <= hi:
            return False
        if dsc == lo and not full[i] < full[j]:
            return False
        if dsc == hi and not full[i] > full[j]:
            return False
    return True


@lru_cache(maxsize=None)
def permutation_table(d: int) -> np.ndarray:
    """All of S_d in lexicographic order, shape (d!, d), values 1..d."""
    if d == 0:
        return np.zeros((1, 0), dtype=np.int8)
    prev = permutation_table(d - 1)
    blocks = []
    for first in range(1, d + 1):
        rest = prev + (prev >= first)
        col = np.full((len(prev), 1), first, dtype=np.int8)
        blocks.append(np.hstack([col, rest.astype(np.int8)]))
    out = np.vstack(blocks)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _descent_tables(d: int):
    perms = permutation_table(d)
    full = np.hstack([np.zeros((len(perms), 1), dtype=np.int8), perms])
    dsc = (full[:, :-1] > full[:, 1:]).astype(np.int8)
    prefix = np.zeros((len(perms), d + 1), dtype=np.int8)
    np.cumsum(dsc, axis=1, out=prefix[:, 1:])
    full.setflags(write=False)
    prefix.setflags(write=False)
    return full, prefix


def inclusion_mask(form: AlcovedForm, max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray:
    """Boolean mask over ``permutation_table(d)`` of the alcoves inside ``form``."""
    d = form.dim
    if d > max_dim:
        raise DescentDimensionError(f"S_{d} scan exceeds the configured limit d <= {max_dim}")
    full, prefix = _descent_tables(d)
    mask = np.ones(len(full), dtype=bool)
    # longest spans first; they prune the most
    for i, j, lo, hi in sorted(form.constraints, key=lambda c: c[0] - c[1]):
        dsc = prefix[:, j] - prefix[:, i]
        up = full[:, i] < full[:, j]
        mask &= (dsc >= lo) & (dsc <= hi) & ((dsc != lo) | up) & ((dsc != hi) | ~up)
        if not mask.any():
            break
    return mask


@dataclass(frozen=True)
class DescentResult:
    value: Fraction
    count: int
    witnesses: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]   # (w, slice label)
    slices: int


def count_alcoves(form: AlcovedForm, max_dim: int = DEFAULT_MAX_DIM) -> int:
    return int(inclusion_mask(form, max_dim).sum())


def descent_volume(forms, d: int, witnesses: bool = False,
                   max_dim: int = DEFAULT_MAX_DIM) -> DescentResult:
    total = 0
    found = []
    perms = permutation_table(d) if witnesses else None
    for form in forms:
        mask = inclusion_mask(form, max_dim)
        total += int(mask.sum())
        if witnesses:
            found.extend((tuple(int(x) for x in row), form.label) for row in perms[mask])
    return DescentResult(Fraction(total, factorial(d)), total, tuple(found), len(forms))


def fsig_descent(cell: CellPolytope, h: HasseHat, t: SpanningTree,
                 path: HamiltonianPath | None = None, witnesses: bool = False,
                 max_dim: int = DEFAULT_MAX_DIM) -> DescentResult:
    if h.dim > max_dim:
        raise DescentDimensionError(f"d = {h.dim} exceeds the S_d scan limit {max_dim}")
    if path is None:
        path = find_hamiltonian_path(h)
    forms = transform_to_alcoved(cell, path, t, h)
    return descent_volume(forms, h.dim, witnesses, max_dim)


def complement(w) -> tuple[int, ...]:
    """w_1..w_d -> (d+1-w_1)..(d+1-w_d)."""
    d = len(w)
    return tuple(d + 1 - x for x in w)
