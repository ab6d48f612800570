"""Finite posets and the augmented Hasse diagram of P-hat.

A poset file is a JSON object::

    {
      "elements": ["p1", "p2", "p3", "p4"],
      "covers": [["p1", "p2"], ["p3", "p2"], ["p3", "p4"]],
      "spanning_tree": [["bot", "p1"], ["p1", "p2"], ...],   # optional
      "edge_order": [["bot", "p1"], ...]                      # optional
    }

``covers`` lists the cover relations ``[lower, upper]`` of P.  The optional
``spanning_tree`` names ``|P| + 1`` edges of the Hasse diagram of P-hat, and
the optional ``edge_order`` lists *all* edges of P-hat to fix their indexing
(otherwise edges are sorted by lower rank, lower name, upper name).  The
reserved vertex names ``bot`` and ``top`` denote the adjoined minimum and
maximum.  Unknown keys are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

BOT = "bot"
TOP = "top"
RESERVED = (BOT, TOP)

Edge = tuple[str, str]


class PosetError(ValueError):
    """Base class for invalid poset input."""


class PosetSyntaxError(PosetError):
    pass


class CycleError(PosetError):
    pass


class DuplicateElementError(PosetError):
    pass


class TransitiveCoverError(PosetError):
    pass


class ReservedNameError(PosetError):
    pass


class EdgeSpecError(PosetError):
    """An edge named in ``spanning_tree``/``edge_order`` is not a Hasse edge."""


@dataclass(frozen=True)
class Poset:
    elements: tuple[str, ...]
    covers: tuple[Edge, ...]
    spanning_tree: tuple[Edge, ...] | None = None
    edge_order: tuple[Edge, ...] | None = None

    def __post_init__(self):
        _validate(self.elements, self.covers)
        object.__setattr__(self, "covers", tuple(sorted(self.covers)))

    def __len__(self):
        return len(self.elements)

    def to_json(self) -> str:
        doc: dict = {
            "elements": list(self.elements),
            "covers": [list(c) for c in self.covers],
        }
        if self.spanning_tree is not None:
            doc["spanning_tree"] = [list(e) for e in self.spanning_tree]
        if self.edge_order is not None:
            doc["edge_order"] = [list(e) for e in self.edge_order]
        return json.dumps(doc, indent=2)


def _validate(elements, covers):
    seen = set()
    for name in elements:
        if not isinstance(name, str) or not name:
            raise PosetSyntaxError(f"element names must be non-empty strings, got {name!r}")
        if name in RESERVED:
            raise ReservedNameError(f"element name {name!r} is reserved")
        if name in seen:
            raise DuplicateElementError(f"duplicate element {name!r}")
        seen.add(name)

    up: dict[str, set[str]] = {x: set() for x in elements}
    for pair in covers:
        if len(pair) != 2:
            raise PosetSyntaxError(f"cover must be a pair, got {pair!r}")
        a, b = pair
        for x in (a, b):
            if x in RESERVED:
                raise ReservedNameError(f"covers may not mention reserved name {x!r}")
            if x not in up:
                raise PosetSyntaxError(f"cover mentions unknown element {x!r}")
        if a == b:
            raise CycleError(f"self-cover on {a!r}")
        if b in up[a]:
            raise PosetSyntaxError(f"duplicate cover {pair!r}")
        up[a].add(b)

    # acyclicity: iterative three-colour DFS
    colour = dict.fromkeys(elements, 0)
    for root in elements:
        if colour[root]:
            continue
        stack = [(root, iter(sorted(up[root])))]
        colour[root] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[node] = 2
                stack.pop()
            elif colour[nxt] == 1:
                raise CycleError(f"cover relation has a cycle through {nxt!r}")
            elif colour[nxt] == 0:
                colour[nxt] = 1
                stack.append((nxt, iter(sorted(up[nxt]))))

    for a in elements:
        for b in up[a]:
            # is b reachable from a through some other cover first?
            stack = [x for x in up[a] if x != b]
            reached = set(stack)
            while stack:
                x = stack.pop()
                if x == b:
                    raise TransitiveCoverError(f"cover ({a!r}, {b!r}) is implied transitively")
                for y in up[x]:
                    if y not in reached:
                        reached.add(y)
                        stack.append(y)


def _edge_list(value, key):
    if not isinstance(value, list):
        raise PosetSyntaxError(f"{key!r} must be an array")
    out = []
    for item in value:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(s, str) for s in item)):
            raise PosetSyntaxError(f"{key!r} entries must be [lower, upper] string pairs, got {item!r}")
        out.append((item[0], item[1]))
    return tuple(out)


def parse_poset(text: str) -> Poset:
    """Parse and validate the JSON poset format described in the module docstring."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PosetSyntaxError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise PosetSyntaxError("poset document must be a JSON object")
    unknown = set(doc) - {"elements", "covers", "spanning_tree", "edge_order"}
    if unknown:
        raise PosetSyntaxError(f"unknown keys: {sorted(unknown)}")
    for key in ("elements", "covers"):
        if key not in doc:
            raise PosetSyntaxError(f"missing key {key!r}")
    elements = doc["elements"]
    if not isinstance(elements, list):
        raise PosetSyntaxError("'elements' must be an array")
    covers = _edge_list(doc["covers"], "covers")
    tree = _edge_list(doc["spanning_tree"], "spanning_tree") if "spanning_tree" in doc else None
    order = _edge_list(doc["edge_order"], "edge_order") if "edge_order" in doc else None
    return Poset(tuple(elements), covers, tree, order)


def load_poset(path) -> Poset:
    with open(path, encoding="utf-8") as fh:
        return parse_poset(fh.read())


@dataclass(frozen=True)
class HasseHat:
    """Hasse diagram of P-hat with edges indexed ``0 .. n-1`` (printed as e_1 .. e_n).

    ``vertices`` is ordered ``bot, elements..., top``; every edge is a pair of
    vertex indices ``(lower, upper)``.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    poset: Poset = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def bot(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.vertices) - 1

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map from an unordered vertex pair (both orientations) to the edge index."""
        out = {}
        for k, (a, b) in enumerate(self.edges):
            out[(a, b)] = k
            out[(b, a)] = k
        return out

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in self.vertices]
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return tuple(tuple(sorted(x)) for x in nbrs)

    def edge_names(self, k: int) -> Edge:
        a, b = self.edges[k]
        return self.vertices[a], self.vertices[b]

    def lookup_edge(self, spec: Edge) -> int:
        a, b = spec
        try:
            return self.edge_index[(self.index[a], self.index[b])]
        except KeyError:
            raise EdgeSpecError(f"{spec!r} is not an edge of the Hasse diagram of P-hat") from None

    def sigma(self, k: int) -> tuple[int, ...]:
        """Linear form of edge ``k`` on x = (x_bot, x_elements...); x_top is fixed at 0."""
        a, b = self.edges[k]
        vec = [0] * self.dim
        vec[a] += 1
        if b != self.top:
            vec[b] -= 1
        return tuple(vec)


def _ranks(vertices, edges):
    """Length of the longest chain from bot to each vertex."""
    up: list[list[int]] = [[] for _ in vertices]
    indeg = [0] * len(vertices)
    for a, b in edges:
        up[a].append(b)
        indeg[b] += 1
    rank = [0] * len(vertices)
    queue = [v for v in range(len(vertices)) if indeg[v] == 0]
    while queue:
        v = queue.pop()
        for w in up[v]:
            rank[w] = max(rank[w], rank[v] + 1)
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return rank


def hat_edges(p: Poset) -> list[Edge]:
    """All edges of P-hat as name pairs (unordered, uncanonicalised)."""
    has_lower = {b for _, b in p.covers}
    has_upper = {a for a, _ in p.covers}
    edges = [(BOT, x) for x in p.elements if x not in has_lower]
    edges += list(p.covers)
    edges += [(x, TOP) for x in p.elements if x not in has_upper]
    if not p.elements:
        edges.append((BOT, TOP))
    return edges


def build_hat(p: Poset) -> HasseHat:
    vertices = (BOT, *p.elements, TOP)
    idx = {v: i for i, v in enumerate(vertices)}
    pairs = [(idx[a], idx[b]) for a, b in hat_edges(p)]
    if p.edge_order is not None:
        wanted = [(idx.get(a, -1), idx.get(b, -1)) for a, b in p.edge_order]
        if sorted(wanted) != sorted(pairs):
            raise EdgeSpecError("edge_order must list every edge of P-hat exactly once")
        pairs = wanted
    else:
        rank = _ranks(vertices, pairs)
        pairs.sort(key=lambda e: (rank[e[0]], vertices[e[0]], vertices[e[1]]))
    return HasseHat(vertices, tuple(pairs), p)


def is_pure(p: Poset) -> bool:
    """True iff every maximal chain of P-hat has the same length."""
    h = build_hat(p)
    up: list[list[int]] = [[] for _ in h.vertices]
    for a, b in h.edges:
        up[a].append(b)
    longest = _ranks(h.vertices, h.edges)
    shortest = [None] * len(h.vertices)
    shortest[h.bot] = 0
    for v in sorted(range(len(h.vertices)), key=longest.__getitem__):
        for w in up[v]:
            cand = shortest[v] + 1
            if shortest[w] is None or cand < shortest[w]:
                shortest[w] = cand
    return shortest[h.top] == longest[h.top]


def chain_poset(length: int) -> Poset:
    names = tuple(f"c{i}" for i in range(1, length + 1))
    return Poset(names, tuple(zip(names, names[1:])))
