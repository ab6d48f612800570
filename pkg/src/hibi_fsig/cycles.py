"""Spanning trees, fundamental cycles and circuits of the Hasse diagram of P-hat."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .poset import HasseHat


class SpanningTreeError(ValueError):
    pass


@dataclass(frozen=True)
class SpanningTree:
    tree_edges: tuple[int, ...]      # sorted edge indices; these index y_1 .. y_d
    cotree_edges: tuple[int, ...]    # sorted edge indices; these index c_1 .. c_{n-d}

    def position(self, k: int) -> int:
        """Coordinate slot of a tree edge in y (0-based)."""
        return self.tree_edges.index(k)


def _is_spanning_tree(h: HasseHat, edges) -> bool:
    if len(edges) != h.dim or len(set(edges)) != len(edges):
        return False
    if any(not 0 <= k < h.n_edges for k in edges):
        return False
    parent = list(range(len(h.vertices)))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for k in edges:
        a, b = (find(v) for v in h.edges[k])
        if a == b:
            return False
        parent[a] = b
    return True


def choose_spanning_tree(h: HasseHat, requested=None) -> SpanningTree:
    """Validate ``requested`` (edge indices or name pairs), or build a BFS tree from bot.

    Without a request, a tree stored on the poset (``spanning_tree`` key) is used.
    """
    if requested is None and h.poset.spanning_tree is not None:
        requested = h.poset.spanning_tree
    if requested is not None:
        edges = [k if isinstance(k, int) else h.lookup_edge(k) for k in requested]
        if not _is_spanning_tree(h, edges):
            raise SpanningTreeError(
                f"{len(edges)} edges given, need {h.dim} edges forming an acyclic spanning subgraph")
        tree = tuple(sorted(edges))
    else:
        seen = {h.bot}
        chosen = []
        queue = deque([h.bot])
        while queue:
            v = queue.popleft()
            for k, (a, b) in enumerate(h.edges):
                if v not in (a, b):
                    continue
                w = b if a == v else a
                if w not in seen:
                    seen.add(w)
                    chosen.append(k)
                    queue.append(w)
        tree = tuple(sorted(chosen))
    cotree = tuple(k for k in range(h.n_edges) if k not in set(tree))
    return SpanningTree(tree, cotree)


@dataclass(frozen=True)
class FundamentalCycle:
    """Cycle closed by one cotree edge f = {a < b}.

    ``vertices`` runs from b along the tree back to a, so that the closing
    step a -> b traverses f upwards.  ``y_plus``/``y_minus`` are the tree edges
    traversed upwards/downwards; the signed identity reads
    sigma_f + sum(sigma over y_plus) - sum(sigma over y_minus) = 0.
    """

    cotree_edge: int
    vertices: tuple[int, ...]
    y_plus: frozenset[int]
    y_minus: frozenset[int]

    def band_coefficients(self, tree: SpanningTree) -> tuple[int, ...]:
        """Coefficient vector of sum(y over y_minus) - sum(y over y_plus) in y-coordinates."""
        coeffs = [0] * len(tree.tree_edges)
        for k in self.y_minus:
            coeffs[tree.position(k)] += 1
        for k in self.y_plus:
            coeffs[tree.position(k)] -= 1
        return tuple(coeffs)


def _tree_path(h: HasseHat, tree: SpanningTree, src: int, dst: int) -> list[int]:
    nbrs: dict[int, list[int]] = {v: [] for v in range(len(h.vertices))}
    for k in tree.tree_edges:
        a, b = h.edges[k]
        nbrs[a].append(b)
        nbrs[b].append(a)
    prev = {src: src}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w in nbrs[v]:
            if w not in prev:
                prev[w] = v
                queue.append(w)
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    return path[::-1]


def fundamental_cycle(h: HasseHat, t: SpanningTree, cotree_edge: int) -> FundamentalCycle:
    if cotree_edge in t.tree_edges:
        raise ValueError(f"edge {cotree_edge} is a tree edge")
    a, b = h.edges[cotree_edge]
    path = _tree_path(h, t, b, a)
    plus, minus = set(), set()
    for u, v in zip(path, path[1:]):
        k = h.edge_index[(u, v)]
        (plus if h.edges[k] == (u, v) else minus).add(k)
    return FundamentalCycle(cotree_edge, tuple(path), frozenset(plus), frozenset(minus))


def fundamental_cycles(h: HasseHat, t: SpanningTree) -> list[FundamentalCycle]:
    return [fundamental_cycle(h, t, k) for k in t.cotree_edges]


@dataclass(frozen=True)
class Circuit:
    """A chordless cycle in canonical traversal order.

    ``x_plus`` holds the edges traversed upwards (lower -> upper) when the
    vertex sequence is read cyclically, ``x_minus`` the downward ones.
    """

    vertices: tuple[int, ...]
    x_plus: frozenset[int]
    x_minus: frozenset[int]

    def z_plus(self, t: SpanningTree) -> frozenset[int]:
        return self.x_plus.intersection(t.cotree_edges)

    def z_minus(self, t: SpanningTree) -> frozenset[int]:
        return self.x_minus.intersection(t.cotree_edges)


def canonical_cycle(cycle) -> tuple[int, ...]:
    """Rotate to start at the smallest vertex and pick the lexicographically smaller direction."""
    cycle = list(cycle)
    i = cycle.index(min(cycle))
    fwd = cycle[i:] + cycle[:i]
    back = [fwd[0]] + fwd[1:][::-1]
    return tuple(min(fwd, back))


def _make_circuit(h: HasseHat, cycle) -> Circuit:
    plus, minus = set(), set()
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        k = h.edge_index[(u, v)]
        (plus if h.edges[k] == (u, v) else minus).add(k)
    return Circuit(tuple(cycle), frozenset(plus), frozenset(minus))


def chordless_cycles(adjacency) -> list[tuple[int, ...]]:
    """All chordless cycles (length >= 3) of a simple undirected graph, canonical and sorted.

    Depth-first extension of chordless paths whose start is the smallest
    vertex on the cycle.
    """
    adj = [set(x) for x in adjacency]
    found = set()
    for s in range(len(adj)):
        # path: list of vertices, all > s except the start
        stack = [[s, w] for w in sorted(adj[s]) if w > s]
        while stack:
            path = stack.pop()
            last = path[-1]
            inner = set(path[1:-1])
            for w in adj[last]:
                if w <= s or w in path:
                    continue
                # w may touch only `last`, and optionally s (which closes the cycle)
                if adj[w] & inner:
                    continue
                if s in adj[w]:
                    if len(path) >= 2:
                        found.add(canonical_cycle(path + [w]))
                    continue
                stack.append(path + [w])
    return sorted(found)


def enumerate_circuits(h: HasseHat) -> list[Circuit]:
    return [_make_circuit(h, list(c)) for c in chordless_cycles(h.adjacency)]
