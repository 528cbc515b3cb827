"""Signed graph data model.

A :class:`SignedGraph` is an immutable labeled simple graph on vertices
``0..n-1`` whose edges carry a sign in ``{-1, +1}``.  Edges are stored in
canonical order (``u < v``, lexicographic) so two graphs with the same
labeled edges and signs compare and hash equal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int, int]


class GraphError(ValueError):
    """Raised when a signed graph (or an operation on one) is malformed."""


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: tuple[Edge, ...]
    _sign: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise GraphError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        sign = {}
        for e in self.edges:
            u, v, s = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u} in edge {e}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} has a vertex outside [0, {self.n})")
            if s not in (-1, 1):
                raise GraphError(f"edge {e} has sign {s!r}; expected -1 or +1")
            key = (min(u, v), max(u, v))
            if key in sign:
                raise GraphError(f"duplicate edge {e}")
            sign[key] = int(s)
        canonical = tuple(sorted((u, v, s) for (u, v), s in sign.items()))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", canonical)
        object.__setattr__(self, "_sign", sign)

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Sequence[int]]) -> "SignedGraph":
        return cls(n, tuple((int(u), int(v), int(s)) for u, v, s in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sign(self, u: int, v: int) -> int:
        """Sign of edge ``uv``, or 0 if ``u`` and ``v`` are not adjacent."""
        return self._sign.get((min(u, v), max(u, v)), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._sign

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.neighbors), default=0)

    def underlying(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, _ in self.edges)

    def with_signs(self, sign: int) -> "SignedGraph":
        """Same underlying graph with every edge given ``sign``."""
        return SignedGraph(self.n, tuple((u, v, sign) for u, v, _ in self.edges))

    def negated(self) -> "SignedGraph":
        return SignedGraph(self.n, tuple((u, v, -s) for u, v, s in self.edges))

    def relabel(self, perm: Sequence[int]) -> "SignedGraph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return SignedGraph(self.n, tuple((perm[u], perm[v], s) for u, v, s in self.edges))

    def __str__(self) -> str:
        body = ", ".join(f"{u}{'+' if s > 0 else '-'}{v}" for u, v, s in self.edges)
        return f"SignedGraph(n={self.n}: {body})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> SignedGraph:
    return SignedGraph.from_edge_list(n, edges)


def adjacency_matrix(g: SignedGraph) -> np.ndarray:
    """Signed adjacency matrix as an ``n x n`` int64 array."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, s in g.edges:
        a[u, v] = a[v, u] = s
    return a


def disjoint_union(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    shift = g1.n
    return SignedGraph(g1.n + g2.n, g1.edges + tuple((u + shift, v + shift, s) for u, v, s in g2.edges))


def _check_vertices(g: SignedGraph, verts: Iterable[int]) -> frozenset[int]:
    vs = frozenset(int(v) for v in verts)
    bad = sorted(v for v in vs if not 0 <= v < g.n)
    if bad:
        raise GraphError(f"vertices {bad} outside [0, {g.n})")
    return vs


def switch(g: SignedGraph, zset: Iterable[int]) -> SignedGraph:
    """Negate every edge with exactly one endpoint in ``zset``."""
    z = _check_vertices(g, zset)
    return SignedGraph(g.n, tuple((u, v, -s if (u in z) != (v in z) else s) for u, v, s in g.edges))


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    """Product of edge signs around ``cycle`` (closing edge implied).

    ``cycle`` lists distinct vertices; a trailing repeat of the first vertex
    is accepted.
    """
    cyc = list(cycle)
    if len(cyc) > 1 and cyc[0] == cyc[-1]:
        cyc.pop()
    if len(cyc) < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {list(cycle)}")
    if len(set(cyc)) != len(cyc):
        raise GraphError(f"repeated vertex in cycle {list(cycle)}")
    _check_vertices(g, cyc)
    prod = 1
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        s = g.sign(a, b)
        if s == 0:
            raise GraphError(f"({a}, {b}) is not an edge")
        prod *= s
    return prod


def connected_components(g: SignedGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp, queue = [], deque([root])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: SignedGraph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def spanning_forest(g: SignedGraph) -> tuple[list[int], list[tuple[int, int]]]:
    """BFS spanning forest rooted at the smallest vertex of each component.

    Returns ``(parent, tree_edges)`` where ``parent[root] == -1``.  The
    forest depends only on the labeled graph, which is what makes the
    switching normal form below a labeled invariant.
    """
    parent = [-2] * g.n
    tree = []
    for root in range(g.n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if parent[w] == -2:
                    parent[w] = u
                    tree.append((min(u, w), max(u, w)))
                    queue.append(w)
    return parent, tree


def _forest_marks(g: SignedGraph) -> list[int]:
    """Vertex marks in {-1,+1} making every forest edge positive."""
    parent = [-2] * g.n
    mark = [0] * g.n
    for root in range(g.n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        mark[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if parent[w] == -2:
                    parent[w] = u
                    mark[w] = mark[u] * g.sign(u, w)
                    queue.append(w)
    return mark


def switching_normal_form(g: SignedGraph) -> SignedGraph:
    """Representative of the switching class with all forest edges positive."""
    mark = _forest_marks(g)
    return SignedGraph(g.n, tuple((u, v, s * mark[u] * mark[v]) for u, v, s in g.edges))


def is_balanced(g: SignedGraph) -> tuple[bool, frozenset[int] | None]:
    """Harary balance test.

    Returns ``(True, Z)`` with ``switch(g, Z)`` all-positive when ``g`` is
    balanced, otherwise ``(False, None)``.
    """
    mark = _forest_marks(g)
    if all(s * mark[u] * mark[v] == 1 for u, v, s in g.edges):
        return True, frozenset(v for v in range(g.n) if mark[v] == -1)
    return False, None


def balanced(g: SignedGraph) -> bool:
    return is_balanced(g)[0]


def is_switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    if g1.n != g2.n or g1.underlying() != g2.underlying():
        return False
    return switching_normal_form(g1) == switching_normal_form(g2)


def induced_subgraph(g: SignedGraph, verts: Iterable[int]) -> SignedGraph:
    """Subgraph induced on ``verts``, relabeled order-preservingly to ``0..k-1``."""
    vs = sorted(_check_vertices(g, verts))
    index = {v: i for i, v in enumerate(vs)}
    return SignedGraph(
        len(vs),
        tuple((index[u], index[v], s) for u, v, s in g.edges if u in index and v in index),
    )


def delete_vertices(g: SignedGraph, verts: Iterable[int]) -> SignedGraph:
    drop = _check_vertices(g, verts)
    return induced_subgraph(g, [v for v in range(g.n) if v not in drop])


def has_pairing_property(g: SignedGraph) -> bool:
    """True iff the spectrum is symmetric about zero, with multiplicities.

    Decided exactly: every coefficient of ``x^k`` with ``n - k`` odd in the
    characteristic polynomial must vanish.
    """
    from signed_estrada.spectra import char_poly

    coeffs = char_poly(g).coeffs
    return all(c == 0 for k, c in enumerate(coeffs) if (g.n - k) % 2 == 1)


def cycle_basis(g: SignedGraph) -> list[list[int]]:
    """Fundamental cycles of the BFS spanning forest, as vertex sequences."""
    parent, tree = spanning_forest(g)
    tree_set = set(tree)

    def path_to_root(v):
        path = [v]
        while parent[v] >= 0:
            v = parent[v]
            path.append(v)
        return path

    basis = []
    for u, v, _ in g.edges:
        if (u, v) in tree_set:
            continue
        pu, pv = path_to_root(u), path_to_root(v)
        common = set(pu) & set(pv)
        lca = next(x for x in pu if x in common)
        left = pu[: pu.index(lca) + 1]
        right = pv[: pv.index(lca)]
        basis.append(left + right[::-1])
    return basis
