"""Exhaustive small-order enumeration and extremal Estrada search.

Underlying graphs are deduplicated up to isomorphism with an exact
canonical labeling: colour refinement followed by an individualization
search over every branch (cells of interchangeable twins are collapsed
to one branch, which cannot change the result).  Signed graphs are grouped up to isomorphism
*and* switching by minimising the switching normal form over the same
search leaves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, Sequence

from signed_estrada.core import (
    SignedGraph,
    adjacency_matrix,
    balanced,
    connected_components,
    has_pairing_property,
    spanning_forest,
    switching_normal_form,
)
from signed_estrada.estrada import DEFAULT_TIE_TOL, estrada_index
from signed_estrada.spectra import DEFAULT_TOL, char_poly

ORDER_GUARD = 10
BIPARTITE_GUARD = 20

UEdges = tuple[tuple[int, int], ...]


class GuardExceeded(ValueError):
    pass


# -- canonical labeling --


def _adjacency(n: int, edges: Iterable[Sequence[int]]) -> list[frozenset[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e[0], e[1]
        adj[u].add(v)
        adj[v].add(u)
    return [frozenset(a) for a in adj]


Coloured = list[tuple[tuple[int, object], ...]]


def _refine(nbrs: Coloured, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement over coloured neighbour lists.

    Sub-cells are ordered by their signature, so the result depends only
    on the isomorphism type of the coloured input.
    """
    while True:
        where = {v: i for i, cell in enumerate(cells) for v in cell}
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(sorted((where[w], c) for w, c in nbrs[v])) for v in cell}
            for key in sorted(set(sig.values())):
                out.append([v for v in cell if sig[v] == key])
        if len(out) == len(cells):
            return out
        cells = out


def _twins(adj: Sequence[frozenset[int]], cell: list[int]) -> bool:
    """Whether all vertices of ``cell`` share an open or a closed neighbourhood,
    so any transposition inside the cell is a graph automorphism."""
    first = adj[cell[0]]
    if all(adj[v] == first for v in cell):
        return True
    closed = first | {cell[0]}
    return all(adj[v] | {v} == closed for v in cell)


def _switching_twins(g: SignedGraph, adj, cell: list[int]) -> bool:
    """Twins whose transpositions also preserve the switching class of ``g``."""
    if not _twins(adj, cell):
        return False
    reference = switching_normal_form(g)
    a = cell[0]
    for b in cell[1:]:
        perm = list(range(g.n))
        perm[a], perm[b] = b, a
        if switching_normal_form(g.relabel(perm)) != reference:
            return False
    return True


def _leaves(nbrs: Coloured, cells, collapsible: Callable[[list[int]], bool]) -> Iterator[list[int]]:
    """Leaves of the individualization-refinement tree.

    Branching on a cell whose members are exchanged by automorphisms fixing
    everything else yields identical subtrees, so only its first member is
    individualized there.
    """
    cells = _refine(nbrs, cells)
    for i, cell in enumerate(cells):
        if len(cell) > 1:
            choices = cell[:1] if collapsible(cell) else cell
            for v in choices:
                split = cells[:i] + [[v], [w for w in cell if w != v]] + cells[i + 1 :]
                yield from _leaves(nbrs, split, collapsible)
            return
    yield [cell[0] for cell in cells]


def _cells_by(n: int, colour: Callable[[int], object]) -> list[list[int]]:
    groups: dict[object, list[int]] = {}
    for v in range(n):
        groups.setdefault(colour(v), []).append(v)
    return [groups[k] for k in sorted(groups)]


def _relabelled(order: list[int], edges: Iterable[Sequence[int]]) -> UEdges:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v, *_ in edges))


def canonical_form(n: int, edges: Iterable[Sequence[int]]) -> UEdges:
    """Isomorphism-invariant edge list of an unsigned graph."""
    edges = list(edges)
    if n == 0:
        return ()
    adj = _adjacency(n, edges)
    nbrs = [tuple((w, 1) for w in adj[v]) for v in range(n)]
    leaves = _leaves(nbrs, _cells_by(n, lambda v: len(adj[v])), lambda cell: _twins(adj, cell))
    return min(_relabelled(order, edges) for order in leaves)


def _switching_invariant_colours(g: SignedGraph) -> tuple[list, Coloured]:
    """Per-vertex ``diag(A^k)`` and per-pair ``|A^k|`` for k <= 4; both are
    unchanged by switching, which only conjugates A by a diagonal sign matrix."""
    a = adjacency_matrix(g)
    powers = [a]
    for _ in range(3):
        powers.append(powers[-1] @ a)
    vertex = [tuple(int(p[v, v]) for p in powers[1:]) for v in range(g.n)]
    nbrs = []
    for v in range(g.n):
        row = []
        for w in range(g.n):
            if w != v:
                colour = tuple(abs(int(p[v, w])) for p in powers)
                if any(colour):
                    row.append((w, colour))
        nbrs.append(tuple(row))
    return vertex, nbrs


def _signed_code(order: list[int], g: SignedGraph) -> tuple[UEdges, tuple]:
    """(unsigned edges, switching normal form) of ``g`` relabeled by ``order``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    edges = sorted((min(pos[u], pos[v]), max(pos[u], pos[v]), s) for u, v, s in g.edges)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for u, v, s in edges:
        adj[u].append((v, s))
        adj[v].append((u, s))
    mark = [0] * g.n
    for root in range(g.n):
        if mark[root]:
            continue
        mark[root] = 1
        queue = [root]
        for u in queue:
            for w, s in sorted(adj[u]):
                if not mark[w]:
                    mark[w] = mark[u] * s
                    queue.append(w)
    return tuple((u, v) for u, v, _ in edges), tuple((u, v, s * mark[u] * mark[v]) for u, v, s in edges)


def signed_class_key(g: SignedGraph) -> tuple:
    """Complete invariant of ``g`` up to relabeling and switching.

    Minimum over canonical-labeling leaves of ``(unsigned code, switching
    normal form)``; refinement uses switching-invariant walk counts so that
    the search stays small.
    """
    if g.n == 0:
        return (0, (), ())
    adj = _adjacency(g.n, g.edges)
    vertex, nbrs = _switching_invariant_colours(g)
    memo: dict[tuple[int, ...], bool] = {}

    def collapsible(cell):
        key = tuple(cell)
        if key not in memo:
            memo[key] = _switching_twins(g, adj, cell)
        return memo[key]

    best = min(_signed_code(order, g) for order in _leaves(nbrs, _cells_by(g.n, vertex.__getitem__), collapsible))
    return (g.n,) + best


# -- underlying graphs --


def _check_guard(n: int, guard: int | None) -> None:
    limit = ORDER_GUARD if guard is None else guard
    if n > limit:
        raise GuardExceeded(
            f"order n={n} exceeds the enumeration guard {limit}; pass a larger guard explicitly"
        )


def _add_one_edge(n: int, graphs: Iterable[UEdges]) -> list[UEdges]:
    seen = set()
    out = []
    for g in graphs:
        present = set(g)
        for e in combinations(range(n), 2):
            if e in present:
                continue
            c = canonical_form(n, g + (e,))
            if c not in seen:
                seen.add(c)
                out.append(c)
    return sorted(out)


def enumerate_trees(n: int, guard: int | None = None) -> list[UEdges]:
    _check_guard(n, guard)
    if n <= 0:
        return []
    level: list[UEdges] = [()]
    for k in range(2, n + 1):
        seen = set()
        for t in level:
            for v in range(k - 1):
                seen.add(canonical_form(k, t + ((v, k - 1),)))
        level = sorted(seen)
    return level


def enumerate_underlying(n: int, m: int, connected: bool = True, guard: int | None = None) -> list[UEdges]:
    """All simple graphs on ``n`` vertices and ``m`` edges, one per isomorphism class.

    Connected graphs are grown from spanning trees one edge at a time;
    the general case grows from the empty graph.
    """
    _check_guard(n, guard)
    if m < 0 or m > n * (n - 1) // 2:
        return []
    if connected:
        if n == 0 or m < n - 1:
            return []
        level = enumerate_trees(n, guard)
        for _ in range(m - (n - 1)):
            level = _add_one_edge(n, level)
        return level
    level = [()]
    for _ in range(m):
        level = _add_one_edge(n, level)
    return level


# -- signatures --


def enumerate_signatures(g: SignedGraph | UEdges, n: int | None = None) -> list[SignedGraph]:
    """One signed graph per switching class on a fixed labeled graph.

    Spanning-forest edges are positive and every co-tree sign pattern is
    emitted, all-positive first: ``2^(m - n + c)`` graphs.
    """
    if isinstance(g, SignedGraph):
        base = g.with_signs(1)
    else:
        if n is None:
            raise ValueError("n is required with a bare edge tuple")
        base = SignedGraph(n, tuple((u, v, 1) for u, v in g))
    _, tree = spanning_forest(base)
    tree_set = set(tree)
    cotree = [(u, v) for u, v, _ in base.edges if (u, v) not in tree_set]
    out = []
    for signs in product((1, -1), repeat=len(cotree)):
        neg = {e for e, s in zip(cotree, signs) if s < 0}
        out.append(SignedGraph(base.n, tuple((u, v, -1 if (u, v) in neg else 1) for u, v, _ in base.edges)))
    return out


def enumerate_signed(
    n: int,
    m: int,
    connected: bool = True,
    unbalanced: bool = False,
    pairing: bool = False,
    guard: int | None = None,
) -> list[SignedGraph]:
    """Signed graphs up to switching over every underlying class of order ``n`` and size ``m``."""
    out = []
    for edges in enumerate_underlying(n, m, connected, guard):
        for sg in enumerate_signatures(edges, n):
            if unbalanced and balanced(sg):
                continue
            if pairing and not has_pairing_property(sg):
                continue
            out.append(sg)
    return out


def complete_bipartite_edges(m: int, n: int) -> UEdges:
    return tuple((i, m + j) for i in range(m) for j in range(n))


def enumerate_complete_bipartite_signatures(m: int, n: int, guard: int | None = None) -> list[SignedGraph]:
    """Unbalanced switching classes of signed ``K_{m,n}`` (parts ``0..m-1`` and ``m..m+n-1``)."""
    limit = BIPARTITE_GUARD if guard is None else guard
    if m * n > limit:
        raise GuardExceeded(f"m*n={m * n} exceeds the bipartite guard {limit}; pass a larger guard explicitly")
    if m < 1 or n < 1:
        return []
    return [g for g in enumerate_signatures(complete_bipartite_edges(m, n), m + n) if not balanced(g)]


def filter_pairing(candidates: Iterable[SignedGraph]) -> list[SignedGraph]:
    return [g for g in candidates if has_pairing_property(g)]


def has_odd_cycle(g: SignedGraph) -> bool:
    colour = [-1] * g.n
    for comp in connected_components(g):
        colour[comp[0]] = 0
        stack = [comp[0]]
        while stack:
            u = stack.pop()
            for w in g.neighbors[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return True
    return False


def girth(g: SignedGraph) -> int | None:
    """Length of a shortest cycle, or ``None`` for forests."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        for u in queue:
            for w in g.neighbors[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


# -- extremal search --


@dataclass
class EEClass:
    """Candidates sharing one isomorphism-and-switching class."""

    key: tuple
    char_poly: tuple[int, ...]
    members: list[SignedGraph]
    value: float

    @property
    def representative(self) -> SignedGraph:
        return self.members[0]


@dataclass
class EELevel:
    """Candidates whose EE values chain together within the tie tolerance."""

    value: float
    classes: list[EEClass]

    @property
    def unique(self) -> bool:
        return len(self.classes) == 1


@dataclass
class ExtremalResult:
    winners: list[SignedGraph]
    max_value: float
    runner_up: float | None
    margin: float | None
    examined: int
    classes: list[EEClass] = field(default_factory=list)

    @property
    def unique(self) -> bool:
        return len(self.classes) == 1


def _group_classes(graphs: list[SignedGraph], values: list[float]) -> list[EEClass]:
    groups: dict[tuple, EEClass] = {}
    for g, v in zip(graphs, values):
        key = signed_class_key(g)
        if key not in groups:
            groups[key] = EEClass(key, char_poly(g).coeffs, [], v)
        cls = groups[key]
        cls.members.append(g)
        cls.value = max(cls.value, v)
    return sorted(groups.values(), key=lambda c: (-c.value, c.key))


def evaluate(candidates: Iterable[SignedGraph], tol: float = DEFAULT_TOL) -> list[tuple[SignedGraph, float]]:
    return [(g, estrada_index(g, tol).value) for g in candidates]


def rank_levels(
    candidates: Iterable[SignedGraph] | list[tuple[SignedGraph, float]],
    levels: int,
    tie_tol: float = DEFAULT_TIE_TOL,
    tol: float = DEFAULT_TOL,
) -> tuple[list[EELevel], int]:
    """Top ``levels`` EE levels, each split into isomorphism/switching classes.

    Returns ``(levels, examined)``.  Only graphs in the reported levels are
    canonicalized.
    """
    scored = list(candidates)
    if scored and not isinstance(scored[0], tuple):
        scored = evaluate(scored, tol)
    scored.sort(key=lambda gv: (-gv[1], gv[0].n, gv[0].edges))
    out: list[EELevel] = []
    i = 0
    while i < len(scored) and len(out) < levels:
        top = scored[i][1]
        j = i
        while j < len(scored) and top - scored[j][1] < tie_tol:
            j += 1
        chunk = scored[i:j]
        out.append(EELevel(top, _group_classes([g for g, _ in chunk], [v for _, v in chunk])))
        i = j
    return out, len(scored)


def argmax_ee(
    candidates: Iterable[SignedGraph], tie_tol: float = DEFAULT_TIE_TOL, tol: float = DEFAULT_TOL
) -> ExtremalResult:
    """Maximum-EE candidates, grouped into isomorphism/switching classes."""
    scored = evaluate(candidates, tol)
    if not scored:
        raise ValueError("argmax_ee needs at least one candidate")
    lv, examined = rank_levels(scored, 2, tie_tol, tol)
    top = lv[0]
    winners = sorted((g for c in top.classes for g in c.members), key=lambda g: g.edges)
    runner = lv[1].value if len(lv) > 1 else None
    margin = top.value - runner if runner is not None else None
    return ExtremalResult(winners, top.value, runner, margin, examined, top.classes)


def orbit_count_bipartite(m: int, n: int) -> int:
    """Number of switching classes of signed ``K_{m,n}`` by brute-force orbit counting."""
    cells = m * n
    seen = set()
    orbits = 0
    for pattern in range(1 << cells):
        if pattern in seen:
            continue
        orbits += 1
        for rows in range(1 << m):
            for cols in range(1 << n):
                image = 0
                for i in range(m):
                    for j in range(n):
                        bit = (pattern >> (i * n + j)) & 1
                        flip = ((rows >> i) ^ (cols >> j)) & 1
                        image |= (bit ^ flip) << (i * n + j)
                seen.add(image)
    return orbits


def expected_signature_count(g: SignedGraph) -> int:
    return 2 ** (g.m - g.n + len(connected_components(g)))
