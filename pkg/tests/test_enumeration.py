import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import signed_graphs
from signed_estrada.core import SignedGraph, balanced, is_switching_equivalent, switch
from signed_estrada.enumeration import (
    GuardExceeded,
    argmax_ee,
    canonical_form,
    enumerate_complete_bipartite_signatures,
    enumerate_signatures,
    enumerate_signed,
    enumerate_trees,
    enumerate_underlying,
    expected_signature_count,
    filter_pairing,
    girth,
    has_odd_cycle,
    orbit_count_bipartite,
    rank_levels,
    signed_class_key,
)
from signed_estrada.families import make_cycle, make_pendant_cycle

# OEIS A000055, A001429, A001435 and A008406 (n = 5 row)
TREES = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
UNICYCLIC = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89}
BICYCLIC = {4: 1, 5: 5, 6: 19, 7: 67}
ALL_ON_FIVE = [1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1]


def to_nx(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((e[0], e[1]) for e in edges)
    return g


@pytest.mark.parametrize("n", range(1, 11))
def test_tree_counts(n):
    trees = enumerate_trees(n)
    assert len(trees) == TREES[n - 1]
    assert all(nx.is_tree(to_nx(n, t)) for t in trees)


@pytest.mark.parametrize("n, count", sorted(UNICYCLIC.items()))
def test_unicyclic_counts(n, count):
    assert len(enumerate_underlying(n, n)) == count


@pytest.mark.parametrize("n, count", sorted(BICYCLIC.items()))
def test_bicyclic_counts(n, count):
    assert len(enumerate_underlying(n, n + 1)) == count


def test_all_graphs_on_five_vertices():
    assert [len(enumerate_underlying(5, m, connected=False)) for m in range(11)] == ALL_ON_FIVE


def test_enumerated_graphs_pairwise_non_isomorphic():
    graphs = [to_nx(6, e) for e in enumerate_underlying(6, 7)]
    for a, b in itertools.combinations(graphs, 2):
        assert not nx.is_isomorphic(a, b)


@settings(max_examples=80, deadline=None)
@given(signed_graphs(max_n=7))
def test_canonical_form_is_invariant(g):
    perm = list(range(g.n))[::-1]
    h = g.relabel(perm)
    assert canonical_form(g.n, g.edges) == canonical_form(h.n, h.edges)
    assert signed_class_key(g) == signed_class_key(switch(h, range(0, g.n, 3)))


def test_class_key_separates_switching_classes():
    a = make_pendant_cycle(6, 4, 1)
    b = make_pendant_cycle(6, 4, -1)
    assert signed_class_key(a) != signed_class_key(b)
    assert signed_class_key(make_pendant_cycle(6, 3, -1)) != signed_class_key(make_pendant_cycle(6, 5, -1))


@settings(max_examples=60, deadline=None)
@given(signed_graphs(max_n=6))
def test_class_key_complete_against_brute_force(g):
    """Equal keys iff some relabeling of one is switching equivalent to the other."""
    h = g.negated()
    same = any(is_switching_equivalent(g.relabel(list(p)), h) for p in itertools.permutations(range(g.n)))
    assert (signed_class_key(g) == signed_class_key(h)) == same


def test_signature_counts_follow_cycle_rank():
    for m in (5, 6, 7):
        for edges in enumerate_underlying(5, m):
            sigs = enumerate_signatures(edges, 5)
            assert len(sigs) == expected_signature_count(sigs[0])
            assert all(s == 1 for *_, s in sigs[0].edges)
            for a, b in itertools.combinations(sigs, 2):
                assert not is_switching_equivalent(a, b)


def test_unicyclic_has_two_signatures():
    for edges in enumerate_underlying(6, 6):
        sigs = enumerate_signatures(edges, 6)
        assert len(sigs) == 2 and [balanced(s) for s in sigs] == [True, False]


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (2, 5)])
def test_complete_bipartite_classes_match_orbit_count(m, n):
    classes = enumerate_complete_bipartite_signatures(m, n)
    assert len(classes) == orbit_count_bipartite(m, n) - 1
    assert not any(balanced(g) for g in classes)


def test_pairing_filter_on_unicyclic_is_bipartite():
    for n in (5, 6, 7):
        graphs = enumerate_signed(n, n)
        kept = filter_pairing(graphs)
        assert kept == [g for g in graphs if girth(g) % 2 == 0]
        assert all(not has_odd_cycle(g) for g in kept)


def test_girth():
    assert girth(make_cycle(5)) == 5
    assert girth(make_pendant_cycle(7, 4)) == 4
    assert girth(SignedGraph(3, ((0, 1, 1), (1, 2, 1)))) is None


def test_guards():
    with pytest.raises(GuardExceeded):
        enumerate_trees(11)
    with pytest.raises(GuardExceeded):
        enumerate_complete_bipartite_signatures(3, 7)
    assert len(enumerate_trees(11, guard=11)) == 235


def test_argmax_and_levels():
    res = argmax_ee(enumerate_signed(5, 5))
    assert res.unique and res.margin > 1e-6
    assert signed_class_key(res.winners[0]) == signed_class_key(make_pendant_cycle(5, 3, 1))
    levels, examined = rank_levels(enumerate_signed(5, 5), 3)
    assert examined == 10 and len(levels) == 3
    assert levels[0].value > levels[1].value > levels[2].value
    with pytest.raises(ValueError):
        argmax_ee([])
