import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings

from conftest import random_signed, signed_graphs
from signed_estrada.core import SignedGraph, adjacency_matrix, switch
from signed_estrada.estrada import (
    J0,
    balance_ratio,
    bessel_series_constant,
    count_signed_triangles,
    cycle_ee,
    cycle_ee_approximation,
    cycle_ee_gap_bound,
    ee_compare,
    ee_from_moments,
    estrada_index,
    majorizes,
    spectral_moment,
    spectral_moments,
)
from signed_estrada.families import make_cycle, make_path, make_star


def lapack_ee(g):
    return float(np.exp(np.linalg.eigvalsh(adjacency_matrix(g).astype(float))).sum())


def test_j0_is_modified_bessel_at_two():
    # sum 1/(r!)^2 = I_0(2)
    assert abs(J0 - float(mpmath.besseli(0, 2))) < 1e-15
    assert bessel_series_constant(1e-6) == pytest.approx(J0, abs=1e-6)


@settings(max_examples=60, deadline=None)
@given(signed_graphs(max_n=8))
def test_estrada_matches_lapack(g):
    assert estrada_index(g).value == pytest.approx(lapack_ee(g), abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(signed_graphs(max_n=7))
def test_low_order_moments(g):
    m = spectral_moments(g, 3).moments
    pos, neg = count_signed_triangles(g)
    assert m[0] == g.n
    assert m[1] == 0
    assert m[2] == 2 * g.m
    assert m[3] == 6 * (pos - neg)


def test_moments_match_power_sums(rng):
    for _ in range(30):
        g = random_signed(rng, int(rng.integers(1, 8)))
        ev = np.linalg.eigvalsh(adjacency_matrix(g).astype(float))
        for k, mk in enumerate(spectral_moments(g, 12).moments):
            assert abs(mk - float(np.sum(ev**k))) < 1e-8 * g.n * 2**k


def test_ee_from_moments_tolerance(rng):
    for target in (1e-6, 1e-9, 1e-12):
        g = random_signed(rng, 7)
        res = ee_from_moments(g, target)
        assert res.error_bound < target
        assert abs(res.value - lapack_ee(g)) < target + 1e-10


def test_ee_from_moments_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        ee_from_moments(make_path(3), 0)


@settings(max_examples=40, deadline=None)
@given(signed_graphs(min_n=2, max_n=7))
def test_ee_switching_invariant(g):
    assert abs(estrada_index(switch(g, [0])).value - estrada_index(g).value) < 1e-10


def test_balance_ratio_tree_is_one():
    tree = SignedGraph(4, ((0, 1, -1), (1, 2, 1), (1, 3, -1)))
    assert balance_ratio(tree) == pytest.approx(1.0, abs=1e-12)
    assert balance_ratio(make_cycle(3, -1)) < 1


def test_cycle_ee_closed_form_vs_solver():
    for n in range(3, 16):
        for s in (1, -1):
            assert cycle_ee(n, s) == pytest.approx(estrada_index(make_cycle(n, s)).value, abs=1e-10)
        assert cycle_ee_approximation(n) == pytest.approx(n * J0)


def test_gap_bound_exact_small_values():
    assert cycle_ee_gap_bound(3) == pytest.approx(10.0)
    assert cycle_ee_gap_bound(4) == pytest.approx(38 / 9)


def test_ee_compare():
    assert ee_compare(make_star(5), make_path(5)) == 1
    assert ee_compare(make_path(5), make_star(5)) == -1
    assert ee_compare(make_cycle(5, 1), make_cycle(5, 1)) == 0


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ([3, 0, 0], [1, 1, 1], True),
        ([1, 1, 1], [3, 0, 0], False),
        ([2, 1], [2, 1, 0], True),
        ([2, 2], [3, 0], False),
        ([3, 1], [2, 1], False),
    ],
)
def test_majorizes(a, b, expected):
    assert majorizes(a, b) is expected


def test_moment_example_values():
    assert spectral_moment(make_cycle(5, -1), 5) == -10
    assert math.isclose(estrada_index(make_cycle(5, -1)).value, 11.2996727, abs_tol=1e-7)
