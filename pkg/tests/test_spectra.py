import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings

from conftest import random_signed, signed_graphs
from signed_estrada.core import SignedGraph, adjacency_matrix, switch
from signed_estrada.families import make_cycle
from signed_estrada.spectra import (
    CharPoly,
    ConvergenceError,
    char_poly,
    char_poly_schwenk,
    cycle_spectrum_closed_form,
    eigenvalues,
    interlacing_check,
    jacobi_eigh,
    poly_from_factors,
    poly_mul,
)


def test_jacobi_reconstructs_random_symmetric(rng):
    for n in (1, 2, 5, 9, 14):
        m = rng.normal(size=(n, n))
        a = (m + m.T) / 2
        values, q = jacobi_eigh(a, 1e-12)
        assert np.allclose(q.T @ q, np.eye(n), atol=1e-10)
        assert np.abs(q @ np.diag(values) @ q.T - a).max() < n * 1e-11
        assert np.allclose(values, np.sort(np.linalg.eigvalsh(a))[::-1], atol=1e-10)


def test_jacobi_rejects_asymmetric_and_reports_stall():
    with pytest.raises(ValueError):
        jacobi_eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))
    a = adjacency_matrix(make_cycle(6, -1)).astype(float)
    with pytest.raises(ConvergenceError) as info:
        jacobi_eigh(a, 1e-300, max_sweeps=1)
    assert info.value.sweeps == 1


@settings(max_examples=60, deadline=None)
@given(signed_graphs(max_n=8))
def test_eigenvalues_within_tol_of_lapack(g):
    ours = eigenvalues(g, 1e-12).as_array()
    ref = np.sort(np.linalg.eigvalsh(adjacency_matrix(g).astype(float)))[::-1] if g.n else np.array([])
    assert np.abs(ours - ref).max(initial=0.0) < 1e-9


@pytest.mark.parametrize("n", range(3, 13))
@pytest.mark.parametrize("sign", [1, -1])
def test_cycle_closed_form(n, sign):
    assert eigenvalues(make_cycle(n, sign)).distance(cycle_spectrum_closed_form(n, sign)) < 1e-10


def test_char_poly_small_cases():
    tri_neg = SignedGraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, -1)))
    # x^3 - 3x - 2 sigma(C3)
    assert char_poly(tri_neg).coeffs == (2, -3, 0, 1)
    assert str(char_poly(make_cycle(4, 1))) == "x^4 - 4x^2"
    assert char_poly(SignedGraph(0, ())).coeffs == (1,)


def test_char_poly_matches_sympy_determinant(rng):
    x = sympy.Symbol("x")
    for _ in range(15):
        g = random_signed(rng, int(rng.integers(2, 8)))
        a = sympy.Matrix(adjacency_matrix(g).tolist())
        expected = (x * sympy.eye(g.n) - a).det()
        coeffs = sympy.Poly(expected, x).all_coeffs()[::-1]
        assert char_poly(g).coeffs == tuple(int(c) for c in coeffs)


def test_char_poly_roots_match_eigenvalues(rng):
    """Every root of the squarefree part, with multiplicity, against the eigensolver."""
    x = sympy.Symbol("x")
    for _ in range(15):
        g = random_signed(rng, int(rng.integers(2, 8)))
        poly = sympy.Poly(list(reversed(char_poly(g).coeffs)), x)
        roots = []
        for factor, mult in sympy.sqf_list(poly)[1]:
            roots += [float(sympy.re(r)) for r in factor.nroots(n=30)] * mult
        assert np.allclose(sorted(roots, reverse=True), eigenvalues(g).values, atol=1e-8)


def test_schwenk_equals_faddeev_leverrier_every_root(rng):
    for _ in range(200):
        g = random_signed(rng, int(rng.integers(1, 9)), p=float(rng.uniform(0.2, 0.8)))
        reference = char_poly(g)
        for u in range(g.n):
            assert char_poly_schwenk(g, u) == reference, (g, u)


@settings(max_examples=80, deadline=None)
@given(signed_graphs(min_n=2, max_n=7))
def test_char_poly_switching_invariant(g):
    assert char_poly(switch(g, range(0, g.n, 2))) == char_poly(g)


def test_poly_helpers():
    assert poly_mul((1, 1), (-1, 1)) == (-1, 0, 1)
    assert poly_from_factors((0, 1), (0, 1), (-2, 0, 1)) == (0, 0, -2, 0, 1)
    assert CharPoly((0, -1, 0, 1))(2) == 6


def test_interlacing(rng):
    for _ in range(30):
        g = random_signed(rng, int(rng.integers(3, 9)))
        k = int(rng.integers(1, g.n + 1))
        verts = rng.choice(g.n, size=k, replace=False)
        assert interlacing_check(g, verts.tolist())


def test_spectrum_utilities():
    spec = eigenvalues(make_cycle(4, 1))
    assert spec.index == pytest.approx(2.0)
    assert spec.multiplicities() == [(pytest.approx(2.0), 1), (pytest.approx(0.0), 2), (pytest.approx(-2.0), 1)]
    assert spec.nonzero_count() == 2 and spec.is_symmetric()
    assert spec.distance([1.0]) == math.inf
