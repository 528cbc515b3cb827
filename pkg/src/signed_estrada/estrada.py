"""Estrada index, spectral moments and signed-cycle asymptotics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from signed_estrada.core import GraphError, SignedGraph
from signed_estrada.spectra import DEFAULT_TOL, Spectrum, cycle_spectrum_closed_form, eigenvalues

DEFAULT_TIE_TOL = 1e-9


@dataclass(frozen=True)
class EstradaValue:
    value: float
    method: str  # "eigenvalues" or "moment-series"
    truncation: int | None = None
    error_bound: float = 0.0

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class MomentSequence:
    """Exact spectral moments ``M_0..M_K``, i.e. traces of powers of A."""

    moments: tuple[int, ...]
    label: str = ""

    def __getitem__(self, k: int) -> int:
        return self.moments[k]

    @property
    def order(self) -> int:
        return len(self.moments) - 1


def estrada_from_spectrum(spectrum: Spectrum | Sequence[float]) -> float:
    return math.fsum(math.exp(x) for x in spectrum)


def estrada_index(g: SignedGraph, tol: float = DEFAULT_TOL) -> EstradaValue:
    """``sum(exp(mu))`` over the adjacency spectrum of ``g``."""
    spec = eigenvalues(g, tol)
    # |e^mu - e^mu'| <= e^max * |mu - mu'| bounds the solver's contribution
    bound = g.n * tol * math.exp(spec.index + tol) if g.n else 0.0
    return EstradaValue(estrada_from_spectrum(spec), "eigenvalues", None, bound)


def spectral_moments(g: SignedGraph, kmax: int) -> MomentSequence:
    """Exact ``M_k = tr(A^k)`` for ``k = 0..kmax`` with integer matrix powers.

    ``M_k`` equals the number of positive minus negative closed walks of
    length ``k``.
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    n = g.n
    rows = [[(v, g.sign(u, v)) for v in g.neighbors[u]] for u in range(n)]
    power = [[int(i == j) for j in range(n)] for i in range(n)]
    moments = [n]
    for _ in range(kmax):
        power = [
            [sum(s * power[v][j] for v, s in rows[i]) for j in range(n)] for i in range(n)
        ]
        moments.append(sum(power[i][i] for i in range(n)))
    return MomentSequence(tuple(moments))


def spectral_moment(g: SignedGraph, k: int) -> int:
    return spectral_moments(g, k).moments[k]


def ee_from_moments(g: SignedGraph, target_tol: float = 1e-9) -> EstradaValue:
    """Estrada index from the truncated series ``sum_k M_k / k!``.

    ``K`` grows until the tail bound ``n d^(K+1) e^d / (K+1)!`` is below
    ``target_tol``, where ``d`` is the maximum degree (an upper bound on the
    spectral radius).
    """
    if target_tol <= 0:
        raise ValueError("target_tol must be positive")
    n, d = g.n, g.max_degree

    def tail(k):
        return n * d ** (k + 1) * math.exp(d) / math.factorial(k + 1)

    order = 0
    while tail(order) >= target_tol:
        order += 1
    moments = spectral_moments(g, order).moments
    total = sum(Fraction(mk, math.factorial(k)) for k, mk in enumerate(moments))
    return EstradaValue(float(total), "moment-series", order, tail(order))


def count_signed_triangles(g: SignedGraph) -> tuple[int, int]:
    """``(positive, negative)`` triangle counts by brute-force triple scan."""
    pos = neg = 0
    for a, b, c in combinations(range(g.n), 3):
        s = g.sign(a, b) * g.sign(b, c) * g.sign(a, c)
        if s == 1:
            pos += 1
        elif s == -1:
            neg += 1
    return pos, neg


def balance_ratio(g: SignedGraph, tol: float = DEFAULT_TOL) -> float:
    """``tr(exp(A_signed)) / tr(exp(A_all_positive))`` on the same graph."""
    return estrada_index(g, tol).value / estrada_index(g.with_signs(1), tol).value


def bessel_series_constant(term_floor: float = 1e-16) -> float:
    """``sum_r 1/(r!)^2``, summed until the next term is below ``term_floor``."""
    terms = []
    r = 0
    while True:
        term = 1.0 / math.factorial(r) ** 2
        if term < term_floor:
            break
        terms.append(term)
        r += 1
    return math.fsum(terms)


J0 = bessel_series_constant()


def cycle_ee_approximation(n: int) -> float:
    """Large-girth approximation ``n * J0`` of the signed cycle Estrada index."""
    if n < 3:
        raise GraphError(f"a cycle needs n >= 3, got {n}")
    return n * J0


def cycle_ee(n: int, sign: int) -> float:
    """Exact Estrada index of the signed cycle from its closed-form spectrum."""
    return estrada_from_spectrum(cycle_spectrum_closed_form(n, sign))


def cycle_ee_gap_bound(n: int) -> float:
    """Upper bound on ``EE(C_n, +) - EE(C_n, -)``:
    ``(2^(n+2) n + 4 n (n-1)) / (n! (n-1))``."""
    if n < 3:
        raise GraphError(f"gap bound needs n >= 3, got {n}")
    return float(Fraction(2 ** (n + 2) * n + 4 * n * (n - 1), math.factorial(n) * (n - 1)))


def ee_compare(
    g1: SignedGraph, g2: SignedGraph, tie_tol: float = DEFAULT_TIE_TOL, tol: float = DEFAULT_TOL
) -> int:
    """-1, 0 or 1 as ``EE(g1)`` is below, tied with, or above ``EE(g2)``."""
    if tie_tol <= 0:
        raise ValueError("tie_tol must be positive")
    diff = estrada_index(g1, tol).value - estrada_index(g2, tol).value
    if abs(diff) < tie_tol:
        return 0
    return 1 if diff > 0 else -1


def majorizes(alpha: Sequence[float], beta: Sequence[float], tol: float = 1e-9) -> bool:
    """Whether ``alpha`` majorizes ``beta`` (shorter side zero-padded).

    Both are sorted non-increasing first; every prefix sum of ``alpha`` must
    dominate that of ``beta`` and the totals must agree within ``tol``.
    """
    size = max(len(alpha), len(beta))
    a = sorted(list(alpha) + [0.0] * (size - len(alpha)), reverse=True)
    b = sorted(list(beta) + [0.0] * (size - len(beta)), reverse=True)
    pa = pb = 0.0
    for x, y in zip(a, b):
        pa += x
        pb += y
        if pa < pb - tol:
            return False
    return abs(pa - pb) <= tol
