"""Adjacency spectra and exact characteristic polynomials of signed graphs.

Eigenvalues come from a cyclic Jacobi solver on the dense symmetric
adjacency matrix.  Characteristic polynomials are computed exactly, with
Python integers, by two independent routes: the Faddeev-LeVerrier
recurrence and Schwenk's vertex expansion over signed cycles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from signed_estrada.core import GraphError, SignedGraph, adjacency_matrix, induced_subgraph

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100
MULTIPLICITY_GAP = 1e-8


class ConvergenceError(RuntimeError):
    def __init__(self, residual: float, sweeps: int):
        super().__init__(f"Jacobi did not converge after {sweeps} sweeps (off-diagonal norm {residual:.3e})")
        self.residual = residual
        self.sweeps = sweeps


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigh(
    matrix: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS
) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps over all ``(p, q)`` pairs until the off-diagonal Frobenius norm
    drops below ``tol``.  Returns ``(values, vectors)`` with ``values``
    sorted non-increasing and ``vectors[:, i]`` the matching eigenvector.

    Raises
    ------
    ConvergenceError
        If the norm is still above ``tol`` after ``max_sweeps`` sweeps.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T, atol=0):
        raise ValueError("matrix must be square and symmetric")
    q = np.eye(n)
    off = _off_norm(a)
    sweeps = 0
    while off >= tol:
        if sweeps == max_sweeps:
            raise ConvergenceError(off, sweeps)
        for p in range(n - 1):
            for r in range(p + 1, n):
                apr = a[p, r]
                if apr == 0.0:
                    continue
                diff = float(a[r, r] - a[p, p])
                if abs(diff) > 1e150 * abs(apr):
                    t = float(apr) / diff
                else:
                    theta = diff / (2.0 * float(apr))
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_r = a[:, p].copy(), a[:, r].copy()
                a[:, p] = c * col_p - s * col_r
                a[:, r] = s * col_p + c * col_r
                row_p, row_r = a[p, :].copy(), a[r, :].copy()
                a[p, :] = c * row_p - s * row_r
                a[r, :] = s * row_p + c * row_r
                a[p, r] = a[r, p] = 0.0
                vp, vr = q[:, p].copy(), q[:, r].copy()
                q[:, p] = c * vp - s * vr
                q[:, r] = s * vp + c * vr
        sweeps += 1
        off = _off_norm(a)
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], q[:, order]


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted non-increasing, with the solver tolerance used."""

    values: tuple[float, ...]
    tol: float = DEFAULT_TOL

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def index(self) -> float:
        """Largest eigenvalue (0 for the empty graph)."""
        return self.values[0] if self.values else 0.0

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def nonzero_count(self, eps: float = MULTIPLICITY_GAP) -> int:
        return sum(1 for x in self.values if abs(x) > eps)

    def multiplicities(self, gap: float = MULTIPLICITY_GAP) -> list[tuple[float, int]]:
        """Group eigenvalues whose consecutive differences are below ``gap``."""
        groups: list[list[float]] = []
        for x in self.values:
            if groups and groups[-1][-1] - x < gap:
                groups[-1].append(x)
            else:
                groups.append([x])
        return [(sum(g) / len(g), len(g)) for g in groups]

    def is_symmetric(self, tol: float | None = None) -> bool:
        tol = 10 * self.tol if tol is None else tol
        v = self.values
        return all(abs(v[i] + v[-1 - i]) <= tol for i in range(len(v)))

    def distance(self, other: "Spectrum | Sequence[float]") -> float:
        """Max elementwise gap after sorting both; inf on length mismatch."""
        a = sorted(self.values, reverse=True)
        b = sorted(other, reverse=True)
        if len(a) != len(b):
            return math.inf
        return max((abs(x - y) for x, y in zip(a, b)), default=0.0)


def spectrum_from_values(values: Iterable[float], tol: float = DEFAULT_TOL) -> Spectrum:
    return Spectrum(tuple(sorted((float(x) for x in values), reverse=True)), tol)


def eigenvalues(g: SignedGraph, tol: float = DEFAULT_TOL) -> Spectrum:
    if tol <= 0:
        raise ValueError("tol must be positive")
    values, _ = jacobi_eigh(adjacency_matrix(g), tol)
    return Spectrum(tuple(float(x) for x in values), tol)


def cycle_spectrum_closed_form(n: int, sign: int) -> Spectrum:
    """Spectrum of the signed cycle on ``n`` vertices with cycle sign ``sign``.

    Positive: ``2 cos(2 r pi / n)``; negative: ``2 cos((2 r + 1) pi / n)``,
    for ``r = 0..n-1``.
    """
    if n < 3:
        raise GraphError(f"a cycle needs n >= 3, got {n}")
    if sign not in (-1, 1):
        raise GraphError(f"sign must be -1 or +1, got {sign}")
    offset = 0 if sign == 1 else 1
    return spectrum_from_values(2 * math.cos((2 * r + offset) * math.pi / n) for r in range(n))


# -- exact integer polynomials (coefficient tuples, lowest degree first) --


def _trim(c: list[int]) -> tuple[int, ...]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def poly_scale(a: Sequence[int], k: int) -> tuple[int, ...]:
    return _trim([k * x for x in a])


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_shift(a: Sequence[int], k: int) -> tuple[int, ...]:
    """Multiply by ``x**k``."""
    return _trim([0] * k + list(a))


def poly_from_factors(*factors: Sequence[int]) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for f in factors:
        out = poly_mul(out, f)
    return out


@dataclass(frozen=True)
class CharPoly:
    """Exact characteristic polynomial ``det(xI - A) = sum coeffs[k] x**k``."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = (str(mag) if mag != 1 or k == 0 else "") + mono
            terms.append(("-" if c < 0 else "+") + " " + body)
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def char_poly(g: SignedGraph) -> CharPoly:
    """Characteristic polynomial by the Faddeev-LeVerrier recurrence.

    ``M_0 = 0``; ``M_k = A M_{k-1} + c_{n-k+1} I``;
    ``c_{n-k} = -tr(A M_k) / k``.  All arithmetic is on Python integers, so
    the division is exact.
    """
    n = g.n
    a = [[0] * n for _ in range(n)]
    for u, v, s in g.edges:
        a[u][v] = a[v][u] = s
    rows = [[(j, a[i][j]) for j in range(n) if a[i][j]] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # m <- A m + c_{n-k+1} I
        new = [[0] * n for _ in range(n)]
        for i in range(n):
            row = new[i]
            for j, aij in rows[i]:
                mj = m[j]
                for t in range(n):
                    row[t] += aij * mj[t]
            row[i] += coeffs[n - k + 1]
        m = new
        trace = sum(aij * m[j][i] for i in range(n) for j, aij in rows[i])
        q, r = divmod(-trace, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier coefficient")
        coeffs[n - k] = q
    return CharPoly(tuple(coeffs))


def _cycles_through(g: SignedGraph, u: int) -> list[tuple[tuple[int, ...], int]]:
    """All simple cycles through ``u`` with their signs, each listed once."""
    out = []
    path = [u]
    on_path = {u}

    def extend(v, sign):
        for w in g.neighbors[v]:
            s = sign * g.sign(v, w)
            if w == u:
                # each cycle is seen in both directions; keep one
                if len(path) >= 3 and path[1] < path[-1]:
                    out.append((tuple(path), s))
            elif w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(w, s)
                path.pop()
                on_path.discard(w)

    extend(u, 1)
    return out


def char_poly_schwenk(g: SignedGraph, u: int) -> CharPoly:
    """Characteristic polynomial by Schwenk's expansion at vertex ``u``.

    ``phi(G) = x phi(G-u) - sum_{v~u} phi(G-u-v) - 2 sum_{Y through u} sign(Y) phi(G-Y)``.
    Subproblems recurse on induced subgraphs at their first vertex and are
    memoized (per call) on their relabeled edge list.
    """
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} outside [0, {g.n})")
    memo: dict[tuple, tuple[int, ...]] = {}

    def phi(h: SignedGraph, root: int) -> tuple[int, ...]:
        if h.n == 0:
            return (1,)
        key = (h.n, h.edges, root)
        if key in memo:
            return memo[key]
        rest = [v for v in range(h.n) if v != root]
        result = poly_shift(phi(induced_subgraph(h, rest), 0), 1)
        for v in h.neighbors[root]:
            sub = induced_subgraph(h, [w for w in rest if w != v])
            result = poly_add(result, poly_scale(phi(sub, 0), -1))
        for cycle, s in _cycles_through(h, root):
            drop = set(cycle)
            sub = induced_subgraph(h, [w for w in range(h.n) if w not in drop])
            result = poly_add(result, poly_scale(phi(sub, 0), -2 * s))
        memo[key] = result
        return result

    coeffs = list(phi(g, u))
    coeffs += [0] * (g.n + 1 - len(coeffs))
    return CharPoly(tuple(coeffs))


def interlacing_check(
    g: SignedGraph, verts: Iterable[int], tol: float = DEFAULT_TOL
) -> bool:
    """Whether the induced subgraph's spectrum interlaces that of ``g``.

    With host eigenvalues ``mu_1 >= ... >= mu_n`` and induced eigenvalues
    ``lam_1 >= ... >= lam_k``: ``mu_{n-k+i} <= lam_i <= mu_i`` up to
    ``2 * tol`` slack.
    """
    vs = sorted(set(verts))
    if not vs:
        raise GraphError("interlacing needs a nonempty vertex subset")
    mu = eigenvalues(g, tol).values
    lam = eigenvalues(induced_subgraph(g, vs), tol).values
    n, k = len(mu), len(lam)
    slack = 2 * tol
    return all(mu[n - k + i] - slack <= lam[i] <= mu[i] + slack for i in range(k))
