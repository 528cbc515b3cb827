"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line; conftest prints them at the end of
the run, and ``python tests/test_acceptance.py`` prints them directly.
"""

import math
import time

import numpy as np

from signed_estrada.core import SignedGraph, adjacency_matrix, switch
from signed_estrada.enumeration import enumerate_signed, rank_levels
from signed_estrada.estrada import (
    J0,
    ee_from_moments,
    estrada_index,
    spectral_moments,
)
from signed_estrada.families import (
    bowtie_char_poly_formula,
    bowtie_ee_closed_form,
    diamond_char_poly_formula,
    diamond_ee_closed_form,
    make_bowtie_pendant,
    make_diamond_pendant,
    make_pendant_cycle,
)
from signed_estrada.spectra import CharPoly, char_poly, char_poly_schwenk, eigenvalues, spectrum_from_values
from signed_estrada.verify import Settings, cycle_table, run_check

RESULTS: list[str] = []

# n: (EE(C+), n*J0, EE(C-)) as printed, 7 decimals
PRINTED_CYCLE_TABLE = {
    3: (8.1248150, 6.8387561, 5.571899),
    4: (9.5243914, 9.1183414, 8.7127342),
    5: (11.4961863, 11.3979268, 11.2993665),
    6: (13.6967139, 13.6775122, 13.658309),
    7: (15.9602421, 15.9570975, 15.9533523),
    8: (18.2371256, 18.2366829, 18.2368574),
    9: (20.5163225, 20.5162683, 20.5163962),
    10: (22.7958591, 22.7958536, 22.7958491),
    11: (25.0754389, 25.0754390, 25.0754200),
    12: (27.3550237, 27.3550243, 27.3550195),
    13: (29.6346089, 29.6346097, 29.6345864),
    14: (31.9141942, 31.9141951, 31.9141892),
    15: (34.1937795, 34.1937804, 34.1937780),
}


def record(number: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_01_cycle_table():
    start = time.perf_counter()
    rows = cycle_table(15)
    elapsed = time.perf_counter() - start
    misses = []
    for row in rows:
        for col, printed in zip(("ee_positive", "n_j0", "ee_negative"), PRINTED_CYCLE_TABLE[row["n"]]):
            delta = row[col] - printed
            if abs(delta) > 1e-6:
                misses.append(f"n={row['n']} {col} {delta:+.2e}")
    ok = not misses and elapsed < 1.0 and len(rows) == 13
    record(1, ok, f"{39 - len(misses)}/39 values within 1e-6, {elapsed:.2f}s; off: {', '.join(misses) or 'none'}")


def test_criterion_02_j0():
    record(2, round(J0, 8) == 2.27958530, f"J0 = {J0:.10f}")


def test_criterion_03_fixture_spectra():
    square = make_pendant_cycle(5, 4, -1)
    pentagon = make_pendant_cycle(5, 5, -1)
    s3, s2, phi = math.sqrt(3), math.sqrt(2), (1 + math.sqrt(5)) / 2
    d1 = eigenvalues(square).distance(spectrum_from_values([s3, s2, 0, -s2, -s3]))
    d2 = eigenvalues(pentagon).distance(spectrum_from_values([phi, phi, 1 - phi, 1 - phi, -2]))
    ee1, ee2 = estrada_index(square).value, estrada_index(pentagon).value
    m1, m2 = spectral_moments(square, 5).moments, spectral_moments(pentagon, 5).moments
    # printed to two decimals; within one unit of the last printed place
    ok = (
        d1 < 1e-9 and d2 < 1e-9
        and abs(ee1 - 11.18) < 0.01 and abs(ee2 - 11.30) < 0.01
        and (m1[4], m2[4]) == (26, 30) and (m1[5], m2[5]) == (0, -10)
    )
    record(3, ok, f"spectra off by {max(d1, d2):.1e}; EE {ee1:.6f}, {ee2:.6f}; M4 {m1[4]} vs {m2[4]}; M5 {m1[5]} vs {m2[5]}")


def test_criterion_04_unicyclic_maximum():
    start = time.perf_counter()
    rep = run_check("unicyclic-max", nmin=4, nmax=7)
    elapsed = time.perf_counter() - start
    margins = [r["margin"] for r in rep.instances]
    ok = rep.confirmed and all(r["winner_is_expected"] for r in rep.instances) and min(margins) > 1e-6 and elapsed < 120
    record(4, ok, f"{rep.verdict} for n=4..7, smallest margin {min(margins):.3e}, {elapsed:.2f}s")


def test_criterion_05_bipartite_unicyclic_maximum():
    rep = run_check("pairing-unicyclic-max", nmin=4, nmax=8)
    ok = rep.confirmed and all(r["winner_is_expected"] for r in rep.instances)
    record(5, ok, f"{rep.verdict} for n=4..8, winners unique: {all(r['winner_classes'] == 1 for r in rep.instances)}")


def test_criterion_06_bicyclic_top_two():
    failures = []
    worst = 0.0
    for n in range(5, 9):
        cands = enumerate_signed(n, n + 1, unbalanced=True, pairing=True)
        levels, _ = rank_levels(cands, 3)
        first, second, rest = levels[0], levels[1], levels[2]
        if not (first.unique and second.unique):
            failures.append(f"n={n} tie at top")
        if CharPoly(first.classes[0].char_poly) != bowtie_char_poly_formula(n):
            failures.append(f"n={n} first polynomial")
        if CharPoly(second.classes[0].char_poly) != diamond_char_poly_formula(n):
            failures.append(f"n={n} second polynomial")
        if not first.value > second.value > rest.value:
            failures.append(f"n={n} ordering")
        e1 = abs(estrada_index(make_bowtie_pendant(n)).value - bowtie_ee_closed_form(n))
        e2 = abs(estrada_index(make_diamond_pendant(n)).value - diamond_ee_closed_form(n))
        worst = max(worst, e1, e2)
    ok = not failures and worst < 1e-9
    record(6, ok, f"n=5..8 top-two polynomials and ordering {'hold' if not failures else failures}; closed forms within {worst:.1e}")


def test_criterion_07_one_negative_bipartite():
    rep = run_check("one-negative-bipartite-max", maxprod=16)
    winners = [r for r in rep.instances if "m" in r]
    four = all(r["nonzero_eigenvalues"] == 4 for r in winners)
    formula = [r["published_formula_agrees"] for r in winners]
    ok = rep.confirmed and four
    record(
        7, ok,
        f"{rep.verdict} over {len(winners)} (m,n) pairs, four nonzero eigenvalues: {four}; "
        f"published spectrum formula agrees in {sum(formula)}/{len(formula)} (recorded only)",
    )


def test_criterion_08_oracles():
    rng = np.random.default_rng(8)
    worst_moment = 0.0
    worst_series = 0.0
    corpus = [g for n in range(1, 8) for m in range(n - 1, n + 2) if m >= 0 for g in enumerate_signed(n, m)]
    for g in corpus:
        ev = np.linalg.eigvalsh(adjacency_matrix(g).astype(float))
        for k, mk in enumerate(spectral_moments(g, 12).moments):
            worst_moment = max(worst_moment, abs(mk - float(np.sum(ev**k))) / (g.n * 2**k))
    schwenk_ok = True
    random_graphs = []
    for _ in range(200):
        n = int(rng.integers(1, 9))
        edges = [(u, v, int(rng.choice([-1, 1]))) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = SignedGraph(n, tuple(edges))
        random_graphs.append(g)
        reference = char_poly(g)
        schwenk_ok &= all(char_poly_schwenk(g, u) == reference for u in range(n))
    for g in corpus + random_graphs:
        res = ee_from_moments(g, 1e-9)
        worst_series = max(worst_series, abs(res.value - estrada_index(g).value) - 1e-9)
    ok = worst_moment < 1e-8 and schwenk_ok and worst_series <= 0
    record(
        8, ok,
        f"(a) {len(corpus)} graphs, worst scaled moment gap {worst_moment:.1e}; "
        f"(b) Schwenk = Faddeev-LeVerrier on 200 graphs: {schwenk_ok}; (c) series excess over 1e-9: {worst_series:.1e}",
    )


def test_criterion_09_property_suites():
    s = Settings()
    verdicts = {
        "negation": run_check("negation", s).verdict,
        "tree-order": run_check("tree-order", s, 4, 8).verdict,
        "interlacing": run_check("interlacing", s).verdict,
        "gap-bound": run_check("gap-bound", s, 3, 15).verdict,
        "cycle-index-order": run_check("cycle-index-order", s, 4, 8).verdict,
    }
    rng = np.random.default_rng(9)
    invariant = True
    for _ in range(100):
        n = int(rng.integers(2, 9))
        edges = [(u, v, int(rng.choice([-1, 1]))) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = SignedGraph(n, tuple(edges))
        h = switch(g, [v for v in range(n) if rng.random() < 0.5])
        invariant &= char_poly(g) == char_poly(h)
        invariant &= abs(estrada_index(g).value - estrada_index(h).value) < 1e-10
    ok = all(v == "confirmed" for v in verdicts.values()) and invariant
    summary = ", ".join(f"{k} {v}" for k, v in verdicts.items())
    record(9, ok, f"{summary}, switching invariance {invariant}")


def test_criterion_10_gap_trend():
    rows = cycle_table(20)
    gaps = {r["n"]: abs(r["ee_positive"] - r["ee_negative"]) for r in rows if r["n"] >= 10}
    ok = all(g < 1e-4 for g in gaps.values())
    record(10, ok, f"max |gap| over n=10..20 is {max(gaps.values()):.2e}")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass
    raise SystemExit(0 if all(line.startswith("PASS") for line in RESULTS) else 1)
