"""Command line interface: ``signed-estrada <command> ...``.

Exit codes: 0 success or confirmed claim, 1 refuted/inconclusive claim,
2 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import math
import sys
from typing import Sequence

from signed_estrada.core import GraphError, SignedGraph, has_pairing_property, is_balanced
from signed_estrada.estrada import (
    DEFAULT_TIE_TOL,
    balance_ratio,
    ee_from_moments,
    estrada_index,
    spectral_moments,
)
from signed_estrada.families import FamilySpec
from signed_estrada.io import format_signed_edge_list, graph_to_json, load_graph
from signed_estrada.spectra import DEFAULT_TOL, ConvergenceError, char_poly, eigenvalues
from signed_estrada.verify import CHECKS, DEFAULT_SEED, Settings, cycle_table, run_check

EXIT_OK, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2
DECIMALS = 9


def _fixed(value):
    """Round floats to ``DECIMALS`` places, recursively."""
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        return round(value, DECIMALS)
    if isinstance(value, dict):
        return {k: _fixed(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fixed(v) for v in value]
    return value


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{DECIMALS}f}" if math.isfinite(value) else ""
    if value is None:
        return ""
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(_fixed(value), separators=(",", ":"))
    return str(value)


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(x) for x in row])
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(_fixed(obj), indent=2) + "\n"


def _graph_from_args(args) -> SignedGraph:
    if (args.file is None) == (args.family is None):
        raise GraphError("give exactly one of FILE or --family")
    if args.family is not None:
        return FamilySpec.parse(args.family).build()
    return load_graph(args.file)


def analyze_graph(g: SignedGraph, kmax: int = 8, tol: float = DEFAULT_TOL) -> dict:
    spec = eigenvalues(g, tol)
    ok, zset = is_balanced(g)
    direct = estrada_index(g, tol)
    series = ee_from_moments(g)
    return {
        "graph": graph_to_json(g),
        "m": g.m,
        "spectrum": list(spec.values),
        "char_poly": {"coeffs_ascending": list(char_poly(g).coeffs), "text": str(char_poly(g))},
        "estrada": {
            "eigenvalues": direct.value,
            "moment_series": series.value,
            "series_terms": series.truncation,
            "series_error_bound": series.error_bound,
        },
        "moments": list(spectral_moments(g, kmax).moments),
        "balanced": ok,
        "switching_set": sorted(zset) if zset is not None else None,
        "pairing": has_pairing_property(g),
        "balance_ratio": balance_ratio(g, tol),
    }


def cmd_analyze(args) -> tuple[str, int]:
    if args.kmax < 0:
        raise GraphError("--kmax must be nonnegative")
    report = analyze_graph(_graph_from_args(args), args.kmax, args.tol)
    if args.format == "json":
        return _json(report), EXIT_OK
    rows = [
        ("n", report["graph"]["n"]),
        ("m", report["m"]),
        ("char_poly", report["char_poly"]["text"]),
        ("ee_eigenvalues", report["estrada"]["eigenvalues"]),
        ("ee_moment_series", report["estrada"]["moment_series"]),
        ("series_terms", report["estrada"]["series_terms"]),
        ("series_error_bound", report["estrada"]["series_error_bound"]),
        ("balanced", report["balanced"]),
        ("pairing", report["pairing"]),
        ("balance_ratio", report["balance_ratio"]),
    ]
    rows += [(f"eigenvalue_{i}", x) for i, x in enumerate(report["spectrum"])]
    rows += [(f"moment_{k}", x) for k, x in enumerate(report["moments"])]
    return _csv(["field", "value"], rows), EXIT_OK


def cmd_cycle_table(args) -> tuple[str, int]:
    rows = cycle_table(args.nmax, args.tol)
    if args.format == "json":
        return _json({"rows": rows}), EXIT_OK
    header = list(rows[0])
    return _csv(header, [[r[h] for h in header] for r in rows]), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    if args.list:
        return "".join(f"{name}\n" for name in sorted(CHECKS)), EXIT_OK
    if args.claim is None:
        raise GraphError("give a claim id or --list")
    settings = Settings(args.tol, args.tie_tol, args.guard_override, args.seed, args.trials)
    rep = run_check(args.claim, settings, args.nmin, args.nmax, args.maxprod)
    code = EXIT_OK if rep.confirmed else EXIT_REFUTED
    if args.format == "json":
        return _json(rep.to_dict(timing=args.timing)), code
    header = sorted({k for r in rep.instances for k in r})
    rows = [[rep.claim, rep.verdict] + [r.get(h) for h in header] for r in rep.instances]
    return _csv(["claim", "verdict"] + header, rows), code


def cmd_family(args) -> tuple[str, int]:
    g = FamilySpec.parse(args.spec).build()
    if args.edge_list:
        return format_signed_edge_list(g), EXIT_OK
    if args.format == "json":
        return _json(graph_to_json(g)), EXIT_OK
    return _csv(["u", "v", "sign"], g.edges), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigensolver tolerance")
    common.add_argument("--tie-tol", type=float, default=DEFAULT_TIE_TOL, help="EE comparison tolerance")
    common.add_argument("--guard-override", type=int, default=None, metavar="N",
                        help="raise the enumeration order guard")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--timing", action="store_true", help="include wall time in reports")

    parser = argparse.ArgumentParser(prog="signed-estrada", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="spectral report for one graph")
    p.add_argument("file", nargs="?", help="edge-list or JSON graph file")
    p.add_argument("--family", help='e.g. "kind=cycle n=5 sign=-1"')
    p.add_argument("--kmax", type=int, default=8, help="highest spectral moment to report")
    p.set_defaults(run=cmd_analyze)

    p = sub.add_parser("cycle-table", parents=[common], help="EE of positive and negative cycles")
    p.add_argument("--nmax", type=int, default=15)
    p.set_defaults(run=cmd_cycle_table)

    p = sub.add_parser("verify", parents=[common], help="check an extremal claim exhaustively")
    p.add_argument("claim", nargs="?")
    p.add_argument("--list", action="store_true", help="list claim ids")
    p.add_argument("--nmin", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--maxprod", type=int, help="largest part-size product for bipartite checks")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("family", parents=[common], help="export a named family member")
    p.add_argument("spec", help='e.g. "kind=pendant_cycle n=7 l=4 sign=-1"')
    p.add_argument("--edge-list", action="store_true", help="emit the text edge-list format")
    p.set_defaults(run=cmd_family)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = args.run(args)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except (ValueError, ConvergenceError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
