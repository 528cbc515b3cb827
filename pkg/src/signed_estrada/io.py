"""Reading and writing signed graphs.

Text format::

    # optional comments
    n 3
    0 1 +
    1 2 -

Signs may be written ``+``, ``-``, ``+1``, ``-1`` or ``1``. JSON graphs are
``{"n": 3, "edges": [[0, 1, 1], [1, 2, -1]]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from signed_estrada.core import GraphError, SignedGraph

SIGN_TOKENS = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}


class ParseError(GraphError):
    def __init__(self, line: int | None, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"{what} must be an integer, got {token!r}") from None


def parse_signed_edge_list(text: str) -> SignedGraph:
    n = None
    edges: list[tuple[int, int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError(lineno, f"expected 'n <count>', got {line!r}")
            n = _int(tokens[1], "vertex count", lineno)
            if n < 0:
                raise ParseError(lineno, f"vertex count must be nonnegative, got {n}")
            continue
        if len(tokens) != 3:
            raise ParseError(lineno, f"expected 'u v sign', got {line!r}")
        u = _int(tokens[0], "vertex", lineno)
        v = _int(tokens[1], "vertex", lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise ParseError(lineno, f"vertex {x} out of range")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if tokens[2] not in SIGN_TOKENS:
            raise ParseError(lineno, f"sign must be one of + - +1 -1 1, got {tokens[2]!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key[0]}-{key[1]} (first on line {seen[key]})")
        seen[key] = lineno
        edges.append((u, v, SIGN_TOKENS[tokens[2]]))
    if n is None:
        raise ParseError(None, "missing 'n <count>' header")
    return SignedGraph(n, tuple(edges))


def format_signed_edge_list(g: SignedGraph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges]
    return "\n".join(lines) + "\n"


def graph_to_json(g: SignedGraph) -> dict:
    return {"n": g.n, "edges": [[u, v, s] for u, v, s in g.edges]}


def graph_from_json(data) -> SignedGraph:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.lineno, f"invalid JSON: {exc.msg}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError(None, "JSON graph needs keys 'n' and 'edges'")
    try:
        edges = tuple((int(u), int(v), int(s)) for u, v, s in data["edges"])
        return SignedGraph(int(data["n"]), edges)
    except (TypeError, ValueError) as exc:
        raise ParseError(None, f"bad JSON graph: {exc}") from None


def loads_graph(text: str) -> SignedGraph:
    """Parse either format, choosing JSON when the text starts with ``{``."""
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return parse_signed_edge_list(text)


def load_graph(path: str | Path) -> SignedGraph:
    return loads_graph(Path(path).read_text(encoding="utf-8"))
