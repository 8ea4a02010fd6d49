"""File formats: matrix JSON (decimal integer strings), graph JSON with an
optional undirected flag, instance JSON, and the minimal edge-list text format.
"""

from __future__ import annotations

import json

from .dag import Dag, topological_orientation
from .errors import DimensionMismatchError, ParseError
from .ghs import GhsInstance, build
from .intmat import IntMatrix


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise ParseError("booleans are not integers")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x, 10)
        except ValueError:
            raise ParseError(f"not a decimal integer: {x!r}") from None
    raise ParseError(f"expected an integer or decimal string, got {type(x).__name__}")


def parse_matrix_json(text: str) -> IntMatrix:
    """Array-of-arrays of decimal integer strings (plain ints also accepted)."""
    data = _load_json(text)
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ParseError("matrix file must be a non-empty array of arrays")
    try:
        return IntMatrix.from_rows([[_as_int(x) for x in row] for row in data])
    except DimensionMismatchError as exc:
        raise ParseError(str(exc)) from exc


def matrix_to_json(m: IntMatrix) -> str:
    return json.dumps([[str(x) for x in row] for row in m.entries], separators=(",", ":"))


def parse_graph_obj(obj) -> Dag:
    if not isinstance(obj, dict) or "n" not in obj:
        raise ParseError('graph object needs at least {"n": ..., "edges": [...]}')
    n = _as_int(obj["n"])
    raw_edges = obj.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError("graph edges must be a list of pairs")
    edges = []
    for pair in raw_edges:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"edge must be a pair, got {pair!r}")
        edges.append((_as_int(pair[0]), _as_int(pair[1])))
    if obj.get("undirected"):
        return topological_orientation(edges, n)
    return Dag(n, edges)


def parse_graph_json(text: str) -> Dag:
    """{"n": int, "edges": [[i, j], ...], "undirected": bool?}; undirected
    inputs are passed through the topological orientation."""
    return parse_graph_obj(_load_json(text))


def graph_to_json(g: Dag) -> str:
    return json.dumps(
        {"n": g.n, "edges": sorted([i, j] for i, j in g.edges)}, separators=(",", ":")
    )


def parse_instance_json(text: str) -> GhsInstance:
    """{"d": ["2", "5", "3"], "graph": {...graph JSON...}}."""
    obj = _load_json(text)
    if not isinstance(obj, dict) or "d" not in obj or "graph" not in obj:
        raise ParseError('instance file needs {"d": [...], "graph": {...}}')
    if not isinstance(obj["d"], list):
        raise ParseError("instance d must be a list")
    d = [_as_int(x) for x in obj["d"]]
    return build(d, parse_graph_obj(obj["graph"]))


def instance_to_json(inst: GhsInstance) -> str:
    return json.dumps(
        {
            "d": [str(x) for x in inst.d],
            "graph": {"n": inst.g.n, "edges": sorted([i, j] for i, j in inst.g.edges)},
        },
        separators=(",", ":"),
    )


def parse_edge_list(text: str) -> Dag:
    """Minimal text format: vertex count on line 1, then one 'i j' pair per line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge-list file")
    try:
        n = int(lines[0], 10)
    except ValueError:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        bits = ln.split()
        if len(bits) != 2:
            raise ParseError(f"expected 'i j', got {ln!r}")
        edges.append((_as_int(bits[0]), _as_int(bits[1])))
    return Dag(n, edges)
