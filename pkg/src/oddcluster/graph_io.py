"""Read and write graphs: edge-list text, DIMACS, and JSON."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .graph import Edge, Graph, GraphError

FORMATS = ("edgelist", "dimacs")


def _int_pair(parts: list[str], context: str) -> Edge:
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise GraphError(f"bad {context} line: {' '.join(parts)!r}") from exc


def read_edgelist(text: str) -> Graph:
    """Parse "n m" header followed by m lines "u v" with 0-based vertices."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"bad header {lines[0]!r}, expected 'n m'")
    n, m = _int_pair(head, "header")
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        edges.append(_int_pair(parts, "edge"))
    return Graph(n, edges)


def format_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def read_dimacs(text: str) -> Graph:
    """Parse DIMACS: a "p edge n m" header plus "e u v" lines (1-based)."""
    n = None
    m = 0
    edges: list[Edge] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphError(f"bad problem line {line!r}")
            n, m = _int_pair(parts[2:], "problem")
        elif parts[0] == "e":
            if n is None:
                raise GraphError("edge line before problem line")
            if len(parts) != 3:
                raise GraphError(f"bad edge line {line!r}")
            u, v = _int_pair(parts[1:], "edge")
            edges.append((u - 1, v - 1))
        else:
            raise GraphError(f"unrecognized line {line!r}")
    if n is None:
        raise GraphError("missing 'p edge n m' line")
    if len(edges) != m:
        raise GraphError(f"expected {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_dimacs(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def graph_to_json(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_json(obj: Any) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphError("graph JSON must carry 'n' and 'edges'")
    n = obj["n"]
    edges = obj["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise GraphError("malformed graph JSON")
    pairs = []
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise GraphError(f"malformed edge entry {e!r}")
        pairs.append((e[0], e[1]))
    return Graph(n, pairs)


def load_graph(path: str | Path, fmt: str = "edgelist") -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc
    if fmt == "edgelist":
        return read_edgelist(text)
    if fmt == "dimacs":
        return read_dimacs(text)
    raise GraphError(f"unknown format {fmt!r}")


def save_graph(g: Graph, path: str | Path, fmt: str = "edgelist") -> None:
    if fmt == "edgelist":
        text = format_edgelist(g)
    elif fmt == "dimacs":
        text = format_dimacs(g)
    else:
        raise GraphError(f"unknown format {fmt!r}")
    Path(path).write_text(text, encoding="utf-8")


def load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON in {path}: {exc}") from exc
