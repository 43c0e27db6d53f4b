"""Reading and writing hypergraph documents.

Text form, one object per line, hand-writable:

    # comment lines start with '#'
    nodes: v1 v2 v3
    edge e1: v1 v2
    edge e2:

The nodes line is optional (missing means no nodes) and appears at most
once; every node referenced by an edge line must be declared.  The JSON
mirror is an object with a ``nodes`` array and an ``edges`` array of
``{"id": ..., "nodes": [...]}`` entries.  Serialization sorts everything,
so parse(serialize(h)) == h in both formats.
"""

from __future__ import annotations

import json
import re
from .core import Hypergraph, HypergraphError

_TOKEN = re.compile(r"\S+")


class ParseError(HypergraphError):
    """Document rejected; carries a 1-based line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


def parse(document: bytes | str) -> Hypergraph:
    """Parse either format, sniffed from the first non-blank character."""
    text = document.decode("utf-8") if isinstance(document, bytes) else document
    return parse_json(text) if text.lstrip()[:1] == "{" else parse_text(text)


def parse_text(text: str) -> Hypergraph:
    nodes: list[str] = []
    edges: dict[str, list[str]] = {}
    pending_refs: list[tuple[str, str, int, int]] = []  # edge, node, line, col
    saw_nodes_line = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(raw)]
        head, head_col = tokens[0]
        if head == "nodes:":
            if saw_nodes_line:
                raise ParseError("duplicate nodes line", lineno, head_col)
            saw_nodes_line = True
            for ident, col in tokens[1:]:
                if ident in nodes:
                    raise ParseError(f"duplicate node id {ident!r}", lineno, col)
                nodes.append(ident)
        elif head == "edge":
            if len(tokens) < 2 or not tokens[1][0].endswith(":") or tokens[1][0] == ":":
                raise ParseError(
                    "expected 'edge <id>:' followed by node ids", lineno, head_col
                )
            eid = tokens[1][0][:-1]
            if eid in edges:
                raise ParseError(f"duplicate edge id {eid!r}", lineno, tokens[1][1])
            edges[eid] = []
            for ident, col in tokens[2:]:
                if ident in edges[eid]:
                    raise ParseError(
                        f"duplicate node {ident!r} in edge {eid!r}", lineno, col
                    )
                edges[eid].append(ident)
                pending_refs.append((eid, ident, lineno, col))
        else:
            raise ParseError(
                f"expected 'nodes:' or 'edge', got {head!r}", lineno, head_col
            )
    known = set(nodes)
    for _eid, ident, lineno, col in pending_refs:
        if ident not in known:
            raise ParseError(f"unknown node id {ident!r}", lineno, col)
    incidence = {(v, e) for e, refs in edges.items() for v in refs}
    return Hypergraph(nodes, edges.keys(), incidence)


def parse_json(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    nodes = doc.get("nodes", [])
    edge_entries = doc.get("edges", [])
    if not isinstance(nodes, list) or not all(isinstance(v, str) for v in nodes):
        raise ParseError("'nodes' must be an array of strings")
    if len(set(nodes)) != len(nodes):
        raise ParseError("duplicate node id in 'nodes'")
    if not isinstance(edge_entries, list):
        raise ParseError("'edges' must be an array")
    edges: dict[str, list[str]] = {}
    for entry in edge_entries:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise ParseError("each edge must be an object with a string 'id'")
        eid = entry["id"]
        if eid in edges:
            raise ParseError(f"duplicate edge id {eid!r}")
        refs = entry.get("nodes", [])
        if not isinstance(refs, list) or not all(isinstance(v, str) for v in refs):
            raise ParseError(f"edge {eid!r}: 'nodes' must be an array of strings")
        for v in refs:
            if v not in nodes:
                raise ParseError(f"edge {eid!r}: unknown node id {v!r}")
        if len(set(refs)) != len(refs):
            raise ParseError(f"edge {eid!r}: duplicate node reference")
        edges[eid] = refs
    incidence = {(v, e) for e, refs in edges.items() for v in refs}
    return Hypergraph(nodes, edges.keys(), incidence)


def serialize(h: Hypergraph, fmt: str = "text") -> str:
    """Write h in canonical order (all ids sorted)."""
    if fmt == "text":
        lines = ["nodes: " + " ".join(sorted(h.nodes)) if h.nodes else "nodes:"]
        for e in sorted(h.edges):
            refs = " ".join(sorted(h.incident_nodes(e)))
            lines.append(f"edge {e}: {refs}" if refs else f"edge {e}:")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "nodes": sorted(h.nodes),
            "edges": [
                {"id": e, "nodes": sorted(h.incident_nodes(e))}
                for e in sorted(h.edges)
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def to_dot(h: Hypergraph) -> str:
    """Bipartite incidence graph in DOT: circles for nodes, boxes for edges."""
    lines = ["graph incidence {"]
    for v in sorted(h.nodes):
        lines.append(f'  "n:{v}" [label="{v}", shape=circle];')
    for e in sorted(h.edges):
        lines.append(f'  "e:{e}" [label="{e}", shape=box];')
    for v, e in sorted(h.incidence):
        lines.append(f'  "n:{v}" -- "e:{e}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
