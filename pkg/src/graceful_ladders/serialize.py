"""JSON and DOT documents for graphs and colorings.

Graph JSON::

    {"schema": "graceful/v1", "name": "L_3", "n": 3, "family": "L",
     "vertices": ["x1", "y1", ...], "edges": [["x1", "x2"], ...]}

Coloring JSON::

    {"schema": "graceful/v1", "k": 5, "colors": {"x1": 3, ...}}

Both graph formats preserve vertex order, edge order, name, family and ``n``.
"""

from __future__ import annotations

import json
import re
from typing import Optional

from .coloring import VertexColoring
from .graphs import Family, Graph, Vertex, parse_vertex

__all__ = [
    "SCHEMA",
    "SchemaError",
    "graph_to_json",
    "graph_from_json",
    "graph_to_dot",
    "graph_from_dot",
    "coloring_to_json",
    "coloring_from_json",
    "dumps",
    "load_json_file",
]

SCHEMA = "graceful/v1"


class SchemaError(ValueError):
    pass


def dumps(doc) -> str:
    """Stable JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load_json_file(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from None


def _check_schema(doc) -> None:
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    if doc.get("schema", SCHEMA) != SCHEMA:
        raise SchemaError(f"unsupported schema {doc.get('schema')!r}, expected {SCHEMA!r}")


def graph_to_json(g: Graph) -> dict:
    return {
        "schema": SCHEMA,
        "name": g.name,
        "n": g.n,
        "family": g.family.value if g.family is not None else None,
        "vertices": [str(v) for v in g.vertices],
        "edges": [[str(u), str(v)] for u, v in g.edges],
    }


def _family_or_none(code) -> Optional[Family]:
    if code is None:
        return None
    try:
        return Family.from_code(code)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def graph_from_json(doc) -> Graph:
    _check_schema(doc)
    try:
        names = doc["vertices"]
        edges = doc["edges"]
    except KeyError as exc:
        raise SchemaError(f"graph document lacks {exc.args[0]!r}") from None
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise SchemaError("'vertices' must be a list of strings")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e) for e in edges
    ):
        raise SchemaError("'edges' must be a list of [u, v] string pairs")
    try:
        return Graph(
            tuple(parse_vertex(v) for v in names),
            tuple((parse_vertex(u), parse_vertex(v)) for u, v in edges),
            name=doc.get("name") or "",
            family=_family_or_none(doc.get("family")),
            n=doc.get("n"),
        )
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def _dot_id(v) -> str:
    return '"' + str(v).replace('"', '\\"') + '"'


def graph_to_dot(g: Graph) -> str:
    """DOT text with one ``rank=same`` group per rail."""
    attrs = []
    if g.family is not None:
        attrs.append(f'family="{g.family.value}"')
    if g.n is not None:
        attrs.append(f"n={g.n}")
    lines = [f"graph {_dot_id(g.name)} {{"]
    if attrs:
        lines.append(f"  graph [{', '.join(attrs)}];")
    lines.append("  node [shape=circle];")
    for v in g.vertices:
        lines.append(f"  {_dot_id(v)};")
    for rail in ("x", "y"):
        members = [v for v in g.vertices if isinstance(v, Vertex) and v.rail == rail]
        if members:
            lines.append("  { rank=same; " + " ".join(_dot_id(v) + ";" for v in members) + " }")
    for u, v in g.edges:
        lines.append(f"  {_dot_id(u)} -- {_dot_id(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_QID = r'"((?:[^"\\]|\\.)*)"'
_HEADER = re.compile(r"^\s*graph\s+" + _QID + r"\s*\{\s*$")
_GRAPH_ATTR = re.compile(r"^\s*graph\s*\[(.*)\];\s*$")
_NODE = re.compile(r"^\s*" + _QID + r"\s*;\s*$")
_EDGE = re.compile(r"^\s*" + _QID + r"\s*--\s*" + _QID + r"\s*;\s*$")


def _unquote(s: str) -> str:
    return s.replace('\\"', '"')


def graph_from_dot(text: str) -> Graph:
    """Parse DOT produced by :func:`graph_to_dot` (not general DOT)."""
    lines = text.strip().splitlines()
    if not lines:
        raise SchemaError("empty DOT document")
    head = _HEADER.match(lines[0])
    if head is None or lines[-1].strip() != "}":
        raise SchemaError("expected 'graph \"name\" { ... }'")
    name = _unquote(head.group(1))
    family = n = None
    vertices, edges = [], []
    for line in lines[1:-1]:
        if m := _GRAPH_ATTR.match(line):
            for key, val in re.findall(r'(\w+)=("[^"]*"|\w+)', m.group(1)):
                val = val.strip('"')
                if key == "family":
                    family = _family_or_none(val)
                elif key == "n":
                    n = int(val)
        elif m := _EDGE.match(line):
            edges.append((parse_vertex(_unquote(m.group(1))), parse_vertex(_unquote(m.group(2)))))
        elif m := _NODE.match(line):
            vertices.append(parse_vertex(_unquote(m.group(1))))
        elif line.strip().startswith(("node", "{ rank=same")) or not line.strip():
            continue
        else:
            raise SchemaError(f"unrecognised DOT line: {line.strip()!r}")
    try:
        return Graph(tuple(vertices), tuple(edges), name=name, family=family, n=n)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def coloring_to_json(f: VertexColoring, g: Optional[Graph] = None) -> dict:
    keys = g.vertices if g is not None else list(f.colors)
    return {"schema": SCHEMA, "k": f.k, "colors": {str(v): f.colors[v] for v in keys}}


def coloring_from_json(doc, g: Optional[Graph] = None) -> VertexColoring:
    """Parse a coloring; with ``g`` given, the vertex sets must match exactly."""
    _check_schema(doc)
    k = doc.get("k")
    colors = doc.get("colors")
    if not isinstance(k, int) or not isinstance(colors, dict):
        raise SchemaError("coloring needs integer 'k' and object 'colors'")
    if not all(isinstance(c, int) and not isinstance(c, bool) for c in colors.values()):
        raise SchemaError("colors must be integers")
    assignment = {parse_vertex(name): c for name, c in colors.items()}
    if g is not None:
        missing = [str(v) for v in g.vertices if v not in assignment]
        extra = [str(v) for v in assignment if v not in g]
        if missing or extra:
            raise SchemaError(f"vertex sets differ: missing {missing}, unknown {extra}")
    try:
        return VertexColoring(k, assignment)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
