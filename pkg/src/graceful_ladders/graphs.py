"""Ladder-family generators and graph products.

Vertices of two-rail families are named ``x1, y1, x2, y2, ...``; single-rail
families (paths, cycles) use ``x1 .. xn``.  The naming is normative: the
products rename ``(v, first) -> x_v`` and ``(v, second) -> y_v`` when the
right factor is a single edge, so ``cartesian_product(path(n), path(2))``
and ``build_family(Family.CLOSED_LADDER, n)`` compare equal as plain sets.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, NamedTuple, Optional, Sequence

import numpy as np

__all__ = [
    "Vertex",
    "Graph",
    "Family",
    "FamilySpec",
    "build_family",
    "path",
    "cycle",
    "cartesian_product",
    "strong_product",
    "max_degree",
    "is_regular",
    "parse_vertex",
]


class Vertex(NamedTuple):
    rail: str
    index: int

    def __str__(self) -> str:
        return f"{self.rail}{self.index}"


_VERTEX_RE = re.compile(r"^([xy])([1-9][0-9]*)$")


def parse_vertex(name: str) -> Hashable:
    """``"x12" -> Vertex("x", 12)``; other names are kept as plain strings."""
    m = _VERTEX_RE.match(name)
    if m is None:
        return name
    return Vertex(m.group(1), int(m.group(2)))


def vertex_key(v) -> tuple:
    """Natural sort key: x2 < x10, Vertex before arbitrary labels."""
    if isinstance(v, Vertex):
        return (0, v.rail, v.index, "")
    return (1, "", 0, str(v))


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph.

    Equality compares vertex sets and edge sets only; ``name``, ``family``
    and ``n`` are descriptive.
    """

    vertices: tuple
    edges: tuple
    """Endpoint pairs, each ordered by vertex position.  ``edge_array`` holds
    the same pairs as an ``(m, 2)`` array of vertex positions."""
    name: str = ""
    family: Optional["Family"] = None
    n: Optional[int] = None

    def __post_init__(self):
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            seen_v = set()
            dup = next(v for v in self.vertices if v in seen_v or seen_v.add(v))
            raise ValueError(f"duplicate vertex {dup}")
        edges = [e if type(e) is tuple else tuple(e) for e in self.edges]
        m = len(edges)
        try:
            iu = np.array([index[u] for u, _ in edges], dtype=np.int64)
            iv = np.array([index[v] for _, v in edges], dtype=np.int64)
        except KeyError as exc:
            raise ValueError(f"edge endpoint {exc.args[0]} is not a vertex") from None
        loops = np.flatnonzero(iu == iv)
        if loops.size:
            raise ValueError(f"self-loop at {edges[loops[0]][0]}")
        lo, hi = np.minimum(iu, iv), np.maximum(iu, iv)
        keys = lo * max(len(index), 1) + hi
        uniq, first, counts = np.unique(keys, return_index=True, return_counts=True)
        if uniq.size != m:
            u, v = edges[first[np.flatnonzero(counts > 1)[0]]]
            raise ValueError(f"parallel edge {u}-{v}")
        swap = (iu > iv).tolist()
        normalized = tuple((e[1], e[0]) if sw else e for e, sw in zip(edges, swap))
        object.__setattr__(self, "edges", normalized)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "edge_array", np.stack([lo, hi], axis=1).reshape(-1, 2))

    # -- structure -----------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def index_of(self, v) -> int:
        return self._index[v]

    def __contains__(self, v) -> bool:
        return v in self._index

    @cached_property
    def neighbor_indices(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edge_array.tolist():
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v) -> tuple:
        return tuple(self.vertices[j] for j in self.neighbor_indices[self._index[v]])

    def degree(self, v) -> int:
        return len(self.neighbor_indices[self._index[v]])

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.neighbor_indices], dtype=np.int64)

    def has_edge(self, u, v) -> bool:
        if u not in self._index or v not in self._index:
            return False
        return self._index[v] in self.neighbor_indices[self._index[u]]

    def edge_set(self) -> frozenset:
        return frozenset(frozenset(e) for e in self.edges)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {0}
        stack = [0]
        adj = self.neighbor_indices
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.vertices)

    def remove_edge(self, u, v) -> "Graph":
        target = frozenset((u, v))
        kept = tuple(e for e in self.edges if frozenset(e) != target)
        if len(kept) == len(self.edges):
            raise ValueError(f"no edge {u}-{v}")
        return Graph(self.vertices, kept, name=f"{self.name}-{u}{v}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edge_set() == other.edge_set()

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.edge_set()))

    def __repr__(self) -> str:
        return f"Graph({self.name!r}, order={self.order}, size={self.size})"


class Family(enum.Enum):
    PATH = "P"
    CYCLE = "C"
    CLOSED_LADDER = "L"
    OPEN_LADDER = "OL"
    SLANTING_LADDER = "SL"
    TRIANGULAR_LADDER = "TL"
    OPEN_TRIANGULAR_LADDER = "OTL"
    DIAGONAL_LADDER = "DL"
    OPEN_DIAGONAL_LADDER = "ODL"
    CIRCULAR_LADDER = "CL"

    @classmethod
    def from_code(cls, code: str) -> "Family":
        for fam in cls:
            if fam.value == code.upper() or fam.name == code.upper():
                return fam
        raise ValueError(f"unknown family {code!r}; expected one of {[f.value for f in cls]}")

    @property
    def min_n(self) -> int:
        return _MIN_N[self]

    @property
    def two_rail(self) -> bool:
        return self not in (Family.PATH, Family.CYCLE)


_MIN_N = {
    Family.PATH: 1,
    Family.CYCLE: 3,
    Family.CLOSED_LADDER: 2,
    Family.OPEN_LADDER: 2,
    Family.SLANTING_LADDER: 2,
    Family.TRIANGULAR_LADDER: 2,
    Family.OPEN_TRIANGULAR_LADDER: 2,
    Family.DIAGONAL_LADDER: 2,
    Family.OPEN_DIAGONAL_LADDER: 2,
    Family.CIRCULAR_LADDER: 3,
}

_DISPLAY = {
    Family.PATH: "P_{n}",
    Family.CYCLE: "C_{n}",
    Family.CLOSED_LADDER: "L_{n}",
    Family.OPEN_LADDER: "OL_{n}",
    Family.SLANTING_LADDER: "SL_{n}",
    Family.TRIANGULAR_LADDER: "TL_{n}",
    Family.OPEN_TRIANGULAR_LADDER: "O(TL_{n})",
    Family.DIAGONAL_LADDER: "DL_{n}",
    Family.OPEN_DIAGONAL_LADDER: "O(DL_{n})",
    Family.CIRCULAR_LADDER: "CL_{n}",
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family.from_code(self.family))
        if not isinstance(self.n, (int, np.integer)) or self.n < self.family.min_n:
            raise ValueError(
                f"{self.family.value}: n ≥ {self.family.min_n} required (got {self.n})"
            )

    @property
    def label(self) -> str:
        return _DISPLAY[self.family].format(n=self.n)


@lru_cache(maxsize=1024)
def _rails(n: int) -> tuple[tuple, tuple]:
    """1-based vertex lists for both rails (index 0 unused)."""
    xs = (None,) + tuple(Vertex("x", i) for i in range(1, n + 1))
    ys = (None,) + tuple(Vertex("y", i) for i in range(1, n + 1))
    return xs, ys


def _ladder_edges(family: Family, n: int, x: list, y: list) -> list[tuple[Vertex, Vertex]]:
    rails = [(x[i], x[i + 1]) for i in range(1, n)] + [(y[i], y[i + 1]) for i in range(1, n)]
    rungs = [(x[i], y[i]) for i in range(1, n + 1)]
    diag = [(x[i], y[i + 1]) for i in range(1, n)]
    anti = [(x[i + 1], y[i]) for i in range(1, n)]
    open_rungs = rungs[1:-1]

    if family is Family.CLOSED_LADDER:
        return rails + rungs
    if family is Family.OPEN_LADDER:
        return rails + open_rungs
    if family is Family.SLANTING_LADDER:
        return rails + diag
    if family is Family.TRIANGULAR_LADDER:
        return rails + rungs + diag
    if family is Family.OPEN_TRIANGULAR_LADDER:
        return rails + open_rungs + diag
    if family is Family.DIAGONAL_LADDER:
        return rails + rungs + diag + anti
    if family is Family.OPEN_DIAGONAL_LADDER:
        return rails + open_rungs + diag + anti
    if family is Family.CIRCULAR_LADDER:
        return rails + rungs + [(x[1], x[n]), (y[1], y[n])]
    raise ValueError(f"{family} is not a ladder family")


def build_family(spec: FamilySpec | Family | str, n: Optional[int] = None) -> Graph:
    """Build a family member; accepts a ``FamilySpec`` or ``(family, n)``."""
    if not isinstance(spec, FamilySpec):
        spec = FamilySpec(spec if isinstance(spec, Family) else Family.from_code(spec), n)
    fam, n = spec.family, spec.n
    x, y = _rails(n)
    if fam is Family.PATH:
        verts = x[1:]
        edges = [(x[i], x[i + 1]) for i in range(1, n)]
    elif fam is Family.CYCLE:
        verts = x[1:]
        edges = [(x[i], x[i + 1]) for i in range(1, n)] + [(x[1], x[n])]
    else:
        verts = [v for pair in zip(x[1:], y[1:]) for v in pair]
        edges = _ladder_edges(fam, n, x, y)
    return Graph(tuple(verts), tuple(edges), name=spec.label, family=fam, n=n)


def path(n: int) -> Graph:
    return build_family(Family.PATH, n)


def cycle(n: int) -> Graph:
    return build_family(Family.CYCLE, n)


def _is_single_edge(h: Graph) -> bool:
    return h.order == 2 and h.size == 1


def _product(g: Graph, h: Graph, strong: bool, symbol: str) -> Graph:
    if g.order == 0 or h.order == 0:
        raise ValueError("graph product needs nonempty factors")
    rename = _is_single_edge(h) and all(
        isinstance(v, Vertex) and v.rail == "x" for v in g.vertices
    )
    if rename:
        first, second = h.vertices

        def label(a, b):
            return Vertex("x" if b == first else "y", a.index)

    else:

        def label(a, b):
            return (a, b)

    verts = [label(a, b) for a in g.vertices for b in h.vertices]
    edges = []
    for a in g.vertices:
        for b1, b2 in h.edges:
            edges.append((label(a, b1), label(a, b2)))
    for a1, a2 in g.edges:
        for b in h.vertices:
            edges.append((label(a1, b), label(a2, b)))
        if strong:
            for b1, b2 in h.edges:
                edges.append((label(a1, b1), label(a2, b2)))
                edges.append((label(a1, b2), label(a2, b1)))
    return Graph(tuple(verts), tuple(edges), name=f"{g.name}{symbol}{h.name}")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; adjacency differs in exactly one coordinate."""
    return _product(g, h, strong=False, symbol="□")


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product: Cartesian adjacency plus both-coordinates-adjacent pairs."""
    return _product(g, h, strong=True, symbol="⊠")


def max_degree(g: Graph) -> int:
    if g.order == 0:
        raise ValueError("empty graph")
    return int(g.degrees.max())


def is_regular(g: Graph) -> Optional[int]:
    """Common degree if every vertex has the same degree, else ``None``."""
    if g.order == 0:
        return None
    degs = g.degrees
    return int(degs[0]) if bool((degs == degs[0]).all()) else None


def from_edges(edges: Iterable[Sequence], vertices: Optional[Iterable] = None, name: str = "") -> Graph:
    """Graph from an arbitrary edge list; vertices default to first-seen order."""
    edges = [tuple(e) for e in edges]
    if vertices is None:
        order: dict = {}
        for u, v in edges:
            order.setdefault(u, None)
            order.setdefault(v, None)
        vertices = list(order)
    return Graph(tuple(vertices), tuple(edges), name=name)
