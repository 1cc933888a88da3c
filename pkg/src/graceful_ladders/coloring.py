"""Vertex colorings, induced edge labels and gracefulness checks.

A coloring ``f`` with palette ``{1..k}`` is graceful when it is a proper
vertex coloring and the induced labels ``|f(u) - f(v)|`` are a proper edge
coloring, i.e. the edges at every vertex carry pairwise distinct labels.

Two independent decision procedures live here:

* :func:`is_graceful` checks the definition directly (vectorised fast path,
  with an exhaustive violation scan on failure).
* :func:`check_closed_neighborhoods` together with
  :func:`check_midpoint_paths` is the local characterisation: distinct colors
  on every closed neighbourhood, and no 3-vertex path ``x-y-z`` whose middle
  color is the mean of its ends (``2 f(y) == f(x) + f(z)``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .graphs import Graph, vertex_key

__all__ = [
    "VertexColoring",
    "ViolationKind",
    "Violation",
    "ValidationReport",
    "induced_edge_labels",
    "check_closed_neighborhoods",
    "check_midpoint_paths",
    "is_graceful",
    "reflect",
]


@dataclass(frozen=True)
class VertexColoring:
    """Palette size ``k`` plus an assignment ``vertex -> color``."""

    k: int
    colors: Mapping

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"palette size k must be ≥ 2 (got {self.k})")
        for v, c in self.colors.items():
            if not 1 <= c <= self.k:
                raise ValueError(f"color {c} of {v} outside [1, {self.k}]")
        object.__setattr__(self, "colors", dict(self.colors))

    def __getitem__(self, v) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def array_for(self, g: Graph) -> np.ndarray:
        """Colors in ``g.vertices`` order; raises ``KeyError`` naming a missing vertex."""
        out = np.empty(g.order, dtype=np.int64)
        for i, v in enumerate(g.vertices):
            try:
                out[i] = self.colors[v]
            except KeyError:
                raise KeyError(f"vertex {v} has no color") from None
        return out

    def restrict(self, g: Graph) -> "VertexColoring":
        return VertexColoring(self.k, {v: self.colors[v] for v in g.vertices})

    def used_colors(self) -> set[int]:
        return set(self.colors.values())


def reflect(f: VertexColoring) -> VertexColoring:
    """Palette reflection ``c -> k + 1 - c``; preserves every edge label."""
    return VertexColoring(f.k, {v: f.k + 1 - c for v, c in f.colors.items()})


class ViolationKind(str, enum.Enum):
    ADJACENT_SAME_COLOR = "AdjacentSameColor"
    CLOSED_NEIGHBORHOOD_REPEAT = "ClosedNeighborhoodRepeat"
    MIDPOINT_PATH = "MidpointPath"


@dataclass(frozen=True, order=False)
class Violation:
    kind: ViolationKind
    witness: tuple

    def sort_key(self):
        return (tuple(vertex_key(v) for v in self.witness), self.kind.value)

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "witness": [str(v) for v in self.witness]}


@dataclass(frozen=True)
class ValidationReport:
    graceful: bool
    violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "schema": "graceful/v1",
            "graceful": self.graceful,
            "violations": [v.to_json() for v in self.violations],
        }

    def kinds(self) -> set:
        return {v.kind for v in self.violations}


def _sorted(violations) -> list:
    return sorted(set(violations), key=Violation.sort_key)


def induced_edge_labels(g: Graph, f: VertexColoring) -> dict:
    """``{frozenset({u, v}): |f(u) - f(v)|}`` for every edge of ``g``.

    Labels are 0 on monochromatic edges; the caller decides what that means.
    """
    c = f.array_for(g)
    e = g.edge_array
    labels = np.abs(c[e[:, 0]] - c[e[:, 1]]) if len(e) else np.empty(0, dtype=np.int64)
    return {frozenset(edge): int(lab) for edge, lab in zip(g.edges, labels)}


def _edge_pair(u, v) -> tuple:
    return (u, v) if vertex_key(u) <= vertex_key(v) else (v, u)


def check_closed_neighborhoods(g: Graph, f: VertexColoring) -> list:
    """Every repeated color inside some ``N[v]``, as ``(v, a, b)`` witnesses."""
    c = f.array_for(g)
    out = []
    for i, v in enumerate(g.vertices):
        closed = (i,) + g.neighbor_indices[i]
        by_color: dict[int, list[int]] = {}
        for j in closed:
            by_color.setdefault(int(c[j]), []).append(j)
        for members in by_color.values():
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    pa, pb = g.vertices[members[a]], g.vertices[members[b]]
                    if members[a] != i and members[b] != i:
                        pa, pb = _edge_pair(pa, pb)
                    out.append(Violation(ViolationKind.CLOSED_NEIGHBORHOOD_REPEAT, (v, pa, pb)))
    return _sorted(out)


def check_midpoint_paths(g: Graph, f: VertexColoring) -> list:
    """Every path ``x-y-z`` with ``2 f(y) == f(x) + f(z)``, as ``(x, y, z)``."""
    c = f.array_for(g)
    out = []
    for j, y in enumerate(g.vertices):
        nb = g.neighbor_indices[j]
        twice = 2 * int(c[j])
        for a in range(len(nb)):
            for b in range(a + 1, len(nb)):
                if int(c[nb[a]]) + int(c[nb[b]]) == twice:
                    x, z = _edge_pair(g.vertices[nb[a]], g.vertices[nb[b]])
                    out.append(Violation(ViolationKind.MIDPOINT_PATH, (x, y, z)))
    return _sorted(out)


def _fast_graceful(g: Graph, c: np.ndarray, k: int) -> bool:
    e = g.edge_array
    if len(e) == 0:
        return True
    labels = np.abs(c[e[:, 0]] - c[e[:, 1]])
    if (labels == 0).any():
        return False
    # (endpoint, label) pairs must be unique across both edge ends
    ends = np.concatenate([e[:, 0], e[:, 1]])
    keys = ends * (k + 1) + np.concatenate([labels, labels])
    return np.unique(keys).size == keys.size


def _scan_violations(g: Graph, c: np.ndarray) -> list:
    out = []
    for i, j in g.edge_array:
        if c[i] == c[j]:
            u, v = _edge_pair(g.vertices[i], g.vertices[j])
            out.append(Violation(ViolationKind.ADJACENT_SAME_COLOR, (u, v)))
    for m, mid in enumerate(g.vertices):
        nb = g.neighbor_indices[m]
        for a in range(len(nb)):
            for b in range(a + 1, len(nb)):
                ca, cb, cm = int(c[nb[a]]), int(c[nb[b]]), int(c[m])
                if abs(ca - cm) != abs(cb - cm) or ca == cm:
                    # a zero label is already reported as an adjacent clash
                    continue
                x, z = _edge_pair(g.vertices[nb[a]], g.vertices[nb[b]])
                if ca == cb:
                    out.append(Violation(ViolationKind.CLOSED_NEIGHBORHOOD_REPEAT, (mid, x, z)))
                else:
                    out.append(Violation(ViolationKind.MIDPOINT_PATH, (x, mid, z)))
    return _sorted(out)


def is_graceful(g: Graph, f: VertexColoring) -> ValidationReport:
    """Decide gracefulness from the definition.

    On failure every offending edge or edge pair is reported. An incident
    label clash at ``y`` between ``xy`` and ``yz`` is classified as a
    closed-neighbourhood repeat when ``f(x) == f(z)`` and as a midpoint path
    otherwise.
    """
    c = f.array_for(g)
    if ((c < 1) | (c > f.k)).any():
        raise ValueError("color outside palette")
    if _fast_graceful(g, c, f.k):
        return ValidationReport(True, [])
    violations = _scan_violations(g, c)
    return ValidationReport(not violations, violations)
