"""Exact graceful chromatic number by depth-first backtracking.

Vertices are assigned in a fixed order with colors tried in ascending order.
Each vertex keeps a bitmask domain (bit ``c`` set means color ``c`` is still
allowed).  Assigning ``v = c`` forward-checks every unassigned vertex within
distance two of ``v``:

* neighbours lose ``c`` and every ``c ± L`` for labels ``L`` already present
  at ``v``, plus the midpoint of ``c`` and each colored neighbour of theirs;
* neighbours ``w`` of a colored neighbour ``u`` lose ``f(u) ± |c - f(u)|``;
* vertices at distance two lose ``c``.

A full assignment reached this way is graceful.  Budgets turn an unfinished
search into an explicit inconclusive outcome, never into "no coloring".
"""

from __future__ import annotations

import enum
import hashlib
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Callable, Iterator, Optional

from .bounds import best_lower_bound, extreme_color_set, NoGracefulColoring
from .coloring import VertexColoring, is_graceful, reflect
from .graphs import Graph, max_degree

__all__ = [
    "VertexOrder",
    "SearchConfig",
    "SearchResult",
    "SolveReport",
    "Certificate",
    "SearchInconclusive",
    "CapReached",
    "search",
    "find_graceful_coloring",
    "iter_graceful_colorings",
    "graceful_chromatic_number",
    "certify_infeasibility",
    "certificate_from_result",
    "replay_certificate",
    "graph_hash",
]

SCHEMA = "graceful/v1"


class VertexOrder(str, enum.Enum):
    INTERLEAVED = "interleaved"
    DEGREE_DESCENDING = "degree"


class SearchInconclusive(RuntimeError):
    """Budget ran out before the search finished."""

    def __init__(self, message: str, result: "SearchResult"):
        super().__init__(message)
        self.result = result


class CapReached(RuntimeError):
    """No graceful coloring with ``k <= k_max_cap``; carries the per-k records."""

    def __init__(self, message: str, records: list, certificates: list):
        super().__init__(message)
        self.records = records
        self.certificates = certificates


@dataclass(frozen=True)
class SearchConfig:
    k_min_override: Optional[int] = None
    k_max_cap: int = 16
    vertex_order: VertexOrder = VertexOrder.INTERLEAVED
    prune_extreme_colors: bool = True
    # False restricts the extreme-color rule to maximum-degree vertices
    prune_per_vertex_degree: bool = True
    symmetry_reflection: bool = True
    forward_checking: bool = True
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None
    jobs: int = 1

    def __post_init__(self):
        if self.k_max_cap < 2:
            raise ValueError("k_max_cap must be ≥ 2")
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be ≥ 1")
        object.__setattr__(self, "vertex_order", VertexOrder(self.vertex_order))

    def without_pruning(self) -> "SearchConfig":
        """Plain backtracking: no extreme-color rule, no symmetry cut, no forward checking."""
        return replace(
            self,
            prune_extreme_colors=False,
            symmetry_reflection=False,
            forward_checking=False,
        )

    def flags(self) -> dict:
        """Settings that shape the search tree (budgets and jobs excluded)."""
        return {
            "vertex_order": self.vertex_order.value,
            "prune_extreme_colors": self.prune_extreme_colors,
            "prune_per_vertex_degree": self.prune_per_vertex_degree,
            "symmetry_reflection": self.symmetry_reflection,
            "forward_checking": self.forward_checking,
        }

    def digest(self) -> str:
        return _sha256(self.flags())


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _sha256(obj) -> str:
    return hashlib.sha256(_canonical(obj).encode()).hexdigest()


def graph_hash(g: Graph) -> str:
    """Content hash of the vertex names and the (order-free) edge set."""
    edges = sorted(sorted((str(u), str(v))) for u, v in g.edges)
    return _sha256({"vertices": [str(v) for v in g.vertices], "edges": edges})


def vertex_order(g: Graph, order: VertexOrder) -> list[int]:
    idx = list(range(g.order))
    if VertexOrder(order) is VertexOrder.DEGREE_DESCENDING:
        degs = g.degrees
        idx.sort(key=lambda i: -int(degs[i]))
    return idx


@dataclass
class SearchResult:
    k: int
    status: str  # "feasible" | "infeasible" | "inconclusive"
    coloring: Optional[VertexColoring]
    nodes_expanded: int
    elapsed: float

    @property
    def completed(self) -> bool:
        return self.status != "inconclusive"


class _Budget(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, k: int, cfg: SearchConfig, first_colors=None):
        if k < 2:
            raise ValueError("k must be ≥ 2")
        self.g = g
        self.k = k
        self.cfg = cfg
        self.n = g.order
        self.nbrs = g.neighbor_indices
        self.order = vertex_order(g, cfg.vertex_order)
        ball = []
        dist2 = []
        for v in range(self.n):
            near = set(self.nbrs[v])
            two = set()
            for u in self.nbrs[v]:
                two.update(self.nbrs[u])
            two -= near
            two.discard(v)
            dist2.append(tuple(sorted(two)))
            ball.append(tuple(sorted(near | two)))
        self.dist2 = dist2
        self.ball = ball
        self.domains = self._initial_domains(first_colors)
        self.nodes = 0
        self.deadline = None
        self.stop_on_first = True
        self.on_solution: Optional[Callable] = None

    def _initial_domains(self, first_colors) -> list[int]:
        k = self.k
        full = (1 << (k + 1)) - 2
        doms = [full] * self.n
        if self.cfg.prune_extreme_colors and self.n:
            delta = max_degree(self.g)
            for v in range(self.n):
                d = len(self.nbrs[v])
                if d == 0 or (not self.cfg.prune_per_vertex_degree and d != delta):
                    continue
                try:
                    allowed = extreme_color_set(k, d)
                except NoGracefulColoring:
                    allowed = frozenset()
                doms[v] &= sum(1 << c for c in allowed)
        if self.n:
            first = self.order[0]
            if first_colors is not None:
                doms[first] &= sum(1 << c for c in first_colors)
            elif self.cfg.symmetry_reflection:
                half = math.ceil(k / 2)
                doms[first] &= (1 << (half + 1)) - 2
        return doms

    # -- propagation ---------------------------------------------------
    def _forward(self, v: int, c: int, col: list, dom: list) -> Optional[list]:
        nbrs = self.nbrs
        nd = dom[:]
        labels = []
        for u in nbrs[v]:
            cu = col[u]
            if cu:
                lab = c - cu if c > cu else cu - c
                labels.append(lab)
                rm = 1 << (cu + lab)
                if cu > lab:
                    rm |= 1 << (cu - lab)
                for w in nbrs[u]:
                    if not col[w]:
                        nd[w] &= ~rm
        bitc = 1 << c
        base = bitc
        for lab in labels:
            base |= 1 << (c + lab)
            if c > lab:
                base |= 1 << (c - lab)
        for w in nbrs[v]:
            if not col[w]:
                rm = base
                for u in nbrs[w]:
                    cu = col[u]
                    if cu and u != v:
                        s = c + cu
                        if not s & 1:
                            rm |= 1 << (s >> 1)
                nd[w] &= ~rm
        for w in self.dist2[v]:
            if not col[w]:
                nd[w] &= ~bitc
        for w in self.ball[v]:
            if not col[w] and not nd[w]:
                return None
        return nd

    def _consistent(self, v: int, c: int, col: list) -> bool:
        """Direct check of ``v = c`` against the colored vertices only."""
        nbrs = self.nbrs
        seen = set()
        for u in nbrs[v]:
            cu = col[u]
            if not cu:
                continue
            if cu == c:
                return False
            lab = abs(c - cu)
            if lab in seen:
                return False
            seen.add(lab)
            for w in nbrs[u]:
                if w != v and col[w] and abs(col[w] - cu) == lab:
                    return False
        return True

    # -- search --------------------------------------------------------
    def _tick(self):
        budget = self.cfg.node_budget
        if budget is not None and self.nodes > budget:
            raise _Budget("node budget exhausted")
        if self.deadline is not None and (self.nodes & 1023) == 0 and time.perf_counter() > self.deadline:
            raise _Budget("time budget exhausted")

    def _dfs(self, pos: int, col: list, dom: list) -> bool:
        if pos == self.n:
            stop = self.on_solution(col) if self.on_solution else True
            return stop
        v = self.order[pos]
        d = dom[v]
        fc = self.cfg.forward_checking
        while d:
            low = d & -d
            d ^= low
            c = low.bit_length() - 1
            self.nodes += 1
            self._tick()
            if fc:
                col[v] = c
                nd = self._forward(v, c, col, dom)
                if nd is not None and self._dfs(pos + 1, col, nd):
                    return True
            elif self._consistent(v, c, col):
                col[v] = c
                if self._dfs(pos + 1, col, dom):
                    return True
            col[v] = 0
        col[v] = 0
        return False

    def run(self, on_solution: Optional[Callable] = None) -> tuple[str, Optional[list]]:
        found: list = []

        def first(col):
            found.append(col[:])
            return True

        self.on_solution = on_solution or first
        if self.cfg.time_budget is not None:
            self.deadline = time.perf_counter() + self.cfg.time_budget
        col = [0] * self.n
        if any(d == 0 for d in self.domains):
            return ("infeasible", None)
        try:
            hit = self._dfs(0, col, self.domains)
        except _Budget:
            return ("inconclusive", None)
        if on_solution is not None:
            return ("infeasible" if not hit else "feasible", None)
        return ("feasible", found[0]) if hit else ("infeasible", None)

    def coloring_from(self, col: list) -> VertexColoring:
        return VertexColoring(self.k, {self.g.vertices[i]: col[i] for i in range(self.n)})


def _check_witness(g: Graph, f: VertexColoring) -> None:
    if not is_graceful(g, f).graceful or not is_graceful(g, reflect(f)).graceful:
        raise RuntimeError(f"solver produced a non-graceful witness for {g.name}")


def _search_single(g: Graph, k: int, cfg: SearchConfig, first_colors=None) -> SearchResult:
    t0 = time.perf_counter()
    s = _Search(g, k, cfg, first_colors)
    status, col = s.run()
    f = s.coloring_from(col) if col is not None else None
    if f is not None:
        _check_witness(g, f)
    return SearchResult(k, status, f, s.nodes, time.perf_counter() - t0)


def _first_vertex_colors(g: Graph, k: int, cfg: SearchConfig) -> list[int]:
    probe = _Search(g, k, replace(cfg, node_budget=None, time_budget=None))
    if not g.order:
        return []
    d = probe.domains[probe.order[0]]
    return [c for c in range(1, k + 1) if d >> c & 1]


def _search_parallel(g: Graph, k: int, cfg: SearchConfig) -> SearchResult:
    t0 = time.perf_counter()
    colors = _first_vertex_colors(g, k, cfg)
    if not colors:
        return SearchResult(k, "infeasible", None, 0, time.perf_counter() - t0)
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        futures = [pool.submit(_search_single, g, k, cfg, (c,)) for c in colors]
        results = [fut.result() for fut in futures]
    nodes = sum(r.nodes_expanded for r in results)
    elapsed = time.perf_counter() - t0
    for r in results:
        if r.status == "feasible":
            return SearchResult(k, "feasible", r.coloring, nodes, elapsed)
    if any(r.status == "inconclusive" for r in results):
        return SearchResult(k, "inconclusive", None, nodes, elapsed)
    return SearchResult(k, "infeasible", None, nodes, elapsed)


def search(g: Graph, k: int, cfg: Optional[SearchConfig] = None) -> SearchResult:
    """One feasibility search for palette size ``k``."""
    cfg = cfg or SearchConfig()
    if cfg.jobs > 1:
        return _search_parallel(g, k, cfg)
    return _search_single(g, k, cfg)


def find_graceful_coloring(g: Graph, k: int, cfg: Optional[SearchConfig] = None) -> Optional[VertexColoring]:
    """A graceful ``k``-coloring, or ``None`` after an exhaustive search.

    Raises :class:`SearchInconclusive` when a budget stops the search first.
    """
    res = search(g, k, cfg)
    if res.status == "inconclusive":
        raise SearchInconclusive(f"{g.name}, k={k}: budget exhausted after {res.nodes_expanded} nodes", res)
    return res.coloring


def iter_graceful_colorings(g: Graph, k: int, cfg: Optional[SearchConfig] = None) -> Iterator[VertexColoring]:
    """Every graceful ``k``-coloring reachable under ``cfg``, in search order.

    With ``symmetry_reflection`` on only one of each reflected pair is produced.
    """
    cfg = cfg or SearchConfig(symmetry_reflection=False)
    s = _Search(g, k, cfg)
    out: list = []

    def collect(col):
        out.append(s.coloring_from(col))
        return False

    status, _ = s.run(on_solution=collect)
    if status == "inconclusive":
        raise SearchInconclusive(f"{g.name}, k={k}: budget exhausted", SearchResult(k, status, None, s.nodes, 0.0))
    yield from out


@dataclass(frozen=True)
class Certificate:
    """Replayable record that an exhaustive search found no graceful ``k``-coloring."""

    graph_hash: str
    graph_name: str
    k: int
    vertex_order: tuple
    flags: dict
    config_hash: str
    nodes_expanded: int
    completed: bool = True

    def body(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "infeasibility-certificate",
            "graph_hash": self.graph_hash,
            "graph_name": self.graph_name,
            "k": self.k,
            "vertex_order": list(self.vertex_order),
            "flags": dict(self.flags),
            "config_hash": self.config_hash,
            "nodes_expanded": self.nodes_expanded,
            "completed": self.completed,
        }

    @property
    def content_hash(self) -> str:
        return _sha256(self.body())

    def to_json(self) -> dict:
        doc = self.body()
        doc["content_hash"] = self.content_hash
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "Certificate":
        if doc.get("schema") != SCHEMA or doc.get("kind") != "infeasibility-certificate":
            raise ValueError("not a graceful/v1 infeasibility certificate")
        cert = cls(
            graph_hash=doc["graph_hash"],
            graph_name=doc["graph_name"],
            k=int(doc["k"]),
            vertex_order=tuple(doc["vertex_order"]),
            flags=dict(doc["flags"]),
            config_hash=doc["config_hash"],
            nodes_expanded=int(doc["nodes_expanded"]),
            completed=bool(doc["completed"]),
        )
        if "content_hash" in doc and doc["content_hash"] != cert.content_hash:
            raise ValueError("certificate content hash mismatch")
        return cert


def certificate_from_result(g: Graph, res: SearchResult, cfg: SearchConfig) -> Certificate:
    """Wrap an exhausted search as a certificate."""
    if res.status != "infeasible":
        raise ValueError(f"cannot certify a {res.status} search")
    order = vertex_order(g, cfg.vertex_order)
    return Certificate(
        graph_hash=graph_hash(g),
        graph_name=g.name,
        k=res.k,
        vertex_order=tuple(str(g.vertices[i]) for i in order),
        flags=cfg.flags(),
        config_hash=cfg.digest(),
        nodes_expanded=res.nodes_expanded,
    )


def certify_infeasibility(g: Graph, k: int, cfg: Optional[SearchConfig] = None) -> Certificate:
    """Exhaust the search for ``k``; raise if a coloring exists or a budget runs out."""
    cfg = cfg or SearchConfig()
    res = search(g, k, cfg)
    if res.status == "inconclusive":
        raise SearchInconclusive(f"{g.name}, k={k}: budget exhausted, no certificate", res)
    if res.status == "feasible":
        raise ValueError(f"{g.name} has a graceful {k}-coloring; nothing to certify")
    return certificate_from_result(g, res, cfg)


def replay_certificate(g: Graph, cert: Certificate) -> bool:
    """Re-run the recorded search and compare graph, outcome and node count."""
    if graph_hash(g) != cert.graph_hash:
        return False
    cfg = SearchConfig(**cert.flags)
    if cfg.digest() != cert.config_hash:
        return False
    if tuple(str(g.vertices[i]) for i in vertex_order(g, cfg.vertex_order)) != cert.vertex_order:
        return False
    res = _search_single(g, cert.k, cfg)
    return res.status == "infeasible" and res.nodes_expanded == cert.nodes_expanded


@dataclass
class KRecord:
    k: int
    nodes_expanded: int
    completed: bool

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class SolveReport:
    graph_name: str
    graph_hash: str
    chi_g: int
    witness: VertexColoring
    lower_bound: int
    infeasible_ks: list = field(default_factory=list)
    certificates: list = field(default_factory=list)
    nodes_expanded_total: int = 0
    elapsed: float = 0.0
    inconclusive: bool = False
    mode: str = "single"
    flags: dict = field(default_factory=dict)

    def to_json(self, timing: bool = False) -> dict:
        doc = {
            "schema": SCHEMA,
            "kind": "solve-report",
            "graph": self.graph_name,
            "graph_hash": self.graph_hash,
            "chi_g": self.chi_g,
            "upper_bound_only": self.inconclusive,
            "lower_bound": self.lower_bound,
            "witness": {
                "k": self.witness.k,
                "colors": {str(v): c for v, c in self.witness.colors.items()},
            },
            "infeasible_ks": [r.to_json() for r in self.infeasible_ks],
            "certificates": [c.to_json() for c in self.certificates],
            "nodes_expanded_total": self.nodes_expanded_total,
            "mode": self.mode,
            "flags": self.flags,
        }
        if timing:
            doc["elapsed"] = round(self.elapsed, 6)
        return doc


def graceful_chromatic_number(g: Graph, cfg: Optional[SearchConfig] = None) -> SolveReport:
    """Smallest feasible ``k``, searching upward from the best lower bound.

    Each exhausted ``k`` contributes a certificate.  A ``k`` cut short by a
    budget is recorded with ``completed=False`` and the final value is then an
    upper bound only (``inconclusive=True``).
    """
    cfg = cfg or SearchConfig()
    if g.order == 0:
        raise ValueError("empty graph")
    t0 = time.perf_counter()
    if g.size == 0:
        # a single vertex: any palette of size 2 works trivially
        f = VertexColoring(2, {v: 1 for v in g.vertices})
        return SolveReport(g.name, graph_hash(g), 2, f, 2, flags=cfg.flags())
    lb = max(best_lower_bound(g), cfg.k_min_override or 0, 2)
    records: list[KRecord] = []
    certs: list[Certificate] = []
    total = 0
    inconclusive = False
    for k in range(lb, cfg.k_max_cap + 1):
        res = search(g, k, cfg)
        total += res.nodes_expanded
        if res.status == "feasible":
            return SolveReport(
                graph_name=g.name,
                graph_hash=graph_hash(g),
                chi_g=k,
                witness=res.coloring,
                lower_bound=lb,
                infeasible_ks=records,
                certificates=certs,
                nodes_expanded_total=total,
                elapsed=time.perf_counter() - t0,
                inconclusive=inconclusive,
                mode="parallel" if cfg.jobs > 1 else "single",
                flags=cfg.flags(),
            )
        completed = res.status == "infeasible"
        records.append(KRecord(k, res.nodes_expanded, completed))
        if completed:
            certs.append(certificate_from_result(g, res, cfg))
        else:
            inconclusive = True
    raise CapReached(f"{g.name}: no graceful coloring with k ≤ {cfg.k_max_cap}", records, certs)
