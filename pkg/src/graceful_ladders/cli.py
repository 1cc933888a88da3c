"""Command line driver: ``graceful {gen,color,validate,solve,table,bench}``.

Exit codes: 0 success / graceful / feasible, 1 domain negative (not graceful,
infeasible, disagreement), 2 usage or schema error, 3 budget-inconclusive.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import time
from typing import Optional, Sequence

from .bounds import known_chi_g
from .coloring import is_graceful
from .constructions import construct
from .graphs import Family, FamilySpec, build_family
from .serialize import (
    SchemaError,
    coloring_from_json,
    coloring_to_json,
    dumps,
    graph_from_dot,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    load_json_file,
)
from .solver import (
    CapReached,
    SearchConfig,
    VertexOrder,
    certificate_from_result,
    graceful_chromatic_number,
    search,
    SearchInconclusive,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
MISSING = "—"

# instances of the reproduction grid, also the default bench set
ACCEPTANCE_GRID = (
    [("L", n) for n in range(2, 7)]
    + [("OL", n) for n in range(4, 7)]
    + [("SL", n) for n in range(4, 7)]
    + [("TL", n) for n in range(3, 7)]
    + [("OTL", 5)]
    + [("DL", 5), ("DL", 6)]
    + [("CL", n) for n in range(4, 9)]
)


class UsageError(Exception):
    pass


def _spec(family: str, n: int) -> FamilySpec:
    try:
        return FamilySpec(Family.from_code(family), n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_range(text: str) -> list[int]:
    """``"3..5" -> [3, 4, 5]``, ``"4" -> [4]``, ``"3,6..7" -> [3, 6, 7]``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad range {text!r}; use e.g. 3..5 or 4,6") from None
    return out


def _write(text: str, path: Optional[str]) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str):
    if path.endswith(".dot") or path.endswith(".gv"):
        with open(path, encoding="utf-8") as fh:
            return graph_from_dot(fh.read())
    return graph_from_json(load_json_file(path))


# -- commands -------------------------------------------------------------

def cmd_gen(args) -> int:
    g = build_family(_spec(args.family, args.n))
    text = graph_to_dot(g) if args.format == "dot" else dumps(graph_to_json(g))
    _write(text, args.output)
    return EXIT_OK


def cmd_color(args) -> int:
    spec = _spec(args.family, args.n)
    try:
        res = construct(spec)
    except ValueError as exc:
        raise UsageError(f"{exc}; use `solve` for this size") from None
    if args.format == "grid":
        _write(f"{spec.label}  k={res.claimed_chi_g}  ({res.source_case})\n{res.grid()}\n", args.output)
    else:
        doc = coloring_to_json(res.coloring, build_family(spec))
        doc.update(claimed_chi_g=res.claimed_chi_g, source_case=res.source_case, graph=spec.label)
        _write(dumps(doc), args.output)
    return EXIT_OK


def cmd_validate(args) -> int:
    try:
        g = _load_graph(args.graph)
        f = coloring_from_json(load_json_file(args.coloring), g)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = is_graceful(g, f)
    _write(dumps(report.to_json()), None)
    return EXIT_OK if report.graceful else EXIT_NEGATIVE


def _solve_config(args) -> SearchConfig:
    cfg = SearchConfig(
        k_max_cap=args.kmax,
        vertex_order=VertexOrder(args.order),
        node_budget=args.budget_nodes,
        time_budget=args.budget_secs,
        jobs=args.jobs,
    )
    return cfg.without_pruning() if args.no_prune else cfg


def _write_certs(certs, directory: Optional[str]) -> None:
    if not directory:
        return
    os.makedirs(directory, exist_ok=True)
    for cert in certs:
        name = f"{cert.graph_name}_k{cert.k}.json".replace("(", "").replace(")", "")
        with open(os.path.join(directory, name), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dumps(cert.to_json()))


def cmd_solve(args) -> int:
    if args.graph:
        try:
            g = _load_graph(args.graph)
        except (SchemaError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    elif args.family and args.n is not None:
        g = build_family(_spec(args.family, args.n))
    else:
        raise UsageError("give --family and --n, or --graph FILE")
    try:
        cfg = _solve_config(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    if args.k is not None:
        if args.k < 2:
            raise UsageError("--k must be ≥ 2")
        res = search(g, args.k, cfg)
        if res.status == "inconclusive":
            doc = {"schema": "graceful/v1", "graph": g.name, "k": args.k, "status": "inconclusive",
                   "nodes_expanded": res.nodes_expanded}
            _write(dumps(doc) if args.json else f"{g.name}: k={args.k} inconclusive\n", None)
            return EXIT_INCONCLUSIVE
        if res.status == "feasible":
            doc = {"schema": "graceful/v1", "graph": g.name, "k": args.k, "status": "feasible",
                   "nodes_expanded": res.nodes_expanded, "witness": coloring_to_json(res.coloring, g)}
            _write(dumps(doc) if args.json else f"{g.name}: graceful {args.k}-coloring found\n", None)
            return EXIT_OK
        cert = certificate_from_result(g, res, cfg)
        _write_certs([cert], args.cert_dir)
        doc = {"schema": "graceful/v1", "graph": g.name, "k": args.k, "status": "infeasible",
               "nodes_expanded": res.nodes_expanded, "certificate": cert.to_json()}
        _write(dumps(doc) if args.json else f"{g.name}: no graceful {args.k}-coloring (exhaustive)\n", None)
        return EXIT_NEGATIVE

    try:
        report = graceful_chromatic_number(g, cfg)
    except CapReached as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE if any(not r.completed for r in exc.records) else EXIT_NEGATIVE
    _write_certs(report.certificates, args.cert_dir)
    if args.json:
        _write(dumps(report.to_json(timing=args.timing)), None)
    else:
        lines = [f"{report.graph_name}: chi_g = {report.chi_g}"
                 + (" (upper bound only)" if report.inconclusive else "")]
        lines.append(f"  lower bound {report.lower_bound}; nodes {report.nodes_expanded_total}")
        for rec in report.infeasible_ks:
            state = "exhausted" if rec.completed else "INCONCLUSIVE"
            lines.append(f"  k={rec.k}: no coloring, {state}, {rec.nodes_expanded} nodes")
        lines.append("  witness: " + " ".join(f"{v}={c}" for v, c in report.witness.colors.items()))
        if args.timing:
            lines.append(f"  elapsed {report.elapsed:.3f}s")
        _write("\n".join(lines) + "\n", None)
    return EXIT_INCONCLUSIVE if report.inconclusive else EXIT_OK


def table_rows(families: Sequence[str], ns: Sequence[int], solve: bool, cfg: Optional[SearchConfig] = None):
    """Rows of ``(family, n, known, construction, solver, agree)``; missing values are ``None``."""
    rows = []
    for code in families:
        fam = Family.from_code(code)
        for n in ns:
            if n < fam.min_n:
                continue
            spec = FamilySpec(fam, n)
            kv = known_chi_g(spec)
            known = kv.chi_g if kv else None
            try:
                built = construct(spec).claimed_chi_g
            except ValueError:
                built = None
            solved = graceful_chromatic_number(build_family(spec), cfg or SearchConfig()).chi_g if solve else None
            present = [v for v in (known, built, solved) if v is not None]
            rows.append((fam.value, n, known, built, solved, len(set(present)) <= 1))
    return rows


def cmd_table(args) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    for code in families:
        try:
            Family.from_code(code)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    rows = table_rows(families, parse_range(args.n), args.solve)
    header = ["family", "n", "known", "construction"] + (["solver"] if args.solve else []) + ["agree"]
    fmt = lambda v: MISSING if v is None else str(v).lower() if isinstance(v, bool) else str(v)
    body = []
    for fam, n, known, built, solved, agree in rows:
        cells = [fam, n, known, built] + ([solved] if args.solve else []) + [agree]
        body.append([fmt(c) for c in cells])
    if args.format == "markdown":
        out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        out += ["| " + " | ".join(r) + " |" for r in body]
        text = "\n".join(out) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        text = buf.getvalue()
    _write(text, args.output)
    return EXIT_OK if all(r[-1] for r in rows) else EXIT_NEGATIVE


def cmd_bench(args) -> int:
    if args.families:
        instances = [(f.strip(), n) for f in args.families.split(",") for n in parse_range(args.n or "4..6")]
    else:
        instances = ACCEPTANCE_GRID
    cfg = SearchConfig(jobs=args.jobs)
    if args.no_prune:
        cfg = cfg.without_pruning()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["graph", "chi_g", "nodes", "seconds"])
    for code, n in instances:
        spec = _spec(code, n)
        g = build_family(spec)
        best = None
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            rep = graceful_chromatic_number(g, cfg)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        writer.writerow([spec.label, rep.chi_g, rep.nodes_expanded_total, f"{best:.4f}"])
    _write(buf.getvalue(), None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graceful", description="Graceful colorings of ladder graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a family graph as JSON or DOT")
    g.add_argument("--family", required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--format", choices=["json", "dot"], default="json")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("color", help="emit the closed-form optimal coloring")
    c.add_argument("--family", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=["json", "grid"], default="json")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("validate", help="check a coloring file against a graph file")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("solve", help="exact graceful chromatic number")
    s.add_argument("--family")
    s.add_argument("--n", type=int)
    s.add_argument("--graph", help="graph JSON or DOT file instead of --family/--n")
    s.add_argument("--k", type=int, help="single palette-size feasibility check")
    s.add_argument("--kmax", type=int, default=16)
    s.add_argument("--no-prune", action="store_true")
    s.add_argument("--order", choices=[o.value for o in VertexOrder], default="interleaved")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--budget-nodes", type=int)
    s.add_argument("--budget-secs", type=float)
    s.add_argument("--json", action="store_true")
    s.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte-identical output)")
    s.add_argument("--cert-dir", help="write one certificate file per exhausted k")
    s.set_defaults(func=cmd_solve)

    t = sub.add_parser("table", help="known values vs constructions (vs solver)")
    t.add_argument("--families", default="L,OL,SL,TL,OTL,DL,ODL,CL")
    t.add_argument("--n", default="2..8")
    t.add_argument("--solve", action="store_true")
    t.add_argument("--format", choices=["csv", "markdown"], default="csv")
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("bench", help="time the solver on a set of instances")
    b.add_argument("--families")
    b.add_argument("--n")
    b.add_argument("--repeat", type=int, default=1)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--no-prune", action="store_true")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchInconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
