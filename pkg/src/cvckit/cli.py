"""Command-line harness: file ingestion, solver dispatch, machine-readable
reports, seeded instance generation and benchmarking.

Instance file format (line oriented, 1-based vertex ids):

    c  free-form comment
    p cvc <n> <m>
    e <u> <v>          (m edge records)
    w <v> <weight>     (optional; missing weights default to 1.0)

Exit codes: 0 found/success, 1 infeasible (or a failed verification), 2 input
or resource error.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time

from .approx import approx_cvc
from .backend import HAVE_C_KERNEL, default_backend
from .errors import InputFormatError, ResourceLimitError
from .graph import Graph, dfs_tree
from .oracle import (
    brute_force,
    check_component_bound,
    cover_component_pairs,
    enumerate_connected_graphs,
    phi_prime_encode,
)
from .solver import SolveDiagnostics, count_cvc, find_cvc, solve_wcvc

EXIT_FOUND = 0
EXIT_INFEASIBLE = 1
EXIT_ERROR = 2


# ---------------------------------------------------------------- file format


def parse_graph_text(text: str):
    """Parse the instance format; returns (Graph, weights). Raises
    InputFormatError with a line number on any malformed record."""
    n = m = None
    edges = []
    seen_edges = set()
    weight_map = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None:
                raise InputFormatError("duplicate problem line", lineno)
            if len(tok) != 4 or tok[1] != "cvc":
                raise InputFormatError("problem line must be 'p cvc <n> <m>'", lineno)
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError:
                raise InputFormatError("non-integer n or m", lineno) from None
            if n < 0 or m < 0:
                raise InputFormatError("negative n or m", lineno)
        elif tok[0] == "e":
            if n is None:
                raise InputFormatError("edge before problem line", lineno)
            if len(tok) != 3:
                raise InputFormatError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise InputFormatError("non-integer endpoint", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputFormatError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise InputFormatError("self-loop", lineno)
            key = (u, v) if u < v else (v, u)
            if key in seen_edges:
                raise InputFormatError(f"duplicate edge {key[0]} {key[1]}", lineno)
            seen_edges.add(key)
            edges.append((u - 1, v - 1))
        elif tok[0] == "w":
            if n is None:
                raise InputFormatError("weight before problem line", lineno)
            if len(tok) != 3:
                raise InputFormatError("weight line must be 'w <v> <weight>'", lineno)
            try:
                v = int(tok[1])
                wv = float(tok[2])
            except ValueError:
                raise InputFormatError("malformed weight record", lineno) from None
            if not (1 <= v <= n):
                raise InputFormatError(f"vertex out of range 1..{n}", lineno)
            if wv < 0:
                raise InputFormatError("negative weight", lineno)
            if v in weight_map:
                raise InputFormatError(f"duplicate weight for vertex {v}", lineno)
            weight_map[v] = wv
        else:
            raise InputFormatError(f"unknown record type {tok[0]!r}", lineno)
    if n is None:
        raise InputFormatError("missing problem line")
    if len(edges) != m:
        raise InputFormatError(f"edge count mismatch: header says {m}, found {len(edges)}")
    weights = [weight_map.get(v + 1, 1.0) for v in range(n)]
    return Graph(n, edges), weights


def parse_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def serialize_graph(g: Graph, weights=None) -> str:
    lines = [f"p cvc {g.n} {g.m}"]
    for u, v in g.edges:
        lines.append(f"e {u + 1} {v + 1}")
    if weights is not None:
        for v, w in enumerate(weights):
            if w != 1.0:
                lines.append(f"w {v + 1} {w!r}")
    return "\n".join(lines) + "\n"


def gen_random(n: int, p: float, seed: int) -> str:
    """Seeded Erdos-Renyi instance; same arguments give byte-identical output."""
    if not 0.0 <= p <= 1.0:
        raise InputFormatError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return serialize_graph(Graph(n, edges))


# ------------------------------------------------------------------- reports


def _ledger_fields(diag: SolveDiagnostics) -> dict:
    peak = diag.peak()
    if peak is None:
        return {
            "enumerated": 0,
            "valid_splits": 0,
            "steiner_weight_sum": 0,
            "bound": 0,
            "z_size": 0,
            "calls": 0,
            "total_enumerated": 0,
        }
    return {
        "enumerated": peak.enumerated,
        "valid_splits": peak.valid_splits,
        "steiner_weight_sum": peak.steiner_weight_sum,
        "bound": peak.bound,
        "z_size": peak.z_size,
        "calls": len(diag.rounds),
        "total_enumerated": diag.total_enumerated,
    }


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report))
        return
    for key, value in report.items():
        if key == "ledger":
            parts = " ".join(f"{k}={v}" for k, v in value.items())
            print(f"ledger {parts}")
        elif key == "rows":
            for row in value:
                print(" ".join(f"{k}={v}" for k, v in row.items()))
        else:
            print(f"{key} {value}")


def _vertices_1based(vertices) -> list[int]:
    return sorted(v + 1 for v in vertices)


# ------------------------------------------------------------------ commands


def _cmd_decide(args) -> int:
    g, _ = parse_graph(args.input)
    diag = SolveDiagnostics()
    t0 = time.perf_counter()
    result = find_cvc(
        g, args.k, backend=args.backend, parallel=args.parallel,
        limit_cells=args.limit_cells, diagnostics=diag,
    )
    elapsed = (time.perf_counter() - t0) * 1000.0
    report = {"command": "decide", "k": args.k}
    if result is None:
        report["status"] = "INFEASIBLE"
    else:
        report["status"] = "FOUND"
        report["size"] = len(result)
        report["vertices"] = _vertices_1based(result)
    report["elapsed_ms"] = round(elapsed, 3)
    report["ledger"] = _ledger_fields(diag)
    _emit(report, args.json)
    return EXIT_FOUND if result is not None else EXIT_INFEASIBLE


def _cmd_weighted(args) -> int:
    g, weights = parse_graph(args.input)
    diag = SolveDiagnostics()
    t0 = time.perf_counter()
    sol = solve_wcvc(
        g, weights, args.k, backend=args.backend, parallel=args.parallel,
        limit_cells=args.limit_cells, diagnostics=diag,
    )
    elapsed = (time.perf_counter() - t0) * 1000.0
    report = {"command": "weighted", "k": args.k}
    if sol is None:
        report["status"] = "INFEASIBLE"
    else:
        report["status"] = "FOUND"
        report["size"] = sol.cardinality
        report["weight"] = sol.weight
        report["vertices"] = _vertices_1based(sol.vertices)
    report["elapsed_ms"] = round(elapsed, 3)
    report["ledger"] = _ledger_fields(diag)
    _emit(report, args.json)
    return EXIT_FOUND if sol is not None else EXIT_INFEASIBLE


def _cmd_count(args) -> int:
    g, _ = parse_graph(args.input)
    diag = SolveDiagnostics()
    t0 = time.perf_counter()
    count = count_cvc(
        g, args.k, backend=args.backend, parallel=args.parallel,
        limit_cells=args.limit_cells, diagnostics=diag,
    )
    elapsed = (time.perf_counter() - t0) * 1000.0
    report = {
        "command": "count",
        "k": args.k,
        "status": "FOUND",
        "count": str(count),
        "elapsed_ms": round(elapsed, 3),
        "ledger": _ledger_fields(diag),
    }
    _emit(report, args.json)
    return EXIT_FOUND


def _cmd_approx(args) -> int:
    g, _ = parse_graph(args.input)
    cover = approx_cvc(g)
    report = {
        "command": "approx",
        "status": "FOUND",
        "size": len(cover),
        "vertices": _vertices_1based(cover),
    }
    _emit(report, args.json)
    return EXIT_FOUND


def _cmd_oracle(args) -> int:
    g, weights = parse_graph(args.input)
    k = args.k if args.k is not None else g.n
    min_size, min_weight, count = brute_force(g, weights, k)
    report = {"command": f"oracle-{args.mode}", "k": k}
    feasible = count > 0
    if args.mode == "count":
        report["status"] = "FOUND"
        report["count"] = str(count)
        _emit(report, args.json)
        return EXIT_FOUND
    if not feasible:
        report["status"] = "INFEASIBLE"
        _emit(report, args.json)
        return EXIT_INFEASIBLE
    report["status"] = "FOUND"
    report["size"] = min_size
    if args.mode == "weighted":
        report["weight"] = min_weight
    _emit(report, args.json)
    return EXIT_FOUND


def _cmd_verify_bound(args) -> int:
    checked = 0
    violations = 0
    tight = 0
    for n in range(1, args.n + 1):
        for g in enumerate_connected_graphs(n):
            total, bound, holds = check_component_bound(g)
            checked += 1
            if not holds:
                violations += 1
            if total == bound:
                tight += 1
    report = {
        "command": "verify-bound",
        "status": "FOUND" if violations == 0 else "INFEASIBLE",
        "max_n": args.n,
        "graphs": checked,
        "violations": violations,
        "tight": tight,
    }
    _emit(report, args.json)
    return EXIT_FOUND if violations == 0 else EXIT_INFEASIBLE


def _cmd_phi_check(args) -> int:
    checked = 0
    collisions = 0
    for n in range(1, args.n + 1):
        for g in enumerate_connected_graphs(n):
            tree = dfs_tree(g, 0)
            codes = set()
            pairs = 0
            for mask, chosen in cover_component_pairs(g):
                v1 = {v for v in range(g.n) if mask >> v & 1}
                code = phi_prime_encode(g, tree, v1, chosen)
                codes.add((code.root_label, code.labels))
                pairs += 1
            checked += 1
            if len(codes) != pairs:
                collisions += pairs - len(codes)
    report = {
        "command": "phi-check",
        "status": "FOUND" if collisions == 0 else "INFEASIBLE",
        "max_n": args.n,
        "graphs": checked,
        "collisions": collisions,
    }
    _emit(report, args.json)
    return EXIT_FOUND if collisions == 0 else EXIT_INFEASIBLE


def _cmd_gen(args) -> int:
    text = gen_random(args.n, args.p, args.seed)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_FOUND


def _cmd_bench(args) -> int:
    text = gen_random(args.n, args.p, args.seed)
    g, _ = parse_graph_text(text)
    if args.backend == "both":
        backends = (["c"] if HAVE_C_KERNEL else []) + ["py"]
    elif args.backend == "auto":
        backends = [default_backend()]
    else:
        backends = [args.backend]
    rows = []
    for backend in backends:
        for k in range(args.k_min, args.k_max + 1):
            row = {"backend": backend, "k": k}
            try:
                samples = []
                last_diag = None
                for _ in range(args.reps):
                    diag = SolveDiagnostics()
                    t0 = time.perf_counter()
                    result = find_cvc(
                        g, k, backend=backend, parallel=args.parallel,
                        limit_cells=args.limit_cells, diagnostics=diag,
                    )
                    samples.append((time.perf_counter() - t0) * 1000.0)
                    last_diag = diag
                row["status"] = "FOUND" if result is not None else "INFEASIBLE"
                row["elapsed_ms"] = round(statistics.median(samples), 3)
                row.update(_ledger_fields(last_diag))
            except ResourceLimitError as exc:
                row["status"] = "ERROR"
                row["error"] = str(exc)
            rows.append(row)
    report = {
        "command": "bench",
        "status": "FOUND",
        "n": args.n,
        "p": args.p,
        "seed": args.seed,
        "rows": rows,
    }
    _emit(report, args.json)
    return EXIT_FOUND


# ----------------------------------------------------------------- argparse


def _add_solver_flags(p: argparse.ArgumentParser, with_k=True) -> None:
    p.add_argument("--input", required=True, help="instance file path")
    if with_k:
        p.add_argument("-k", type=int, required=True, help="cardinality budget")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--limit-cells", type=int, default=None,
                   help="cap on DP table cells (default: CVCKIT_LIMIT_CELLS or 2^28)")
    p.add_argument("--parallel", action="store_true",
                   help="enable the parallel split-enumeration mode")
    p.add_argument("--backend", choices=("auto", "c", "py"), default=None,
                   help="kernel backend (default: compiled when available)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cvckit",
                                 description="Connected vertex cover toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="find a connected vertex cover of size <= k")
    _add_solver_flags(p)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("weighted", help="minimum-weight connected vertex cover of size <= k")
    _add_solver_flags(p)
    p.set_defaults(func=_cmd_weighted)

    p = sub.add_parser("count", help="count connected vertex covers of size <= k")
    _add_solver_flags(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("approx", help="DFS-internal-nodes 2-approximation")
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("oracle", help="brute-force reference (small graphs only)")
    p.add_argument("mode", choices=("decide", "weighted", "count"))
    p.add_argument("--input", required=True)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify-bound",
                       help="exhaustively check the cover-components sum bound")
    p.add_argument("--n", type=int, default=5, help="max vertex count (exhaustive)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_bound)

    p = sub.add_parser("phi-check",
                       help="injectivity of the cover/components label encoding")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_phi_check)

    p = sub.add_parser("gen", help="seeded random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="per-k timing and work-ledger table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--limit-cells", type=int, default=None)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--backend", choices=("auto", "c", "py", "both"), default="auto")
    p.set_defaults(func=_cmd_bench)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (InputFormatError, ResourceLimitError, ValueError, OSError) as exc:
        report = {"command": args.command, "status": "ERROR", "error": str(exc)}
        _emit(report, getattr(args, "json", False))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
