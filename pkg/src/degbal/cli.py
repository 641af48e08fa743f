"""Batch front end: decompose, verify, oracle queries, fixture generation.

Exit codes: 0 success, 1 generic failure (including verify/batch failures),
2 exception graph, 3 parity mismatch, 4 parse error, 5 internal invariant
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import gen, oracle
from .connected import Statement
from .errors import (
    DegbalError,
    ExceptionGraph,
    InternalStuck,
    ParityMismatch,
    ParseError,
)
from .formats import (
    ResultDocument,
    encode_graph6,
    format_rational,
    parse_edge_list,
    parse_graph6,
    parse_result_json,
    render_result,
)
from .general import (
    DecompositionResult,
    decompose_balanced,
    decompose_result,
    decompose_two_regular,
)
from .graphs import DegreeProfile, EdgeSubset, Graph, connected_components, subgraph_degrees

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_EXCEPTION = 2
EXIT_PARITY = 3
EXIT_PARSE = 4
EXIT_INTERNAL = 5

EDGE_CAP_ENV = "BALANCE_EDGE_CAP"


@dataclass
class RunConfig:
    """Common knobs shared by the graph-consuming subcommands."""

    command: str
    input: str | None = None
    named: str | None = None
    statement: object = "balanced"      # Statement | "balanced" | "two-regular"
    format: str = "json"
    seed: int = 0
    edge_cap: int | None = None
    jobs: int = 1
    no_timing: bool = False

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


def _config(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        named=getattr(args, "named", None),
        statement=getattr(args, "statement", getattr(args, "statement_raw", "balanced")),
        format=getattr(args, "format", "json"),
        seed=getattr(args, "seed", 0),
        edge_cap=_resolve_edge_cap(getattr(args, "edge_cap", None)),
        jobs=getattr(args, "jobs", 1),
        no_timing=getattr(args, "no_timing", False),
    )


def _statement_arg(value: str):
    """'i'..'iv' | 'balanced' | 'two-regular' -> dispatch key."""
    key = value.strip().lower().replace("_", "-")
    romans = {"i": Statement.I, "ii": Statement.II, "iii": Statement.III, "iv": Statement.IV}
    if key in romans:
        return romans[key]
    if key in ("balanced", "two-regular"):
        return key
    raise argparse.ArgumentTypeError(
        f"statement must be i/ii/iii/iv/balanced/two-regular, got {value!r}"
    )


def _resolve_edge_cap(flag_value: int | None) -> int | None:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(EDGE_CAP_ENV)
    return int(env) if env else None


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graphs(cfg: RunConfig) -> list[tuple[str, Graph]]:
    """(display name, graph) pairs from --named, a file, or stdin."""
    if cfg.named:
        return [(cfg.named.lower(), gen.named(cfg.named))]
    if not cfg.input:
        raise ParseError("no input: pass --named NAME or --input PATH (or '-')")
    text = _read_text(cfg.input)
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty input")
    source = "stdin" if cfg.input == "-" else cfg.input
    if stripped[0].isdigit():
        return [(source, parse_edge_list(text))]
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            out.append((f"{source}:{lineno}", parse_graph6(line)))
        except (ParseError, DegbalError) as exc:
            raise ParseError(f"{source}:{lineno}: {exc}") from None
    return out


def _run_statement(g: Graph, statement) -> DecompositionResult:
    if statement == "balanced":
        return decompose_balanced(g)
    if statement == "two-regular":
        return decompose_two_regular(g)
    return decompose_result(g, statement)


def _document(name: str, g: Graph, res: DecompositionResult) -> ResultDocument:
    return ResultDocument(
        input_name=name,
        n=g.n,
        statement=res.statement,
        target_profile=res.target,
        achieved_profile=res.achieved,
        subgraph_edges=tuple(res.subset.edges(g)),
        max_deviation=res.max_deviation,
        branch_trace=res.branch_trace,
        fallback_used=res.fallback_used,
    )


def cmd_decompose(args) -> int:
    cfg = _config(args)
    graphs = _load_graphs(cfg)
    first = True
    for name, g in graphs:
        res = _run_statement(g, cfg.statement)
        doc = _document(name, g, res)
        text = render_result(doc, cfg.format)
        if cfg.format == "tsv" and not first:
            text = text.split("\n", 1)[1]  # keep one header per stream
        print(text)
        first = False
    return EXIT_OK


def cmd_verify(args) -> int:
    graphs = _load_graphs(_config(args))
    if len(graphs) != 1:
        print("verify expects exactly one graph", file=sys.stderr)
        return EXIT_FAIL
    name, g = graphs[0]
    doc = parse_result_json(_read_text(args.result))
    problems = []
    if doc.n != g.n:
        problems.append(f"order mismatch: document n={doc.n}, graph n={g.n}")
    try:
        for u, v in doc.subgraph_edges:
            g.edge_index(u, v)
    except KeyError:
        problems.append("subgraph edge not present in host graph (SizeMismatch)")
    if not problems:
        deg = subgraph_degrees(g, EdgeSubset.from_edges(g, doc.subgraph_edges))
        d = doc.achieved_profile.degree
        counts = [0] * (d + 1)
        for x in deg:
            counts[x] += 1
        recomputed = tuple(reversed(counts))
        if recomputed != doc.achieved_profile.counts:
            diffs = [
                f"degree {d - i}: document {a}, recomputed {b}"
                for i, (a, b) in enumerate(zip(doc.achieved_profile.counts, recomputed))
                if a != b
            ]
            problems.append("achieved profile mismatch: " + "; ".join(diffs))
        if recomputed != doc.target_profile.counts:
            problems.append(
                f"recomputed profile {recomputed} != target {doc.target_profile.counts}"
            )
        true_dev = DegreeProfile(recomputed).max_deviation()
        if true_dev != doc.max_deviation:
            problems.append(
                f"deviation mismatch: document {format_rational(doc.max_deviation)},"
                f" recomputed {format_rational(true_dev)}"
            )
    if problems:
        for p in problems:
            print(f"FAIL: {p}")
        return EXIT_FAIL
    print(f"PASS: {name} n={g.n} statement={doc.statement}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    cfg = _config(args)
    graphs = _load_graphs(cfg)
    if len(graphs) != 1:
        print("oracle expects exactly one graph", file=sys.stderr)
        return EXIT_FAIL
    name, g = graphs[0]
    cap = cfg.edge_cap
    if args.profile:
        counts = tuple(int(x) for x in args.profile.split(","))
        from .graphs import DegreeProfile

        witness = oracle.find_witness(g, DegreeProfile(counts), cap)
        doc = {
            "input_name": name,
            "n": g.n,
            "profile": list(counts),
            "achievable": witness is not None,
            "witness": [list(e) for e in witness.edges(g)] if witness else None,
        }
        print(json.dumps(doc, separators=(",", ":")))
        return EXIT_OK
    if args.min_deviation:
        doc = {
            "input_name": name,
            "n": g.n,
            "min_max_deviation": format_rational(oracle.min_max_deviation(g, cap)),
        }
        print(json.dumps(doc, separators=(",", ":")))
        return EXIT_OK
    report = oracle.achievable_profiles(g, cap)
    doc = {
        "input_name": name,
        "n": report.graph_order,
        "degree": report.degree,
        "edge_count": report.edge_count,
        "achievable_count": len(report.achievable),
        "achievable": [list(p.counts) for p in report.achievable],
        "min_max_deviation": format_rational(report.min_max_deviation),
        "witnesses": {
            ",".join(map(str, p.counts)): [list(e) for e in report.witness[p].edges(g)]
            for p in report.achievable
        },
    }
    print(json.dumps(doc, separators=(",", ":")))
    return EXIT_OK


def cmd_gen(args) -> int:
    graphs: list[Graph] = []
    if args.named:
        graphs.append(gen.named(args.named))
    elif args.cycles:
        graphs.append(gen.cycles([int(x) for x in args.cycles.split(",")]))
    elif args.union:
        graphs.append(gen.disjoint_union([gen.named(p) for p in args.union.split(",")]))
    elif args.random is not None:
        seed = args.seed
        produced = 0
        attempt = 0
        while produced < args.count:
            g = gen.random_cubic(args.random, seed + attempt)
            attempt += 1
            if args.connected and len(connected_components(g)) != 1:
                continue
            graphs.append(g)
            produced += 1
    else:
        print("gen needs one of --named/--random/--cycles/--union", file=sys.stderr)
        return EXIT_FAIL
    for g in graphs:
        print(encode_graph6(g))
    return EXIT_OK


def _batch_worker(task: tuple[int, str, str, str]) -> tuple[int, str, int, str, str, str]:
    index, name, line, statement_key = task
    g = parse_graph6(line)
    statement = _statement_arg(statement_key)
    start = time.perf_counter()
    try:
        res = _run_statement(g, statement)
        ms = int((time.perf_counter() - start) * 1000)
        return (
            index,
            name,
            g.n,
            "ok",
            format_rational(res.max_deviation),
            "true" if res.fallback_used else "false",
            ms,
        )
    except ExceptionGraph as exc:
        ms = int((time.perf_counter() - start) * 1000)
        return (index, name, g.n, f"exception:{exc.kind.value}", "-", "-", ms)
    except ParityMismatch:
        ms = int((time.perf_counter() - start) * 1000)
        return (index, name, g.n, "parity-mismatch", "-", "-", ms)
    except DegbalError as exc:
        ms = int((time.perf_counter() - start) * 1000)
        return (index, name, g.n, f"failed:{type(exc).__name__}", "-", "-", ms)


def cmd_batch(args) -> int:
    cfg = _config(args)
    statement_key = cfg.statement
    try:
        _statement_arg(statement_key)  # fail fast, before any workers spawn
    except argparse.ArgumentTypeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    text = _read_text(cfg.input)
    source = "stdin" if cfg.input == "-" else cfg.input
    tasks = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            parse_graph6(line)
        except DegbalError as exc:
            print(f"{source}:{lineno}: {exc}", file=sys.stderr)
            return EXIT_PARSE
        tasks.append((len(tasks), f"{source}:{lineno}", line, statement_key))

    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(_batch_worker, tasks, chunksize=8))
    else:
        rows = [_batch_worker(t) for t in tasks]
    rows.sort(key=lambda r: r[0])

    print("name\tn\tstatement\tstatus\tdeviation\tfallback_used\tms")
    ok = exceptions = skipped = failures = 0
    for _, name, n, status, dev, fb, ms in rows:
        if status == "ok":
            ok += 1
        elif status.startswith("exception:"):
            exceptions += 1
        elif status == "parity-mismatch":
            skipped += 1
        else:
            failures += 1
        ms_text = "-" if cfg.no_timing else str(ms)
        print(f"{name}\t{n}\t{statement_key}\t{status}\t{dev}\t{fb}\t{ms_text}")
    print(
        f"# total={len(rows)} ok={ok} exceptions={exceptions}"
        f" parity-skipped={skipped} failures={failures}"
    )
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degbal",
        description="Degree-balanced spanning subgraphs of cubic graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", "-i", help="graph6 lines or edge-list file; '-' for stdin")
        p.add_argument("--named", help="catalog graph name (k4, k33, prism, petersen, ...)")

    p = sub.add_parser("decompose", help="decompose graphs and emit result documents")
    add_input(p)
    p.add_argument("--statement", "-s", type=_statement_arg, default="balanced")
    p.add_argument("--format", "-f", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a result document against its graph")
    add_input(p)
    p.add_argument("--result", "-r", required=True, help="result JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive achievability report")
    add_input(p)
    p.add_argument("--profile", help="single profile query, e.g. 1,2,1,2")
    p.add_argument("--min-deviation", action="store_true")
    p.add_argument("--edge-cap", type=int, default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="emit graph6 fixtures")
    p.add_argument("--named")
    p.add_argument("--random", type=int, metavar="N")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--cycles", help="comma-separated cycle lengths")
    p.add_argument("--union", help="comma-separated catalog names")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("batch", help="decompose a graph6 corpus, TSV summary")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--statement", "-s", dest="statement_raw", default="balanced")
    p.add_argument("--jobs", "-j", type=int, default=1)
    p.add_argument(
        "--no-timing",
        action="store_true",
        help="emit '-' in the ms column for byte-stable output",
    )
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ExceptionGraph as exc:
        print(f"exception graph: {exc.kind.value}", file=sys.stderr)
        return EXIT_EXCEPTION
    except ParityMismatch as exc:
        print(f"parity mismatch: {exc}", file=sys.stderr)
        return EXIT_PARITY
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InternalStuck, AssertionError) as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except DegbalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
