"""graph6 codec, plain edge-list text, and result-document rendering.

graph6 layout: N(n) prefix (one byte for n < 63, '~' plus three bytes for
63 <= n <= 258047), then the upper triangle of the adjacency matrix in
column-major order, packed into 6-bit groups offset by 63, zero-padded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, UnsupportedOrder
from .graphs import DegreeProfile, Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"
_MAX_ORDER = 258047


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 record (optionally header-prefixed)."""
    if isinstance(line, bytes):
        try:
            s = line.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"graph6 line is not ascii: {exc}") from None
    else:
        s = line
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("empty graph6 line")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise ParseError(f"character {ch!r} out of graph6 range 63..126")
        vals.append(o - 63)

    if vals[0] != 63:
        n = vals[0]
        body = vals[1:]
    else:
        if len(vals) >= 2 and vals[1] == 63:
            raise UnsupportedOrder("8-byte graph6 order prefix (n > 258047)")
        if len(vals) < 4:
            raise ParseError("truncated long-form order prefix")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        if n < 63:
            raise ParseError(f"non-canonical long-form prefix for n={n}")
        body = vals[4:]

    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise ParseError(f"expected {expect} data bytes for n={n}, got {len(body)}")

    bits = 0
    for v in body:
        bits = bits << 6 | v
    total = expect * 6
    pad = total - nbits
    if pad and bits & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits")

    edges = []
    pos = total - 1  # MSB-first within the packed stream
    for col in range(1, n):
        for row in range(col):
            if bits >> pos & 1:
                edges.append((row, col))
            pos -= 1
    return build_graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 line for g under its given labeling."""
    n = g.n
    if n > _MAX_ORDER:
        raise UnsupportedOrder(f"n={n} exceeds graph6 3-byte form")
    if n < 63:
        prefix = [n]
    else:
        prefix = [63, n >> 12 & 63, n >> 6 & 63, n & 63]

    nbits = n * (n - 1) // 2
    bits = 0
    for col in range(1, n):
        for row in range(col):
            bits = bits << 1 | (1 if g.has_edge(row, col) else 0)
    pad = (-nbits) % 6
    bits <<= pad
    groups = []
    for i in range(((nbits + pad) // 6) - 1, -1, -1):
        groups.append(bits >> (6 * i) & 63)
    return "".join(chr(v + 63) for v in prefix + groups)


def parse_edge_list(text: str) -> Graph:
    """Parse 'n m' header followed by m lines 'u v'."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"non-integer header {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(lines) - 1} lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"edge line must be 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer edge line {ln!r}") from None
    return build_graph(n, edges)


def format_rational(x: Fraction) -> str:
    """Exact rational as 'p/q', or just 'p' for integers."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    if "/" in s:
        p, q = s.split("/", 1)
        return Fraction(int(p), int(q))
    return Fraction(int(s))


@dataclass(frozen=True)
class ResultDocument:
    """Everything a decomposition run reports about one input graph."""

    input_name: str
    n: int
    statement: str                    # I / II / III / IV / BALANCED / TWO_REGULAR
    target_profile: DegreeProfile
    achieved_profile: DegreeProfile
    subgraph_edges: tuple[tuple[int, int], ...]
    max_deviation: Fraction
    branch_trace: tuple[str, ...]
    fallback_used: bool


_TSV_COLUMNS = (
    "input_name",
    "n",
    "statement",
    "target_profile",
    "achieved_profile",
    "max_deviation",
    "fallback_used",
    "branch_trace",
    "subgraph_edges",
)


def render_result(r: ResultDocument, format: str = "json") -> str:
    """Deterministic serialization; JSON keys in fixed order."""
    if format == "json":
        doc = {
            "input_name": r.input_name,
            "n": r.n,
            "statement": r.statement,
            "target_profile": list(r.target_profile.counts),
            "achieved_profile": list(r.achieved_profile.counts),
            "subgraph_edges": [list(e) for e in r.subgraph_edges],
            "max_deviation": format_rational(r.max_deviation),
            "branch_trace": list(r.branch_trace),
            "fallback_used": r.fallback_used,
        }
        return json.dumps(doc, separators=(",", ":"))
    if format == "tsv":
        row = {
            "input_name": r.input_name,
            "n": str(r.n),
            "statement": r.statement,
            "target_profile": ",".join(map(str, r.target_profile.counts)),
            "achieved_profile": ",".join(map(str, r.achieved_profile.counts)),
            "max_deviation": format_rational(r.max_deviation),
            "fallback_used": "true" if r.fallback_used else "false",
            "branch_trace": ";".join(r.branch_trace),
            "subgraph_edges": " ".join(f"{u}-{v}" for u, v in r.subgraph_edges),
        }
        header = "\t".join(_TSV_COLUMNS)
        return header + "\n" + "\t".join(row[c] for c in _TSV_COLUMNS)
    raise ValueError(f"unknown format {format!r}")


def parse_result_json(text: str) -> ResultDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad result JSON: {exc}") from None
    try:
        return ResultDocument(
            input_name=doc["input_name"],
            n=doc["n"],
            statement=doc["statement"],
            target_profile=DegreeProfile(tuple(doc["target_profile"])),
            achieved_profile=DegreeProfile(tuple(doc["achieved_profile"])),
            subgraph_edges=tuple((u, v) for u, v in doc["subgraph_edges"]),
            max_deviation=parse_rational(doc["max_deviation"]),
            branch_trace=tuple(doc["branch_trace"]),
            fallback_used=doc["fallback_used"],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"result document missing/invalid field: {exc}") from None
