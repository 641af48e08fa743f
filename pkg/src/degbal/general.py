"""Decomposition of arbitrary cubic graphs and the balanced/2-regular drivers.

Multi-component graphs split into two regimes: if some component is bigger
than K4/K3,3, peel it off and recurse on the rest with a statement chosen
by a parity table; if every component is K4 or K3,3, combine entries of
fixed per-component decomposition tables, pairing isomorphic components
into "perfectly balanced" (tuple, complemented tuple) couples.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .connected import (
    ExceptionKind,
    Statement,
    decompose_connected_traced,
    statement_modulus,
    target_profile,
)
from .errors import (
    ExceptionGraph,
    InternalStuck,
    NoSuchTuple,
    NotIsomorphicPair,
    ParityMismatch,
)
from .graphs import (
    Component,
    DegreeProfile,
    EdgeSubset,
    Graph,
    SmallClass,
    build_graph,
    classify_small,
    complement_within,
    connected_components,
    induced_on,
    profile_of,
    require_regular,
)

log = logging.getLogger(__name__)

CANONICAL_K4 = build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
CANONICAL_K33 = build_graph(6, [(i, 3 + j) for i in range(3) for j in range(3)])

# Edge subsets realizing each listed decomposition tuple of K4 / K3,3,
# as bitmasks over the canonical edge order.  Frozen from an exhaustive
# rank-order search (first witness); tests re-derive them from scratch.
_K4_BASE = {
    (0, 0, 0, 4): 0b000000,
    (0, 0, 2, 2): 0b000001,
    (0, 0, 4, 0): 0b001100,
    (0, 1, 2, 1): 0b000011,
    (0, 2, 2, 0): 0b001101,
    (0, 3, 0, 1): 0b001011,
}
_K33_BASE = {
    (0, 0, 0, 6): 0b000000000,
    (0, 0, 2, 4): 0b000000001,
    (0, 0, 4, 2): 0b000001010,
    (0, 0, 6, 0): 0b001010100,
    (0, 1, 2, 3): 0b000000011,
    (0, 1, 4, 1): 0b000001110,
    (0, 2, 2, 2): 0b000001011,
    (0, 3, 2, 1): 0b000011101,
    (0, 4, 0, 2): 0b000011011,
    (0, 4, 2, 0): 0b001011110,
    (1, 0, 3, 2): 0b000000111,
    (1, 1, 3, 1): 0b000001111,
}


def _close_under_reversal(base: dict, m: int) -> dict:
    """Add each tuple's reversal, realized as the complement of its entry."""
    table = dict(base)
    full = (1 << m) - 1
    for counts, bits in base.items():
        rev = tuple(reversed(counts))
        if rev not in table:
            table[rev] = bits ^ full
    return table


_K4_TABLE = _close_under_reversal(_K4_BASE, CANONICAL_K4.m)
_K33_TABLE = _close_under_reversal(_K33_BASE, CANONICAL_K33.m)

K4_TUPLES = tuple(sorted(_K4_TABLE))
K33_TUPLES = tuple(sorted(_K33_TABLE))


def k4_table(p: DegreeProfile) -> EdgeSubset:
    """Stored subset of the canonical K4 realizing p (listed tuples only)."""
    if p.counts not in _K4_TABLE:
        raise NoSuchTuple(f"K4 table has no entry for {p.counts}")
    return EdgeSubset(CANONICAL_K4.m, _K4_TABLE[p.counts])


def k33_table(p: DegreeProfile) -> EdgeSubset:
    """Stored subset of the canonical K3,3 realizing p (listed tuples only)."""
    if p.counts not in _K33_TABLE:
        raise NoSuchTuple(f"K3,3 table has no entry for {p.counts}")
    return EdgeSubset(CANONICAL_K33.m, _K33_TABLE[p.counts])


def detect_exception(g: Graph, s: Statement) -> ExceptionKind | None:
    """Provably undecomposable (graph, statement) pairs, by component census."""
    require_regular(g, 3)
    comps = connected_components(g)
    classes = [classify_small(c.graph) for c in comps]
    all_k4 = all(c is SmallClass.K4 for c in classes)
    if s is Statement.I and all_k4 and len(comps) == 1:
        return ExceptionKind.K4_I
    if s is Statement.I and all_k4 and len(comps) == 3:
        return ExceptionKind.THREE_K4_I
    if s is Statement.II and all_k4 and len(comps) == 2:
        return ExceptionKind.TWO_K4_II
    if s is Statement.III and len(comps) == 1 and classes[0] is SmallClass.K33:
        return ExceptionKind.K33_III
    return None


def _bipartition(g: Graph) -> tuple[list[int], list[int]]:
    """2-coloring of a connected bipartite graph, side of vertex 0 first."""
    color = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in color:
                color[w] = 1 - color[u]
                stack.append(w)
    sides = [v for v in range(g.n) if color[v] == 0], [v for v in range(g.n) if color[v] == 1]
    return sides


def realize_tuple_on(comp: Graph, cls: SmallClass, counts: tuple[int, ...]) -> EdgeSubset:
    """Map a table entry onto a concretely labeled K4 / K3,3 component."""
    if cls is SmallClass.K4:
        return k4_table(DegreeProfile(counts))  # any K4 labeling is canonical
    assert cls is SmallClass.K33
    canon = k33_table(DegreeProfile(counts))
    side0, side1 = _bipartition(comp)
    assert len(side0) == 3 and len(side1) == 3, "K3,3 must be 3+3 bipartite"
    relabel = {i: side0[i] for i in range(3)}
    relabel.update({3 + j: side1[j] for j in range(3)})
    pairs = [
        (relabel[u], relabel[v]) for (u, v) in canon.edges(CANONICAL_K33)
    ]
    return EdgeSubset.from_edges(comp, pairs)


def pair_perfectly_balanced(h1: Graph, h2: Graph, s: Statement) -> EdgeSubset:
    """(t',t',t',t') subset on h1 u h2 from a tuple and its complement.

    ``s`` names the statement whose target tuple (for the component order)
    goes on h1; its reversal, realized by complementing, goes on h2.
    """
    cls1, cls2 = classify_small(h1), classify_small(h2)
    if cls1 is not cls2 or cls1 not in (SmallClass.K4, SmallClass.K33):
        raise NotIsomorphicPair(f"cannot pair {cls1.value} with {cls2.value}")
    counts = target_profile(h1.n, s).counts
    a, b, c, d = counts
    if a + d != b + c:
        raise NoSuchTuple(f"{counts} is not balanceable (a+d != b+c)")
    sub1 = realize_tuple_on(h1, cls1, counts)
    sub2 = realize_tuple_on(h2, cls2, tuple(reversed(counts)))
    return EdgeSubset(h1.m + h2.m, sub1.bits | (sub2.bits << h1.m))


# Case-1 dispatch: (n mod 4, |H| mod 4, statement) ->
#   (statement for G-H, statement for H, complement H's subset, complement whole)
_CASE1 = {
    (0, 0, Statement.I): (Statement.II, Statement.II, True, False),
    (0, 0, Statement.II): (Statement.II, Statement.I, False, False),
    (0, 2, Statement.I): (Statement.IV, Statement.IV, True, False),
    (0, 2, Statement.II): (Statement.IV, Statement.III, True, False),
    (2, 0, Statement.III): (Statement.IV, Statement.II, True, False),
    (2, 0, Statement.IV): (Statement.IV, Statement.I, False, False),
    (2, 2, Statement.III): (Statement.II, Statement.IV, True, True),
    (2, 2, Statement.IV): (Statement.II, Statement.III, False, False),
}

# When G-H is exactly 2K4 the recursion would hit the statement-II
# exception; use its perfectly balanced (2,2,2,2) decomposition instead and
# solve H directly with the statement that completes the target.
_CASE1_2K4 = {
    (0, 0, Statement.I): Statement.I,
    (0, 0, Statement.II): Statement.II,
    (2, 2, Statement.III): Statement.III,
    (2, 2, Statement.IV): Statement.IV,
}


def decompose(g: Graph, s: Statement) -> EdgeSubset:
    """Spanning subgraph of any cubic g realizing target_profile(n, s)."""
    return decompose_traced(g, s)[0]


def decompose_traced(g: Graph, s: Statement) -> tuple[EdgeSubset, list[str], bool]:
    """decompose plus (branch trace, fallback_used)."""
    require_regular(g, 3)
    if g.n % 4 != statement_modulus(s):
        raise ParityMismatch(
            f"statement {s} needs n = 4t+{statement_modulus(s)}, got n={g.n}"
        )
    kind = detect_exception(g, s)
    if kind is not None:
        raise ExceptionGraph(kind)
    target = target_profile(g.n, s)
    if g.n == 0:
        return EdgeSubset.empty(0), ["empty"], False

    comps = connected_components(g)
    if len(comps) == 1:
        sub, trace = decompose_connected_traced(g, s)
        return sub, trace.branch, trace.fallback_used

    classes = [classify_small(c.graph) for c in comps]
    if all(cls in (SmallClass.K4, SmallClass.K33) for cls in classes):
        sub, trace = _case2(g, s, comps, classes)
        fallback = False
    else:
        sub, trace, fallback = _case1(g, s, comps, classes)

    achieved = profile_of(g, sub)
    if achieved != target:
        raise InternalStuck(f"achieved {achieved.counts}, target {target.counts}")
    return sub, trace, fallback


def _lift(host: Graph, part: Graph, to_host, subset: EdgeSubset) -> int:
    bits = 0
    for u, v in subset.edges(part):
        bits |= 1 << host.edge_index(to_host[u], to_host[v])
    return bits


def _case1(g: Graph, s: Statement, comps: list[Component], classes) -> tuple[EdgeSubset, list[str], bool]:
    """Peel off the first component larger than K4/K3,3 and recurse."""
    idx = next(i for i, cls in enumerate(classes) if cls is SmallClass.OTHER or cls is SmallClass.PRISM)
    comp = comps[idx]
    rest_vertices = [v for v in range(g.n) if v not in set(comp.vertices)]
    rest_graph, rest_map = induced_on(g, rest_vertices)
    key = (g.n % 4, comp.graph.n % 4, s)
    rest_stmt, h_stmt, compl_h, compl_whole = _CASE1[key]

    rest_is_2k4 = (
        key in _CASE1_2K4
        and rest_graph.n == 8
        and all(
            classify_small(c.graph) is SmallClass.K4
            for c in connected_components(rest_graph)
        )
    )
    fallback = False
    if rest_is_2k4:
        rest_comps = connected_components(rest_graph)
        paired = pair_perfectly_balanced(
            rest_comps[0].graph, rest_comps[1].graph, Statement.II
        )
        rest_sub = EdgeSubset(rest_graph.m, paired.bits)
        h_stmt, compl_h, compl_whole = _CASE1_2K4[key], False, False
        trace = [f"case1:rest=2K4-balanced,H={h_stmt.value}"]
    else:
        rest_sub, rest_trace, rest_fb = decompose_traced(rest_graph, rest_stmt)
        fallback |= rest_fb
        trace = [
            f"case1:rest={rest_stmt.value},H={h_stmt.value}"
            + ("~c" if compl_h else "")
            + ("|whole~c" if compl_whole else "")
        ]
        trace.extend(f"rest:{t}" for t in rest_trace)

    h_sub, h_trace = decompose_connected_traced(comp.graph, h_stmt)
    fallback |= h_trace.fallback_used
    if compl_h:
        h_sub = complement_within(comp.graph, h_sub)
    trace.extend(f"H:{t}" for t in h_trace.branch)

    bits = _lift(g, rest_graph, rest_map, rest_sub) | _lift(
        g, comp.graph, comp.to_host, h_sub
    )
    sub = EdgeSubset(g.m, bits)
    if compl_whole:
        sub = complement_within(g, sub)
    return sub, trace, fallback


def _pairs(items: list) -> list:
    assert len(items) % 2 == 0
    return [(items[i], items[i + 1]) for i in range(0, len(items), 2)]


def _case2_assignments(
    s: Statement, k4s: list[Component], k33s: list[Component]
) -> tuple[str, list[tuple[Component, SmallClass, tuple[int, ...]]]]:
    """Per-component tuples for graphs whose components are all K4 / K3,3.

    Isomorphic components pair up as (tuple, reversed tuple); the handful
    of leftover components get the explicit combination for the parity of
    (#K4, #K3,3).  Components carrying special tuples are the last of each
    kind in label order.
    """
    k, ell = len(k4s), len(k33s)
    out: list[tuple[Component, SmallClass, tuple[int, ...]]] = []

    def pair_up(comps: list[Component], cls: SmallClass, base: tuple[int, ...]) -> None:
        for c1, c2 in _pairs(comps):
            out.append((c1, cls, base))
            out.append((c2, cls, tuple(reversed(base))))

    def specials(comps: list[Component], cls: SmallClass, tuples: list[tuple[int, ...]]) -> None:
        assert len(comps) == len(tuples)
        for c, t in zip(comps, tuples):
            out.append((c, cls, t))

    K4, K33 = SmallClass.K4, SmallClass.K33
    pb_k4 = (0, 0, 2, 2)
    pb_k33 = (0, 1, 2, 3)

    if k % 2 == 0 and ell % 2 == 0:
        if s is Statement.I:
            pair_up(k4s, K4, pb_k4)
            pair_up(k33s, K33, pb_k33)
            return "case2(a):I:all-pairs", out
        if s is Statement.II:
            if ell > 0:
                pair_up(k4s, K4, pb_k4)
                pair_up(k33s[:-2], K33, pb_k33)
                specials(k33s[-2:], K33, [(2, 2, 2, 0), (0, 0, 2, 4)])
                return "case2(a):II:2xK33", out
            assert k >= 4
            pair_up(k4s[:-4], K4, pb_k4)
            specials(k4s[-4:], K4, [(2, 2, 0, 0), (1, 0, 3, 0), (0, 1, 2, 1), (0, 0, 0, 4)])
            return "case2(a):II:4xK4", out
    if k % 2 == 1 and ell % 2 == 1:
        pair_up(k4s[:-1], K4, pb_k4)
        pair_up(k33s[:-1], K33, pb_k33)
        if s is Statement.III:
            specials(k4s[-1:], K4, [(2, 2, 0, 0)])
            specials(k33s[-1:], K33, [(0, 1, 2, 3)])
            return "case2(b):III", out
        if s is Statement.IV:
            specials(k4s[-1:], K4, [(0, 0, 0, 4)])
            specials(k33s[-1:], K33, [(1, 2, 3, 0)])
            return "case2(b):IV", out
    if k % 2 == 0 and ell % 2 == 1:
        if s is Statement.III:
            if ell >= 3:
                pair_up(k4s, K4, pb_k4)
                pair_up(k33s[:-3], K33, pb_k33)
                specials(k33s[-3:], K33, [(0, 0, 2, 4), (2, 3, 0, 1), (2, 2, 2, 0)])
                return "case2(c):III:3xK33", out
            assert k >= 2
            pair_up(k4s[:-2], K4, pb_k4)
            specials(k4s[-2:], K4, [(0, 0, 0, 4), (1, 2, 1, 0)])
            specials(k33s, K33, [(2, 2, 2, 0)])
            return "case2(c):III:2xK4+K33", out
        if s is Statement.IV:
            pair_up(k4s, K4, pb_k4)
            pair_up(k33s[:-1], K33, pb_k33)
            specials(k33s[-1:], K33, [(0, 1, 2, 3)])
            return "case2(c):IV", out
    if k % 2 == 1 and ell % 2 == 0:
        if s is Statement.I:
            if ell == 0:
                assert k >= 5
                pair_up(k4s[:-5], K4, pb_k4)
                specials(
                    k4s[-5:],
                    K4,
                    [(0, 0, 0, 4), (0, 1, 2, 1), (1, 0, 3, 0), (2, 2, 0, 0), (2, 2, 0, 0)],
                )
                return "case2(d):I:5xK4", out
            pair_up(k4s[:-1], K4, pb_k4)
            pair_up(k33s[:-2], K33, pb_k33)
            specials(k4s[-1:], K4, [(0, 0, 0, 4)])
            specials(k33s[-2:], K33, [(2, 2, 2, 0), (2, 2, 2, 0)])
            return "case2(d):I:K4+2xK33", out
        if s is Statement.II:
            pair_up(k4s[:-1], K4, pb_k4)
            pair_up(k33s, K33, pb_k33)
            specials(k4s[-1:], K4, [(0, 0, 2, 2)])
            return "case2(d):II", out
    raise InternalStuck(f"no case-2 assignment for k={k}, l={ell}, s={s}")


def _case2(g: Graph, s: Statement, comps, classes) -> tuple[EdgeSubset, list[str]]:
    k4s = [c for c, cls in zip(comps, classes) if cls is SmallClass.K4]
    k33s = [c for c, cls in zip(comps, classes) if cls is SmallClass.K33]
    label, assignments = _case2_assignments(s, k4s, k33s)
    bits = 0
    for comp, cls, counts in assignments:
        sub = realize_tuple_on(comp.graph, cls, counts)
        bits |= _lift(g, comp.graph, comp.to_host, sub)
    return EdgeSubset(g.m, bits), [label]


@dataclass(frozen=True)
class DecompositionResult:
    """A decomposition plus everything needed to report and verify it."""

    statement: str
    subset: EdgeSubset
    target: DegreeProfile
    achieved: DegreeProfile
    max_deviation: Fraction
    branch_trace: tuple[str, ...]
    fallback_used: bool


def decompose_result(g: Graph, s: Statement) -> DecompositionResult:
    """decompose wrapped with profile and deviation bookkeeping."""
    sub, trace, fallback = decompose_traced(g, s)
    achieved = profile_of(g, sub) if g.n else DegreeProfile((0, 0, 0, 0))
    return DecompositionResult(
        statement=s.value,
        subset=sub,
        target=target_profile(g.n, s),
        achieved=achieved,
        max_deviation=achieved.max_deviation() if g.n else Fraction(0),
        branch_trace=tuple(trace),
        fallback_used=fallback,
    )


_BEST_EFFORT = {
    ExceptionKind.K4_I: Statement.II,
    ExceptionKind.THREE_K4_I: Statement.II,
    ExceptionKind.K33_III: Statement.IV,
}


def decompose_balanced(g: Graph) -> DecompositionResult:
    """Subgraph with every m(H,k) in {floor(n/4), ceil(n/4)} when possible.

    The three exception graphs (K4, K3,3, 3K4) get their best achievable
    decomposition instead: deviation exactly 1, 3/2, and 1 respectively.
    """
    require_regular(g, 3)
    s = Statement.I if g.n % 4 == 0 else Statement.III
    kind = detect_exception(g, s)
    if kind is None:
        inner = decompose_result(g, s)
        if inner.max_deviation > Fraction(1, 2):
            raise InternalStuck(f"balanced deviation {inner.max_deviation} > 1/2")
        return DecompositionResult(
            statement="BALANCED",
            subset=inner.subset,
            target=inner.target,
            achieved=inner.achieved,
            max_deviation=inner.max_deviation,
            branch_trace=(f"balanced:{s.value}",) + inner.branch_trace,
            fallback_used=inner.fallback_used,
        )
    best = _BEST_EFFORT[kind]
    inner = decompose_result(g, best)
    return DecompositionResult(
        statement="BALANCED",
        subset=inner.subset,
        target=inner.target,
        achieved=inner.achieved,
        max_deviation=inner.max_deviation,
        branch_trace=(f"exception:{kind.value}:best-effort:{best.value}",)
        + inner.branch_trace,
        fallback_used=inner.fallback_used,
    )


def decompose_two_regular(g: Graph) -> DecompositionResult:
    """Balanced spanning subgraph of a disjoint union of cycles.

    Bound on |m(H,k) - n/3|: 1 when n/3 is an odd integer, else 2/3; the
    two graphs 2C3 and 2C4 provably miss it and are rejected.
    """
    require_regular(g, 2)
    comps = connected_components(g)
    lengths = [c.graph.n for c in comps]
    if sorted(lengths) == [3, 3]:
        raise ExceptionGraph(ExceptionKind.TWO_C3)
    if sorted(lengths) == [4, 4]:
        raise ExceptionGraph(ExceptionKind.TWO_C4)
    n = g.n
    if n == 0:
        zero = DegreeProfile((0, 0, 0))
        return DecompositionResult(
            "TWO_REGULAR", EdgeSubset.empty(0), zero, zero, Fraction(0), ("empty",), False
        )

    third = Fraction(n, 3)
    bound = Fraction(1) if third.denominator == 1 and third.numerator % 2 == 1 else Fraction(2, 3)
    chosen = None
    for counts in _two_regular_candidates(n, bound):
        plan = _plan_arcs(lengths, counts[0], counts[1])
        if plan is not None:
            chosen = (counts, plan)
            break
    if chosen is None:
        log.warning("two-regular construction missed the bound on cycles %s", lengths)
        raise InternalStuck(f"no realizable balanced triple for cycles {lengths}")

    counts, (full, arcs, pads) = chosen
    subset = _build_two_regular(g, comps, full, arcs, pads)
    achieved = profile_of(g, subset)
    target = DegreeProfile(counts)
    if achieved != target or achieved.max_deviation() > bound:
        raise InternalStuck(
            f"two-regular build got {achieved.counts}, wanted {counts} within {bound}"
        )
    trace = (
        f"two-regular:full={full}",
        f"arcs={[(c, r) for c, r in arcs]}",
        f"pads={pads}",
    )
    return DecompositionResult(
        "TWO_REGULAR", subset, target, achieved, achieved.max_deviation(), trace, False
    )


def _two_regular_candidates(n: int, bound: Fraction):
    """Triples (n2, n1, n0): n1 even, all within bound of n/3, best first."""
    third = Fraction(n, 3)
    lo = -(-(third - bound).numerator // (third - bound).denominator)  # ceil
    lo = max(0, lo)
    hi = (third + bound).numerator // (third + bound).denominator  # floor
    cands = []
    for n2 in range(lo, hi + 1):
        for n1 in range(lo, hi + 1):
            if n1 % 2:
                continue
            n0 = n - n2 - n1
            if not (lo <= n0 <= hi):
                continue
            dev = max(abs(Fraction(c) - third) for c in (n2, n1, n0))
            if dev <= bound:
                cands.append(((n2, n1, n0), dev))
    cands.sort(key=lambda item: (item[1], item[0]))
    return [c for c, _ in cands]


def _plan_arcs(lengths: list[int], n2: int, n1: int):
    """Choose full cycles, up to two arcs, and isolated-edge padding.

    Returns (full_cycle_indices, [(cycle_index, twos)], pad_count) or None.
    A full cycle yields its length in 2-vertices; an arc of r+1 edges
    yields r 2-vertices and two 1-vertices; each pad edge yields two
    1-vertices among untouched stretches.
    """
    p = len(lengths)
    if p > 22:
        raise InternalStuck(f"too many cycle components ({p}) for plan search")
    for ones_from_arcs in (0, 2, 4):
        if ones_from_arcs > n1:
            continue
        pads = (n1 - ones_from_arcs) // 2
        for mask in range(1 << p):
            full = [i for i in range(p) if mask >> i & 1]
            r = n2 - sum(lengths[i] for i in full)
            if r < 0:
                continue
            free = [i for i in range(p) if not (mask >> i & 1)]
            arcs = _fit_arcs(lengths, free, r, ones_from_arcs // 2)
            if arcs is None:
                continue
            capacity = 0
            arc_cycles = {c: twos for c, twos in arcs}
            for i in free:
                if i in arc_cycles:
                    capacity += (lengths[i] - arc_cycles[i] - 2) // 2
                else:
                    capacity += lengths[i] // 2
            if pads <= capacity:
                return full, arcs, pads
    return None


def _fit_arcs(lengths: list[int], free: list[int], r: int, count: int):
    """Place exactly ``count`` arcs totalling r 2-vertices on free cycles."""
    if count == 0:
        return [] if r == 0 else None
    if r < count:  # each arc contributes at least one 2-vertex
        return None
    if count == 1:
        for c in free:
            if lengths[c] >= r + 2:
                return [(c, r)]
        return None
    assert count == 2
    for r1 in range(1, r):
        r2 = r - r1
        for c1 in free:
            if lengths[c1] < r1 + 2:
                continue
            for c2 in free:
                if c2 != c1 and lengths[c2] >= r2 + 2:
                    return [(c1, r1), (c2, r2)]
    return None


def _build_two_regular(g: Graph, comps, full, arcs, pads) -> EdgeSubset:
    """Materialize the plan into host edges."""
    pairs: list[tuple[int, int]] = []
    arc_map = {c: twos for c, twos in arcs}
    free_runs: list[list[int]] = []  # vertex runs available for pad edges
    for i, comp in enumerate(comps):
        order = _cycle_order(comp)
        a = len(order)
        if i in full:
            pairs.extend((order[j], order[(j + 1) % a]) for j in range(a))
        elif i in arc_map:
            edges_in_arc = arc_map[i] + 1
            pairs.extend((order[j], order[j + 1]) for j in range(edges_in_arc))
            free_runs.append(order[edges_in_arc + 1:])
        else:
            free_runs.append(order)
    remaining = pads
    for run in free_runs:
        j = 0
        while remaining and j + 1 < len(run):
            pairs.append((run[j], run[j + 1]))
            remaining -= 1
            j += 2
        if not remaining:
            break
    assert remaining == 0, "plan capacity check guaranteed enough pad room"
    return EdgeSubset.from_edges(g, pairs)


def _cycle_order(comp: Component) -> list[int]:
    """Host-labeled vertices of a cycle component in traversal order."""
    graph = comp.graph
    order = [0]
    prev = -1
    while True:
        nbrs = [w for w in graph.adjacency[order[-1]] if w != prev]
        nxt = min(nbrs) if len(order) == 1 else nbrs[0]
        if nxt == 0:
            break
        prev = order[-1]
        order.append(nxt)
    return [comp.to_host[v] for v in order]
