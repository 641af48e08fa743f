#!/usr/bin/env python3
"""Regenerate the graph6 fixture corpus under tests/fixtures/.

Complete catalogs of connected cubic graphs are collected by seeded
configuration-model sampling with isomorphism dedup; completeness is
guaranteed by the known counts of connected cubic graphs per order
(1, 2, 5, 19, 85 for n = 4, 6, 8, 10, 12 -- OEIS A002851), so the loop
simply runs until every class has been seen.  Output files are sorted,
making regeneration byte-stable.
"""

from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from degbal.formats import encode_graph6
from degbal.gen import disjoint_union, named, random_cubic
from degbal.graphs import Graph, connected_components, shortest_cycle

KNOWN_CONNECTED_CUBIC = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def _triangle_counts(g: Graph) -> list[int]:
    per_vertex = [0] * g.n
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            per_vertex[a] += 1
            per_vertex[b] += 1
            per_vertex[c] += 1
    return per_vertex


def _invariant(g: Graph) -> tuple:
    cyc = shortest_cycle(g)
    return (
        g.n,
        g.m,
        len(cyc) if cyc else 0,
        tuple(sorted(_triangle_counts(g))),
    )


def isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism by backtracking over a BFS vertex order."""
    if g1.n != g2.n or g1.m != g2.m:
        return False

    order: list[int] = []
    seen = set()
    for start in range(g1.n):
        if start in seen:
            continue
        seen.add(start)
        queue = [start]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in g1.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)

    image = [-1] * g1.n
    used = [False] * g2.n

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        mapped_nbrs = [(w, image[w]) for w in g1.adjacency[v] if image[w] >= 0]
        for cand in range(g2.n):
            if used[cand]:
                continue
            if len(g2.adjacency[cand]) != len(g1.adjacency[v]):
                continue
            if any(not g2.has_edge(cand, img) for _, img in mapped_nbrs):
                continue
            # unmapped g1-neighbors need enough unused g2-neighbors later;
            # adjacency count check above plus exactness below suffices here
            image[v] = cand
            used[cand] = True
            if extend(k + 1):
                return True
            image[v] = -1
            used[cand] = False
        return False

    # adjacency must be preserved both ways; for equal edge counts a
    # homomorphic bijection is automatically an isomorphism
    return extend(0)


def collect_catalog(n: int, want: int) -> list[Graph]:
    found: list[Graph] = []
    invariants: list[tuple] = []
    seed = 1
    while len(found) < want:
        g = random_cubic(n, seed)
        seed += 1
        if len(connected_components(g)) != 1:
            continue
        inv = _invariant(g)
        if any(
            inv == invariants[i] and isomorphic(g, found[i]) for i in range(len(found))
        ):
            continue
        found.append(g)
        invariants.append(inv)
        if seed > 500_000:
            raise RuntimeError(f"catalog n={n}: stuck at {len(found)}/{want}")
    return found


def write_lines(path: Path, graphs: list[Graph], sort: bool = True) -> None:
    lines = [encode_graph6(g) for g in graphs]
    if sort:
        lines.sort()
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {path.name}: {len(lines)} graphs")


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    for n in (4, 6, 8, 10):
        graphs = collect_catalog(n, KNOWN_CONNECTED_CUBIC[n])
        write_lines(FIXTURES / f"connected_cubic_{n:02d}.g6", graphs)

    k4, k33, prism, cube = named("K4"), named("K33"), named("PRISM"), named("CUBE")
    unions = [
        disjoint_union([k4, k4]),
        disjoint_union([k4, k4, k4]),
        disjoint_union([k33, k33]),
        disjoint_union([k4, k33]),
        disjoint_union([k4, prism]),
        disjoint_union([k33, prism]),
        disjoint_union([prism, prism]),
        disjoint_union([k4, cube]),
    ]
    write_lines(FIXTURES / "unions_n_le_12.g6", unions, sort=False)

    catalog = [named(name) for name in (
        "K4", "K33", "PRISM", "CUBE", "PETERSEN", "HEAWOOD",
        "PAPPUS", "DESARGUES", "MOEBIUS_KANTOR",
    )]
    write_lines(FIXTURES / "named_catalog.g6", catalog, sort=False)

    twelves = []
    seed = 1
    while len(twelves) < 10:
        g = random_cubic(12, seed)
        seed += 1
        if len(connected_components(g)) == 1:
            twelves.append(g)
    write_lines(FIXTURES / "random_cubic_12.g6", twelves, sort=False)


if __name__ == "__main__":
    main()
