"""Test-input supply: named cubic graphs, random cubic graphs, unions.

Randomness is a fixed, portable algorithm so seeds reproduce anywhere:
every random draw comes from the splitmix64 stream of the seed, and the
half-edge shuffle is "stable-sort stubs by their 64-bit stream keys"
(attempt a uses stream positions [a*3n, (a+1)*3n)).
"""

from __future__ import annotations

from .errors import OddOrder, PartTooSmall, RetriesExhausted, UnknownName
from .graphs import Graph, build_graph

_MASK64 = (1 << 64) - 1


def splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step: returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def splitmix64_stream(seed: int, count: int, offset: int = 0) -> list[int]:
    """First ``count`` outputs of the seed's stream starting at ``offset``."""
    state = seed & _MASK64
    out = []
    for i in range(offset + count):
        state, z = splitmix64(state)
        if i >= offset:
            out.append(z)
    return out


def _complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _prism() -> Graph:
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)]
    return build_graph(6, edges)


def _cube() -> Graph:
    edges = [
        (u, u ^ (1 << b))
        for u in range(8)
        for b in range(3)
        if u < u ^ (1 << b)
    ]
    return build_graph(8, edges)


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, edges)


def lcf_graph(pattern: list[int], repeats: int) -> Graph:
    """Hamiltonian cubic graph from LCF notation: cycle plus chords."""
    n = len(pattern) * repeats
    edges = {(i, (i + 1) % n) if i < (i + 1) % n else ((i + 1) % n, i) for i in range(n)}
    for i in range(n):
        j = (i + pattern[i % len(pattern)]) % n
        edges.add((i, j) if i < j else (j, i))
    return build_graph(n, sorted(edges))


_CATALOG = {
    "K4": lambda: _complete(4),
    "K33": lambda: _complete_bipartite(3, 3),
    "PRISM": _prism,
    "CUBE": _cube,
    "PETERSEN": _petersen,
    "HEAWOOD": lambda: lcf_graph([5, -5], 7),
    "PAPPUS": lambda: lcf_graph([5, 7, -7, 7, -7, -5], 3),
    "DESARGUES": lambda: lcf_graph([5, -5, 9, -9], 5),
    "MOEBIUS_KANTOR": lambda: lcf_graph([5, -5], 8),
}

CATALOG_NAMES = tuple(_CATALOG)


def named(name: str) -> Graph:
    """Canonical labeled copy of a catalog graph (name is case-insensitive)."""
    key = name.upper().replace("-", "_").replace(",", "")
    if key == "K3_3":
        key = "K33"
    if key not in _CATALOG:
        raise UnknownName(f"unknown graph {name!r}; catalog: {', '.join(CATALOG_NAMES)}")
    return _CATALOG[key]()


def random_cubic(n: int, seed: int, max_retries: int = 10000) -> Graph:
    """Random simple cubic graph via the configuration model.

    Each attempt stable-sorts the 3n half-edges by fresh splitmix64 keys and
    pairs them consecutively; attempts with loops or parallel edges are
    rejected wholesale, so accepted graphs are uniform over labeled simple
    cubic graphs.  Deterministic per (n, seed).
    """
    if n < 4 or n % 2:
        raise OddOrder(f"order must be an even integer >= 4, got {n}")
    stubs = [v for v in range(n) for _ in range(3)]
    k = len(stubs)
    state = seed & _MASK64
    for _attempt in range(max_retries):
        keys = [0] * k
        for i in range(k):
            state, keys[i] = splitmix64(state)
        # Stable sort = deterministic tie-break by stub index.
        order = sorted(range(k), key=keys.__getitem__)
        edges = set()
        ok = True
        for t in range(0, k, 2):
            u, v = stubs[order[t]], stubs[order[t + 1]]
            if u == v:
                ok = False
                break
            e = (u, v) if u < v else (v, u)
            if e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return build_graph(n, sorted(edges))
    raise RetriesExhausted(f"no simple matching after {max_retries} attempts")


def disjoint_union(parts: list[Graph]) -> Graph:
    """Disjoint union with cumulative label offsets."""
    offset = 0
    edges = []
    for part in parts:
        edges.extend((u + offset, v + offset) for (u, v) in part.edges)
        offset += part.n
    return build_graph(offset, edges)


def cycles(partition: list[int]) -> Graph:
    """Disjoint union of cycles of the given lengths (each >= 3)."""
    for a in partition:
        if a < 3:
            raise PartTooSmall(f"cycle length {a} < 3")
    offset = 0
    edges = []
    for a in partition:
        edges.extend((offset + i, offset + (i + 1) % a) for i in range(a))
        offset += a
    return build_graph(offset, [(min(u, v), max(u, v)) for u, v in edges])
