"""Core graph representation and the operations the constructions build on.

Vertices are always 0..n-1.  Edges are unordered pairs (u, v) with u < v,
kept sorted lexicographically; every edge subset is a bitmask over that
canonical edge order, so all downstream colorings are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import (
    DuplicateEdge,
    LoopEdge,
    NotConnected,
    NotRegular,
    SizeMismatch,
    VertexOutOfRange,
)


class SmallClass(Enum):
    """Connected cubic graphs on at most 6 vertices, plus everything else."""

    K4 = "K4"
    K33 = "K33"
    PRISM = "PRISM"
    OTHER = "OTHER"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a canonically ordered edge list."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False, repr=False, default=())
    _edge_index: dict = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        adj: list[list[int]] = [[] for _ in range(self.n)]
        index: dict[tuple[int, int], int] = {}
        for i, (u, v) in enumerate(self.edges):
            adj[u].append(v)
            adj[v].append(u)
            index[(u, v)] = i
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_edge_index", index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self, u: int, v: int) -> int:
        """Canonical index of edge {u, v}; KeyError if absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]


@dataclass(frozen=True)
class EdgeSubset:
    """Subset of a host graph's edges: bit i set <=> edge i belongs to H."""

    m: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.m:
            raise SizeMismatch(f"bitset does not fit {self.m} edges")

    @classmethod
    def empty(cls, m: int) -> "EdgeSubset":
        return cls(m, 0)

    @classmethod
    def full(cls, m: int) -> "EdgeSubset":
        return cls(m, (1 << m) - 1)

    @classmethod
    def from_edges(cls, g: Graph, pairs) -> "EdgeSubset":
        bits = 0
        for u, v in pairs:
            bits |= 1 << g.edge_index(u, v)
        return cls(g.m, bits)

    def __contains__(self, index: int) -> bool:
        return bool(self.bits >> index & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> list[int]:
        return [i for i in range(self.m) if self.bits >> i & 1]

    def edges(self, g: Graph) -> list[tuple[int, int]]:
        """Materialize the member edges of this subset within its host."""
        if g.m != self.m:
            raise SizeMismatch(f"subset over {self.m} edges, host has {g.m}")
        return [g.edges[i] for i in self.indices()]


@dataclass(frozen=True)
class DegreeProfile:
    """Per-degree vertex counts (n_d, ..., n_0), highest degree first."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise ValueError(f"negative count in profile {self.counts}")

    @property
    def degree(self) -> int:
        return len(self.counts) - 1

    @property
    def order(self) -> int:
        return sum(self.counts)

    def count(self, k: int) -> int:
        """Number of vertices of degree k."""
        return self.counts[self.degree - k]

    def reversed(self) -> "DegreeProfile":
        return DegreeProfile(tuple(reversed(self.counts)))

    def max_deviation(self) -> Fraction:
        """max_k |count(k) - n/(d+1)| as an exact rational."""
        center = Fraction(self.order, self.degree + 1)
        return max(abs(Fraction(c) - center) for c in self.counts)

    def parity_ok(self) -> bool:
        """Handshake check: the number of odd-degree vertices is even."""
        odd = sum(c for k, c in zip(range(self.degree, -1, -1), self.counts) if k % 2)
        return odd % 2 == 0


def build_graph(n: int, raw_edges) -> Graph:
    """Validate and canonicalize an edge list into a Graph.

    Duplicates are an error rather than silently merged.
    """
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    seen = set()
    edges = []
    for u, v in raw_edges:
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside [0,{n})")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed twice")
        seen.add(e)
        edges.append(e)
    edges.sort()
    return Graph(n, tuple(edges))


def validate_regular(g: Graph, d: int) -> bool:
    """True iff every vertex of g has degree exactly d."""
    return all(len(a) == d for a in g.adjacency)


def require_regular(g: Graph, d: int) -> None:
    if not validate_regular(g, d):
        raise NotRegular(f"graph is not {d}-regular")


def inferred_degree(g: Graph) -> int:
    """Common degree of a regular graph; NotRegular otherwise."""
    if g.n == 0:
        return 0
    d = len(g.adjacency[0])
    if not validate_regular(g, d):
        raise NotRegular("graph is not regular")
    return d


@dataclass(frozen=True)
class Component:
    """One connected component: original vertices, induced graph, label map."""

    vertices: tuple[int, ...]          # host labels, ascending
    graph: Graph                       # relabeled 0..k-1 in that order
    to_host: tuple[int, ...]           # local label -> host label


def connected_components(g: Graph) -> list[Component]:
    """Maximal connected vertex sets, ordered by smallest original label."""
    seen = [False] * g.n
    out: list[Component] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        verts = [start]
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    verts.append(w)
                    queue.append(w)
        verts.sort()
        local = {v: i for i, v in enumerate(verts)}
        sub_edges = [
            (local[u], local[v])
            for (u, v) in g.edges
            if u in local and v in local
        ]
        out.append(Component(tuple(verts), build_graph(len(verts), sub_edges), tuple(verts)))
    return out


def induced_on(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given host vertices plus a local->host map."""
    verts = sorted(vertices)
    local = {v: i for i, v in enumerate(verts)}
    sub_edges = [(local[u], local[v]) for (u, v) in g.edges if u in local and v in local]
    return build_graph(len(verts), sub_edges), tuple(verts)


def shortest_cycle(g: Graph) -> list[int] | None:
    """A shortest cycle of g as a vertex sequence, or None for forests.

    Deterministic: the cycle comes from the breadth-first search rooted at
    the lowest vertex label that attains the girth, scanning neighbors in
    ascending order.
    """
    best = g.n + 1
    best_root = -1
    for root in range(g.n):
        val = _bfs_cycle_value(g, root, best)
        if val < best:
            best = val
            best_root = root
            if best == 3:
                break
    if best_root < 0:
        return None
    cycle = _bfs_cycle_at(g, best_root, best)
    assert cycle is not None and len(cycle) == best
    assert _is_chordless_cycle(g, cycle), "shortest cycle must be chordless"
    return cycle


def _bfs_cycle_value(g: Graph, root: int, cutoff: int) -> int:
    """Shortest closed-walk value min(dist[u]+dist[w]+1) found from root.

    Only values strictly below ``cutoff`` matter to the caller, which lets
    the search stop expanding once layers cannot improve on it.
    """
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    best = cutoff
    while queue:
        u = queue.popleft()
        du = dist[u]
        if 2 * du + 1 >= best:
            break
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = du + 1
                parent[w] = u
                queue.append(w)
            elif w != parent[u]:
                cand = du + dist[w] + 1
                if cand < best:
                    best = cand
    return best


def _bfs_cycle_at(g: Graph, root: int, girth: int) -> list[int] | None:
    """Reconstruct the first scanned cycle of exact length ``girth`` at root."""
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = du + 1
                parent[w] = u
                queue.append(w)
            elif w != parent[u] and du + dist[w] + 1 == girth:
                # Paths u->root and w->root meet only at the root, else a
                # strictly shorter cycle would exist.
                left = []
                x = u
                while x != -1:
                    left.append(x)
                    x = parent[x]
                right = []
                x = w
                while x != -1:
                    right.append(x)
                    x = parent[x]
                assert left[-1] == root and right[-1] == root
                return list(reversed(left)) + right[:-1]
    return None


def _is_chordless_cycle(g: Graph, cycle: list[int]) -> bool:
    k = len(cycle)
    if len(set(cycle)) != k:
        return False
    on_cycle = set(cycle)
    for i, u in enumerate(cycle):
        succ = cycle[(i + 1) % k]
        pred = cycle[i - 1]
        if not g.has_edge(u, succ):
            return False
        for w in g.adjacency[u]:
            if w in on_cycle and w not in (succ, pred):
                return False
    return True


def complement_within(g: Graph, s: EdgeSubset) -> EdgeSubset:
    """Bitwise complement of s over g's edge set (an involution)."""
    if s.m != g.m:
        raise SizeMismatch(f"subset over {s.m} edges, host has {g.m}")
    return EdgeSubset(g.m, s.bits ^ ((1 << g.m) - 1))


def subgraph_degrees(g: Graph, s: EdgeSubset) -> list[int]:
    if s.m != g.m:
        raise SizeMismatch(f"subset over {s.m} edges, host has {g.m}")
    deg = [0] * g.n
    bits = s.bits
    i = 0
    while bits:
        if bits & 1:
            u, v = g.edges[i]
            deg[u] += 1
            deg[v] += 1
        bits >>= 1
        i += 1
    return deg


def profile_of(g: Graph, s: EdgeSubset) -> DegreeProfile:
    """Degree profile (n_d, ..., n_0) of the spanning subgraph s within g."""
    d = inferred_degree(g)
    if g.n == 0:
        return DegreeProfile(())
    deg = subgraph_degrees(g, s)
    counts = [0] * (d + 1)
    for x in deg:
        counts[x] += 1
    return DegreeProfile(tuple(reversed(counts)))


def classify_small(g: Graph) -> SmallClass:
    """Recognize K4 / K3,3 / 3-prism among connected cubic graphs.

    Structural fingerprints suffice: the connected cubic graphs on at most
    6 vertices are exactly K4, K3,3, and the prism, and K3,3 is the
    triangle-free one on 6 vertices.
    """
    require_regular(g, 3)
    if len(connected_components(g)) != 1:
        raise NotConnected("classify_small expects a connected graph")
    if g.n == 4:
        return SmallClass.K4
    if g.n == 6:
        return SmallClass.K33 if not _has_triangle(g) else SmallClass.PRISM
    return SmallClass.OTHER


def _has_triangle(g: Graph) -> bool:
    for u, v in g.edges:
        if set(g.adjacency[u]) & set(g.adjacency[v]):
            return True
    return False
