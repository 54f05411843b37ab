"""Immutable simple-graph core: representation, generators, edge subsets,
and connected-component queries.

Vertices are dense integers ``0..n-1``. Edges receive stable indices
``0..m-1`` in construction order, so fault sets and matchings can be held
as small index sets (or bitmasks in hot loops). Graphs are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ParameterError, TagMismatchError

__all__ = [
    "Graph",
    "EdgeSet",
    "ComponentReport",
    "generate",
    "hypercube",
    "complete",
    "complete_bipartite",
    "petersen",
    "cycle",
    "path",
    "random_bipartite_with_pm",
    "random_graph",
    "delete_edges",
    "surviving_edge_ids",
    "components",
    "find_bipartition",
]


class Graph:
    """Immutable undirected simple graph with indexed vertices and edges.

    ``edges[i]`` is the endpoint pair ``(u, v)`` with ``u < v`` of the edge
    whose stable index is ``i``. ``bipartition``, when present, maps each
    vertex to side 0 or 1 and every edge must cross sides.
    """

    __slots__ = ("n", "edges", "adj", "bipartition", "_pair_to_id", "_incident")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        bipartition: Optional[Sequence[int]] = None,
    ):
        if n < 0:
            raise ParameterError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        pair_to_id: dict[tuple[int, int], int] = {}
        normalized: list[tuple[int, int]] = []
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in pair_to_id:
                raise ParameterError(f"duplicate edge ({u}, {v})")
            eid = len(normalized)
            pair_to_id[(u, v)] = eid
            normalized.append((u, v))
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        self.edges: tuple[tuple[int, int], ...] = tuple(normalized)
        self.adj: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adj
        )
        self._pair_to_id = pair_to_id
        self._incident: tuple[frozenset[int], ...] = tuple(
            frozenset(eid for _, eid in nbrs) for nbrs in self.adj
        )
        if bipartition is not None:
            sides = tuple(bipartition)
            if len(sides) != n or any(side not in (0, 1) for side in sides):
                raise ParameterError("bipartition must assign 0 or 1 to each vertex")
            for u, v in self.edges:
                if sides[u] == sides[v]:
                    raise ParameterError(
                        f"edge ({u}, {v}) does not cross the given bipartition"
                    )
            self.bipartition: Optional[tuple[int, ...]] = sides
        else:
            self.bipartition = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w, _ in self.adj[v])

    def incident(self, v: int) -> frozenset[int]:
        """Indices of all edges incident to vertex ``v``."""
        return self._incident[v]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._pair_to_id

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self._pair_to_id[(u, v)]
        except KeyError:
            raise ParameterError(f"({u}, {v}) is not an edge") from None

    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.adj), default=0)

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adj), default=0)

    def same_labelling(self, other: "Graph") -> bool:
        """True when edge indices of ``self`` and ``other`` are interchangeable."""
        return self is other or (self.n == other.n and self.edges == other.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and frozenset(self.edges) == frozenset(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class EdgeSet:
    """A subset of one graph's edges, stored as a frozen set of edge indices.

    Every operation that consumes an :class:`EdgeSet` checks that it is
    tagged to the graph at hand (same labelling), so indices cannot silently
    be applied to a foreign graph.
    """

    __slots__ = ("graph", "members")

    def __init__(self, graph: Graph, members: Iterable[int]):
        ms = frozenset(members)
        for eid in ms:
            if not (0 <= eid < graph.m):
                raise ParameterError(f"edge index {eid} out of range for m={graph.m}")
        self.graph = graph
        self.members = ms

    @classmethod
    def from_pairs(cls, graph: Graph, pairs: Iterable[tuple[int, int]]) -> "EdgeSet":
        return cls(graph, (graph.edge_id(u, v) for u, v in pairs))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.graph.edges[eid] for eid in sorted(self.members))

    def union(self, other: Iterable[int]) -> "EdgeSet":
        extra = other.members if isinstance(other, EdgeSet) else frozenset(other)
        return EdgeSet(self.graph, self.members | extra)

    def difference(self, other: Iterable[int]) -> "EdgeSet":
        drop = other.members if isinstance(other, EdgeSet) else frozenset(other)
        return EdgeSet(self.graph, self.members - drop)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, eid: int) -> bool:
        return eid in self.members

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeSet):
            return NotImplemented
        return self.graph.same_labelling(other.graph) and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"EdgeSet({sorted(self.members)})"


def require_tagged(graph: Graph, edge_set: EdgeSet) -> None:
    """Raise :class:`TagMismatchError` unless ``edge_set`` belongs to ``graph``."""
    if not graph.same_labelling(edge_set.graph):
        raise TagMismatchError("edge set is tagged to a different graph")


@dataclass(frozen=True)
class ComponentReport:
    """Connected components of a graph: the partition plus summary flags."""

    components: tuple[frozenset[int], ...]
    min_size: int
    connected: bool


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def hypercube(n: int) -> Graph:
    """The hypercube Q_n: vertex ``i`` is the n-bit string of ``i``, and
    ``i`` is adjacent to ``i ^ (1 << k)`` for each bit position ``k``.

    Carries the bit-parity bipartition.
    """
    if n < 1:
        raise ParameterError(f"hypercube dimension must be >= 1, got {n}")
    size = 1 << n
    edges = []
    for i in range(size):
        for k in range(n):
            j = i ^ (1 << k)
            if i < j:
                edges.append((i, j))
    sides = [bin(i).count("1") & 1 for i in range(size)]
    return Graph(size, edges, bipartition=sides)


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete graph order must be >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ParameterError(f"complete bipartite sides must be >= 1, got ({a}, {b})")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph(a + b, edges, bipartition=[0] * a + [1] * b)


def petersen() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, spokes to 5..9, inner pentagram."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"path needs at least 1 vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


_FAMILIES = {
    "hypercube": (hypercube, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
    "cycle": (cycle, 1),
    "path": (path, 1),
}


def generate(family: str, params: Sequence[int] = ()) -> Graph:
    """Build a named graph family instance, e.g. ``generate("hypercube", [3])``."""
    if family not in _FAMILIES:
        raise ParameterError(
            f"unknown family {family!r}; choose from {sorted(_FAMILIES)}"
        )
    builder, arity = _FAMILIES[family]
    if len(params) != arity:
        raise ParameterError(f"family {family!r} takes {arity} parameter(s)")
    return builder(*params)


def random_bipartite_with_pm(t: int, extra_edge_prob: float, seed: int) -> Graph:
    """Random balanced bipartite graph on sides of size ``t`` that contains a
    planted perfect matching {(i, t+i)}. Each other cross pair is added
    independently with probability ``extra_edge_prob``. Deterministic for a
    fixed seed.
    """
    if t < 1:
        raise ParameterError(f"side size must be >= 1, got {t}")
    if not 0.0 <= extra_edge_prob <= 1.0:
        raise ParameterError(f"probability must lie in [0, 1], got {extra_edge_prob}")
    rng = random.Random(seed)
    edges = [(i, t + i) for i in range(t)]
    for i in range(t):
        for j in range(t):
            if j != i and rng.random() < extra_edge_prob:
                edges.append((i, t + j))
    return Graph(2 * t, edges, bipartition=[0] * t + [1] * t)


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform random simple graph with ``n`` vertices and ``m`` edges."""
    if n < 1:
        raise ParameterError(f"need at least 1 vertex, got {n}")
    max_m = n * (n - 1) // 2
    if not 0 <= m <= max_m:
        raise ParameterError(f"edge count {m} out of range for n={n}")
    rng = random.Random(seed)
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(n, sorted(rng.sample(all_pairs, m)))


# ---------------------------------------------------------------------------
# Deletion and components
# ---------------------------------------------------------------------------

def delete_edges(g: Graph, f: EdgeSet) -> Graph:
    """The graph ``g - f``: same vertices, surviving edges in original order.

    The new index of a surviving edge is its rank among survivors;
    :func:`surviving_edge_ids` recovers the original indices.
    """
    require_tagged(g, f)
    kept = [g.edges[eid] for eid in range(g.m) if eid not in f.members]
    sides = g.bipartition
    return Graph(g.n, kept, bipartition=sides)


def surviving_edge_ids(g: Graph, f: EdgeSet) -> tuple[int, ...]:
    """Map each edge index of ``delete_edges(g, f)`` to its index in ``g``."""
    require_tagged(g, f)
    return tuple(eid for eid in range(g.m) if eid not in f.members)


def components(g: Graph, without: Optional[Iterable[int]] = None) -> ComponentReport:
    """Connected components of ``g``, optionally ignoring the edges whose
    indices appear in ``without`` (so ``components(g, without=f)`` reports on
    ``g - f`` without building the deleted graph).
    """
    if isinstance(without, EdgeSet):
        require_tagged(g, without)
        dead = without.members
    elif without is not None:
        dead = frozenset(without)
    else:
        dead = frozenset()
    seen = [False] * g.n
    comps: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            v = queue.popleft()
            for w, eid in g.adj[v]:
                if not seen[w] and eid not in dead:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    min_size = min((len(c) for c in comps), default=0)
    return ComponentReport(tuple(comps), min_size, len(comps) <= 1)


def find_bipartition(g: Graph) -> Optional[tuple[int, ...]]:
    """A two-coloring of ``g`` if one exists (component roots get side 0),
    else ``None``."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, _ in g.adj[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return tuple(side)


def with_bipartition(g: Graph) -> Graph:
    """Return ``g`` with a detected bipartition attached when the graph is
    bipartite and no labelling is present; otherwise ``g`` unchanged."""
    if g.bipartition is not None:
        return g
    sides = find_bipartition(g)
    if sides is None:
        return g
    return Graph(g.n, g.edges, bipartition=sides)
