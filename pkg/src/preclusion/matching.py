"""Maximum-matching computation and matching-based predicates.

Bipartite graphs (any graph constructed with a bipartition) go through
Hopcroft-Karp; everything else goes through an array-based blossom
contraction search in the O(V^3) style: simple enough to audit, fast enough
for desk-scale instances. A subset-enumeration oracle and an exhaustive
near-perfect-matching enumerator provide independent cross-checks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable

from .errors import OracleLimitError, ParameterError
from .graphs import EdgeSet, Graph

__all__ = [
    "Matching",
    "matching_from_edge_ids",
    "max_matching",
    "matching_number",
    "matching_number_excluding",
    "has_perfect_matching",
    "has_almost_perfect_matching",
    "brute_force_matching_number",
    "near_perfect_matching_masks",
]

MATCHING_ORACLE_EDGE_LIMIT = 24


@dataclass(frozen=True)
class Matching:
    """A set of pairwise nonadjacent edges with its saturated vertex set."""

    edges: EdgeSet
    saturated: FrozenSet[int]
    size: int


def matching_from_edge_ids(g: Graph, edge_ids: Iterable[int]) -> Matching:
    """Build a :class:`Matching`, checking that no two edges share a vertex."""
    ids = frozenset(edge_ids)
    saturated: set[int] = set()
    for eid in sorted(ids):
        u, v = g.edges[eid]
        if u in saturated or v in saturated:
            raise ParameterError(f"edges are not pairwise nonadjacent at vertex pair ({u}, {v})")
        saturated.add(u)
        saturated.add(v)
    return Matching(EdgeSet(g, ids), frozenset(saturated), len(ids))


# ---------------------------------------------------------------------------
# Hopcroft-Karp (bipartite)
# ---------------------------------------------------------------------------

def _bipartite_mates(g: Graph, dead: frozenset[int]) -> list[int]:
    side = g.bipartition
    assert side is not None
    n = g.n
    adj: list[list[int]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(g.edges):
        if eid in dead:
            continue
        if side[u] == 1:
            u, v = v, u
        adj[u].append(v)
    left = [v for v in range(n) if side[v] == 0]
    mate = [-1] * n
    for u in left:
        for v in adj[u]:
            if mate[v] == -1:
                mate[u] = v
                mate[v] = u
                break

    inf = n + 1
    dist = [inf] * n

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if mate[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        reached_free = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = mate[v]
                if w == -1:
                    reached_free = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return reached_free

    def augment_from(root: int) -> bool:
        # Iterative DFS over the BFS layering; frames hold (left vertex,
        # neighbor iterator), rights holds the chosen right vertex per frame.
        stack = [(root, iter(adj[root]))]
        rights: list[int] = []
        while stack:
            u, it = stack[-1]
            moved = False
            for v in it:
                w = mate[v]
                if w == -1:
                    rights.append(v)
                    for (lu, _), rv in zip(stack, rights):
                        mate[lu] = rv
                        mate[rv] = lu
                    return True
                if dist[w] == dist[u] + 1:
                    rights.append(v)
                    stack.append((w, iter(adj[w])))
                    moved = True
                    break
            if not moved:
                dist[u] = inf
                stack.pop()
                if rights:
                    rights.pop()
        return False

    while bfs():
        for u in left:
            if mate[u] == -1:
                augment_from(u)
    return mate


def kuhn_augment(g: Graph, dead: frozenset[int], mate: list[int], start: int) -> bool:
    """Try to grow a bipartite matching by one alternating path from the free
    vertex ``start``; used for incremental re-matching after one deletion."""
    visited: set[int] = set()

    def dfs(u: int) -> bool:
        for w, eid in g.adj[u]:
            if eid in dead or w in visited:
                continue
            visited.add(w)
            if mate[w] == -1 or dfs(mate[w]):
                mate[w] = u
                mate[u] = w
                return True
        return False

    return dfs(start)


# ---------------------------------------------------------------------------
# Blossom contraction (general graphs)
# ---------------------------------------------------------------------------

def _general_mates(g: Graph, dead: frozenset[int]) -> list[int]:
    # Classic array-based Edmonds search: grow an alternating BFS tree from
    # each free vertex; when two even vertices meet, contract the blossom by
    # redirecting `base` pointers to the lowest common ancestor.
    n = g.n
    adj: list[list[int]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(g.edges):
        if eid not in dead:
            adj[u].append(v)
            adj[v].append(u)
    mate = [-1] * n
    for u in range(n):
        if mate[u] == -1:
            for v in adj[u]:
                if mate[v] == -1:
                    mate[u] = v
                    mate[v] = u
                    break

    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_augmenting_path(root: int) -> bool:
        nonlocal parent, base
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # `to` is an even vertex of the tree: blossom found.
                    cur_base = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur_base, to, in_blossom)
                    mark_path(to, cur_base, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        # Free vertex reached: flip the alternating path.
                        u2 = to
                        while u2 != -1:
                            pv = parent[u2]
                            next_u = mate[pv]
                            mate[u2] = pv
                            mate[pv] = u2
                            u2 = next_u
                        return True
                    used[mate[to]] = True
                    queue.append(mate[to])
        return False

    for v in range(n):
        if mate[v] == -1:
            find_augmenting_path(v)
    return mate


# ---------------------------------------------------------------------------
# Public surface
# ---------------------------------------------------------------------------

def maximum_matching_mates(g: Graph, dead: frozenset[int] = frozenset()) -> list[int]:
    """Mate array of a maximum matching of ``g`` minus the ``dead`` edges."""
    if g.bipartition is not None:
        return _bipartite_mates(g, dead)
    return _general_mates(g, dead)


def _mates_to_edge_ids(g: Graph, mate: list[int]) -> list[int]:
    return [g.edge_id(v, mate[v]) for v in range(g.n) if mate[v] > v]


def matching_number_excluding(g: Graph, dead: Iterable[int]) -> int:
    """nu(g - dead): matching number after removing the given edge indices."""
    dead_set = dead.members if isinstance(dead, EdgeSet) else frozenset(dead)
    mate = maximum_matching_mates(g, dead_set)
    return sum(1 for v in range(g.n) if mate[v] != -1) // 2


def matching_number(g: Graph) -> int:
    return matching_number_excluding(g, frozenset())


def max_matching(g: Graph, deterministic: bool = False) -> Matching:
    """A maximum matching of ``g``.

    With ``deterministic=True``, ties among maximum matchings are broken by
    returning the lexicographically smallest edge-index set, found by greedy
    forcing (one matching computation per candidate edge).
    """
    mate = maximum_matching_mates(g)
    ids = _mates_to_edge_ids(g, mate)
    if not deterministic:
        return matching_from_edge_ids(g, ids)
    target = len(ids)
    chosen: list[int] = []
    blocked: set[int] = set()
    for eid in range(g.m):
        if len(chosen) == target:
            break
        u, v = g.edges[eid]
        if u in blocked or v in blocked:
            continue
        trial = blocked | {u, v}
        dead = frozenset(
            e for e in range(g.m) if g.edges[e][0] in trial or g.edges[e][1] in trial
        )
        if matching_number_excluding(g, dead) == target - len(chosen) - 1:
            chosen.append(eid)
            blocked = trial
    return matching_from_edge_ids(g, chosen)


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and matching_number(g) == g.n // 2


def has_almost_perfect_matching(g: Graph) -> bool:
    # Even-order graphs never have one: parity forces it, no error raised.
    return g.n % 2 == 1 and matching_number(g) == (g.n - 1) // 2


def brute_force_matching_number(g: Graph, limit: int = MATCHING_ORACLE_EDGE_LIMIT) -> int:
    """Matching number by exhaustive search over edge subsets that form
    matchings. Independent oracle for :func:`max_matching`."""
    if g.m > limit:
        raise OracleLimitError(f"{g.m} edges exceeds the oracle limit of {limit}")
    edges = g.edges
    m = g.m
    best = 0

    def rec(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if i == m or size + (m - i) <= best:
            return
        u, v = edges[i]
        if not (used >> u) & 1 and not (used >> v) & 1:
            rec(i + 1, used | (1 << u) | (1 << v), size + 1)
        rec(i + 1, used, size)

    rec(0, 0, 0)
    return best


def near_perfect_matching_masks(g: Graph) -> list[int]:
    """Edge-index bitmasks of every matching of size floor(n/2): the perfect
    matchings for even order, the almost perfect matchings for odd order.

    An edge set F precludes all of them exactly when every returned mask
    intersects F, which is what the subset-enumeration oracle checks.
    """
    n = g.n
    target = n // 2
    skips_allowed = n - 2 * target
    masks: list[int] = []
    adj = g.adj
    full = (1 << n) - 1

    def rec(used: int, used_count: int, edge_mask: int, size: int, skips: int) -> None:
        if size == target:
            masks.append(edge_mask)
            return
        if size + (n - used_count) // 2 < target:
            return
        free = ~used & full
        v = (free & -free).bit_length() - 1
        for w, eid in adj[v]:
            if not (used >> w) & 1:
                rec(used | (1 << v) | (1 << w), used_count + 2,
                    edge_mask | (1 << eid), size + 1, skips)
        if skips:
            rec(used | (1 << v), used_count + 1, edge_mask, size, skips - 1)

    if target > 0:
        rec(0, 0, 0, 0, skips_allowed)
    elif n <= 1:
        masks.append(0)
    return masks
