"""Exact optimizers for matching preclusion, s-restricted matching
preclusion, and anti-Kekule numbers, with certificates.

The optimizer runs iterative deepening over decision budgets k. Each search
node holds a partial fault set F and a maximum matching M of g - F; while M
is still near-perfect, any feasible superset of F must delete one of M's
edges, so the node branches over them (in increasing edge index, banning
earlier siblings so no subset is visited twice). Side conditions - minimum
component size for the s-restricted problem, connectivity for anti-Kekule -
are antitone under deletion, so a branch dies as soon as one fails.

``brute_force_solve`` is the independent oracle: it enumerates edge subsets
in increasing cardinality and tests each against an exhaustive list of the
graph's near-perfect matchings, sharing no code path with the optimizer's
matching search.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import OracleLimitError, ParameterError, PreconditionError
from .graphs import EdgeSet, Graph, components, random_graph, require_tagged
from .matching import (
    kuhn_augment,
    matching_number,
    matching_number_excluding,
    maximum_matching_mates,
    near_perfect_matching_masks,
)

__all__ = [
    "INFINITY",
    "ORACLE_EDGE_LIMIT",
    "ProblemKind",
    "MP",
    "AK",
    "mp_s",
    "Evidence",
    "PreclusionCertificate",
    "evidence_for",
    "is_matching_preclusion_set",
    "is_s_restricted_set",
    "is_anti_kekule_set",
    "trivial_mp_set",
    "solve",
    "brute_force_solve",
    "chain_suite",
]

INFINITY = math.inf
ORACLE_EDGE_LIMIT = 16


@dataclass(frozen=True)
class ProblemKind:
    """Which fault-set notion is being optimized: plain matching preclusion
    (``mp``), s-restricted (``mps``), or anti-Kekule (``ak``).

    ``mp_s(0)`` behaves identically to ``MP``: a component floor of one
    vertex constrains nothing.
    """

    name: str
    s: int = 0

    def __post_init__(self):
        if self.name not in ("mp", "mps", "ak"):
            raise ParameterError(f"unknown problem kind {self.name!r}")
        if self.s < 0:
            raise ParameterError(f"restriction level must be >= 0, got {self.s}")
        if self.name != "mps" and self.s != 0:
            raise ParameterError(f"kind {self.name!r} does not take a restriction level")

    def label(self) -> str:
        if self.name == "mps":
            return f"mp_{self.s}"
        return self.name

    def describe(self) -> str:
        if self.name == "mp":
            return "matching preclusion"
        if self.name == "mps":
            return f"{self.s}-restricted matching preclusion"
        return "anti-Kekule"


MP = ProblemKind("mp")
AK = ProblemKind("ak")


def mp_s(s: int) -> ProblemKind:
    return ProblemKind("mps", s)


@dataclass(frozen=True)
class Evidence:
    """What the graph looks like after deleting a certificate's witness."""

    nu_after: int
    component_min_size: int
    connected: bool


@dataclass(frozen=True)
class PreclusionCertificate:
    """Solver answer: optimal value (possibly infinite) plus a witness.

    ``value == INFINITY`` means no qualifying edge set exists (or none within
    the requested budget); ``reason`` says which. Finite certificates carry a
    witness of exactly ``value`` edges and post-deletion evidence.
    """

    kind: ProblemKind
    value: float
    witness: Optional[EdgeSet]
    evidence: Optional[Evidence]
    reason: Optional[str] = None
    note: Optional[str] = None
    stats: Optional[dict] = None

    @property
    def feasible(self) -> bool:
        return not math.isinf(self.value)


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def is_matching_preclusion_set(g: Graph, f: EdgeSet) -> bool:
    """True when g - f has neither a perfect nor an almost perfect matching,
    i.e. nu(g - f) <= floor(n/2) - 1."""
    require_tagged(g, f)
    return matching_number_excluding(g, f.members) <= g.n // 2 - 1


def is_s_restricted_set(g: Graph, f: EdgeSet, s: int) -> bool:
    """Matching preclusion with the extra demand that every component of
    g - f keeps at least s + 1 vertices."""
    if s < 0:
        raise ParameterError(f"restriction level must be >= 0, got {s}")
    require_tagged(g, f)
    if matching_number_excluding(g, f.members) > g.n // 2 - 1:
        return False
    return components(g, without=f.members).min_size >= s + 1


def is_anti_kekule_set(g: Graph, f: EdgeSet) -> bool:
    """True when g - f stays connected but loses every perfect matching.
    Only defined on even order (Kekule structures are perfect matchings)."""
    require_tagged(g, f)
    if g.n % 2 == 1:
        raise PreconditionError("anti-Kekule sets are defined for even-order graphs")
    if not components(g, without=f.members).connected:
        return False
    return matching_number_excluding(g, f.members) <= g.n // 2 - 1


def trivial_mp_set(g: Graph, v: int) -> EdgeSet:
    """I(v): all edges incident to ``v``. For even order this is always a
    matching preclusion set (v becomes isolated)."""
    if not 0 <= v < g.n:
        raise ParameterError(f"vertex {v} out of range for n={g.n}")
    return EdgeSet(g, g.incident(v))


def _no_near_perfect_reason(g: Graph) -> Optional[str]:
    if matching_number(g) < g.n // 2:
        return "graph has neither a perfect nor an almost perfect matching"
    return None


def evidence_for(g: Graph, witness: EdgeSet) -> Evidence:
    rep = components(g, without=witness.members)
    return Evidence(
        nu_after=matching_number_excluding(g, witness.members),
        component_min_size=rep.min_size,
        connected=rep.connected,
    )


# ---------------------------------------------------------------------------
# Branch-and-bound optimizer
# ---------------------------------------------------------------------------

class _Stats:
    __slots__ = ("nodes", "budget_prunes", "side_prunes", "rounds")

    def __init__(self):
        self.nodes = 0
        self.budget_prunes = 0
        self.side_prunes = 0
        self.rounds = 0

    def merge(self, other: "_Stats") -> None:
        self.nodes += other.nodes
        self.budget_prunes += other.budget_prunes
        self.side_prunes += other.side_prunes

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "budget_prunes": self.budget_prunes,
            "side_prunes": self.side_prunes,
            "deepening_rounds": self.rounds,
        }


class _Search:
    def __init__(self, g: Graph, kind: ProblemKind):
        self.g = g
        self.kind = kind
        self.threshold = g.n // 2 - 1
        self.bipartite = g.bipartition is not None

    def _mates_after(self, dead: frozenset[int], parent_mates: list[int], removed: int) -> list[int]:
        # Dropping one matched edge loses at most one unit of nu; for
        # bipartite graphs a single alternating-path search from each freed
        # endpoint restores maximality (any augmenting path must end at a
        # newly freed vertex). General graphs recompute from scratch.
        if not self.bipartite:
            return maximum_matching_mates(self.g, dead)
        mates = parent_mates.copy()
        a, b = self.g.edges[removed]
        mates[a] = mates[b] = -1
        if not kuhn_augment(self.g, dead, mates, a):
            kuhn_augment(self.g, dead, mates, b)
        return mates

    def _side_satisfied(self, dead: frozenset[int]) -> bool:
        if self.kind.name == "mps":
            return components(self.g, without=dead).min_size >= self.kind.s + 1
        if self.kind.name == "ak":
            return components(self.g, without=dead).connected
        return True

    def _side_still_possible(self, dead: frozenset[int]) -> bool:
        # Both side conditions are antitone under further deletion, so a
        # violation at an internal node kills the whole branch.
        if self.kind.name == "mps" and self.kind.s >= 1:
            return components(self.g, without=dead).min_size >= self.kind.s + 1
        if self.kind.name == "ak":
            return components(self.g, without=dead).connected
        return True

    def _matched_edge_ids(self, mates: list[int]) -> list[int]:
        g = self.g
        return sorted(g.edge_id(v, mates[v]) for v in range(g.n) if mates[v] > v)

    def _dfs(self, fault: frozenset[int], banned: frozenset[int], mates: list[int],
             k: int, stats: _Stats) -> Optional[frozenset[int]]:
        stats.nodes += 1
        nu = sum(1 for x in mates if x != -1) // 2
        if nu <= self.threshold:
            if self._side_satisfied(fault):
                return fault
            stats.side_prunes += 1
            return None
        if len(fault) >= k:
            stats.budget_prunes += 1
            return None
        if not self._side_still_possible(fault):
            stats.side_prunes += 1
            return None
        cur_banned = banned
        for eid in self._matched_edge_ids(mates):
            if eid not in cur_banned:
                child_fault = fault | {eid}
                child_mates = self._mates_after(child_fault, mates, eid)
                result = self._dfs(child_fault, cur_banned, child_mates, k, stats)
                if result is not None:
                    return result
            cur_banned = cur_banned | {eid}
        return None

    def decide(self, k: int, stats: _Stats, jobs: int = 1,
               fault0: frozenset[int] = frozenset(),
               banned0: frozenset[int] = frozenset()) -> Optional[frozenset[int]]:
        """Search for a qualifying set of size <= k that contains ``fault0``
        and avoids ``banned0``.

        Sibling subtrees of the root all run to completion (possibly in
        parallel) and the first feasible result in child order wins, so the
        outcome and the node counts do not depend on ``jobs``.
        """
        mates0 = maximum_matching_mates(self.g, fault0)
        stats.nodes += 1
        nu = sum(1 for x in mates0 if x != -1) // 2
        if nu <= self.threshold:
            if self._side_satisfied(fault0):
                return fault0
            stats.side_prunes += 1
            return None
        if len(fault0) >= k:
            stats.budget_prunes += 1
            return None
        if not self._side_still_possible(fault0):
            stats.side_prunes += 1
            return None
        children = []
        cur_banned = banned0
        for eid in self._matched_edge_ids(mates0):
            if eid not in cur_banned:
                children.append((fault0 | {eid}, cur_banned, eid))
            cur_banned = cur_banned | {eid}

        def run_child(child):
            fault, banned, eid = child
            child_stats = _Stats()
            mates = self._mates_after(fault, mates0, eid)
            return self._dfs(fault, banned, mates, k, child_stats), child_stats

        if jobs > 1 and len(children) > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                outcomes = list(pool.map(run_child, children))
        else:
            outcomes = [run_child(child) for child in children]
        witness = None
        for result, child_stats in outcomes:
            stats.merge(child_stats)
            if witness is None and result is not None:
                witness = result
        return witness


def _lex_min_witness(search: _Search, k: int, known: frozenset[int],
                     stats: _Stats) -> frozenset[int]:
    """Lexicographically smallest optimal witness (by sorted edge indices),
    grown one position at a time with constrained feasibility searches. A
    known witness guides the scan so each position tries only smaller
    indices than the incumbent."""
    best = sorted(known)
    prefix: list[int] = []
    for pos in range(k):
        start = prefix[-1] + 1 if prefix else 0
        guide = best[pos]
        chosen = guide
        for e in range(start, guide):
            fault0 = frozenset(prefix) | {e}
            banned0 = frozenset(range(e)) - fault0
            found = search.decide(k, stats, jobs=1, fault0=fault0, banned0=banned0)
            if found is not None:
                chosen = e
                best = sorted(found)
                break
        prefix.append(chosen)
    return frozenset(prefix)


def solve(g: Graph, kind: ProblemKind, budget: Optional[int] = None,
          deterministic: bool = False, jobs: int = 1) -> PreclusionCertificate:
    """Minimum qualifying edge set for ``kind``, as a certificate.

    With a ``budget``, the search stops at that cardinality (decision mode):
    an infeasible answer then only asserts that no set of size <= budget
    exists. ``deterministic=True`` additionally pins the witness to the
    lexicographically smallest optimum. ``jobs`` parallelizes sibling
    subtrees; values, witnesses (in deterministic mode), and node counts are
    all independent of it.
    """
    if jobs < 1:
        raise ParameterError(f"jobs must be >= 1, got {jobs}")
    if budget is not None and budget < 0:
        raise ParameterError(f"budget must be >= 0, got {budget}")
    if kind.name == "ak" and g.n % 2 == 1:
        raise PreconditionError("anti-Kekule sets are defined for even-order graphs")

    stats = _Stats()
    reason = _no_near_perfect_reason(g)
    if reason is not None:
        return PreclusionCertificate(kind, INFINITY, None, None, reason=reason,
                                     stats=stats.as_dict())
    if kind.name == "ak" and not components(g).connected:
        return PreclusionCertificate(
            kind, INFINITY, None, None,
            reason="graph is disconnected; edge deletion cannot restore connectivity",
            stats=stats.as_dict())

    search = _Search(g, kind)
    cap = g.m if budget is None else min(budget, g.m)
    witness = None
    value = INFINITY
    for k in range(cap + 1):
        stats.rounds += 1
        found = search.decide(k, stats, jobs=jobs)
        if found is not None:
            witness = found
            value = k
            break
    if witness is None:
        if budget is not None and budget < g.m:
            reason = f"no {kind.describe()} set of size at most {budget} exists"
        else:
            reason = f"no {kind.describe()} set exists"
        return PreclusionCertificate(kind, INFINITY, None, None, reason=reason,
                                     stats=stats.as_dict())
    if deterministic:
        witness = _lex_min_witness(search, int(value), witness, stats)
    edge_set = EdgeSet(g, witness)
    return PreclusionCertificate(kind, value, edge_set, evidence_for(g, edge_set),
                                 stats=stats.as_dict())


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def _side_conditions_hold(g: Graph, kind: ProblemKind, fault: tuple[int, ...]) -> bool:
    if kind.name == "mps":
        return components(g, without=fault).min_size >= kind.s + 1
    if kind.name == "ak":
        return components(g, without=fault).connected
    return True


def brute_force_solve(g: Graph, kind: ProblemKind, limit: int = ORACLE_EDGE_LIMIT,
                      max_size: Optional[int] = None) -> PreclusionCertificate:
    """Independent oracle: enumerate edge subsets in increasing cardinality
    (lexicographic within a cardinality) and return the first one whose
    deletion kills every near-perfect matching and meets the side
    conditions. Witnesses are therefore always the lexicographically
    smallest optimum.
    """
    if kind.name == "ak" and g.n % 2 == 1:
        raise PreconditionError("anti-Kekule sets are defined for even-order graphs")
    if g.m > limit:
        raise OracleLimitError(f"{g.m} edges exceeds the oracle limit of {limit}")

    reason = _no_near_perfect_reason(g)
    if reason is not None:
        return PreclusionCertificate(kind, INFINITY, None, None, reason=reason)
    if kind.name == "ak" and not components(g).connected:
        return PreclusionCertificate(
            kind, INFINITY, None, None,
            reason="graph is disconnected; edge deletion cannot restore connectivity")

    masks = near_perfect_matching_masks(g)
    m = g.m
    cap = m if max_size is None else min(max_size, m)
    checked = 0
    for size in range(cap + 1):
        for combo in combinations(range(m), size):
            checked += 1
            fmask = 0
            for e in combo:
                fmask |= 1 << e
            if all(pm & fmask for pm in masks) and _side_conditions_hold(g, kind, combo):
                edge_set = EdgeSet(g, combo)
                return PreclusionCertificate(
                    kind, size, edge_set, evidence_for(g, edge_set),
                    stats={"subsets_checked": checked})
    if max_size is not None and max_size < m:
        reason = f"no {kind.describe()} set of size at most {max_size} exists"
    else:
        reason = f"no {kind.describe()} set exists"
    return PreclusionCertificate(kind, INFINITY, None, None, reason=reason,
                                 stats={"subsets_checked": checked})


# ---------------------------------------------------------------------------
# Monotone-chain verification suite
# ---------------------------------------------------------------------------

def chain_suite(seed: int, count: int, max_s: int = 3, jobs: int = 1) -> dict:
    """Check mp <= mp_1 <= ... <= mp_max_s (INFINITY on top) on ``count``
    seeded random even-order graphs within the oracle edge limit."""
    if count < 1:
        raise ParameterError(f"count must be >= 1, got {count}")
    rng = random.Random(seed)
    violations = []
    for index in range(count):
        n = rng.choice((4, 6, 8))
        m = rng.randint(0, min(ORACLE_EDGE_LIMIT, n * (n - 1) // 2))
        g = random_graph(n, m, seed=rng.randrange(2**32))
        values = [solve(g, mp_s(s), jobs=jobs).value for s in range(max_s + 1)]
        if any(a > b for a, b in zip(values, values[1:])):
            violations.append({
                "index": index,
                "n": n,
                "edges": [list(e) for e in g.edges],
                "values": [v if not math.isinf(v) else "infinity" for v in values],
            })
    return {
        "instances": count,
        "max_s": max_s,
        "violations": violations,
        "passed": not violations,
    }
