import math
from itertools import combinations

import pytest

from preclusion import (
    AK,
    EdgeSet,
    Graph,
    MP,
    OracleLimitError,
    ParameterError,
    PreconditionError,
    brute_force_solve,
    complete_bipartite,
    cycle,
    hypercube,
    is_anti_kekule_set,
    is_matching_preclusion_set,
    is_s_restricted_set,
    mp_s,
    solve,
    trivial_mp_set,
)
from preclusion import random_bipartite_with_pm
from preclusion.reduction import build_reduction
from conftest import random_even_corpus


def k2():
    return Graph(2, [(0, 1)], bipartition=[0, 1])


def test_problem_kind_validation():
    with pytest.raises(ParameterError):
        mp_s(-1)
    with pytest.raises(ParameterError):
        from preclusion import ProblemKind
        ProblemKind("mp", s=2)
    assert mp_s(1).label() == "mp_1"
    assert MP.label() == "mp" and AK.label() == "ak"


def test_is_matching_preclusion_set_examples():
    g = k2()
    assert is_matching_preclusion_set(g, EdgeSet(g, [0]))
    q3 = hypercube(3)
    for pair in combinations(range(q3.m), 2):
        assert not is_matching_preclusion_set(q3, EdgeSet(q3, pair))
    c4 = cycle(4)
    opposite = EdgeSet(c4, [0, 2])
    assert not is_matching_preclusion_set(c4, opposite)


def test_is_s_restricted_set_examples():
    q3 = hypercube(3)
    star = trivial_mp_set(q3, 0)
    assert not is_s_restricted_set(q3, star, 1)  # isolates the vertex
    from preclusion import trivial_conditional_set, two_paths
    tcs = trivial_conditional_set(q3, next(two_paths(q3)))
    assert is_s_restricted_set(q3, tcs, 2)
    c4 = cycle(4)
    assert not is_s_restricted_set(c4, EdgeSet(c4, [0, 2]), 1)  # PM survives


def test_is_anti_kekule_set_examples():
    c6 = cycle(6)
    for eid in range(6):
        assert not is_anti_kekule_set(c6, EdgeSet(c6, [eid]))
    g = k2()
    assert not is_anti_kekule_set(g, EdgeSet(g, [0]))  # disconnects
    r = build_reduction(k2())
    fault = EdgeSet(r.gadget, [0, r.edge_e])
    assert is_anti_kekule_set(r.gadget, fault)
    with pytest.raises(PreconditionError):
        is_anti_kekule_set(cycle(5), EdgeSet(cycle(5), [0]))


def test_trivial_mp_set():
    q3 = hypercube(3)
    star = trivial_mp_set(q3, 5)
    assert len(star) == 3
    assert is_matching_preclusion_set(q3, star)
    assert len(trivial_mp_set(k2(), 0)) == 1
    from preclusion import petersen
    assert len(trivial_mp_set(petersen(), 0)) == 3


def test_solve_q3_mp_witness_is_star():
    cert = solve(hypercube(3), MP, deterministic=True)
    assert cert.value == 3
    q3 = hypercube(3)
    stars = {frozenset(q3.incident(v)) for v in range(q3.n)}
    assert frozenset(cert.witness.members) in stars
    assert cert.evidence.nu_after <= 3


def test_solve_examples():
    assert solve(hypercube(3), mp_s(1)).value == 4
    assert solve(cycle(4), MP).value == 2
    cert = solve(cycle(4), mp_s(1))
    assert math.isinf(cert.value)
    assert cert.witness is None and cert.reason
    cert = solve(cycle(6), AK)
    assert math.isinf(cert.value)


def test_solve_infinity_when_no_near_perfect_matching():
    g = Graph(4, [(0, 1)])  # two isolated vertices: no PM, no APM
    cert = solve(g, MP)
    assert math.isinf(cert.value)
    assert "neither" in cert.reason


def test_solve_budget_decision_mode():
    q3 = hypercube(3)
    under = solve(q3, MP, budget=2)
    assert math.isinf(under.value)
    assert "at most 2" in under.reason
    at = solve(q3, MP, budget=3)
    assert at.value == 3


def test_brute_force_solve_examples():
    assert brute_force_solve(k2(), MP).value == 1
    assert brute_force_solve(hypercube(3), MP).value == 3
    assert math.isinf(brute_force_solve(cycle(6), AK).value)
    with pytest.raises(OracleLimitError):
        brute_force_solve(hypercube(4), MP)  # 32 edges over default limit
    assert brute_force_solve(hypercube(4), MP, limit=32, max_size=4).value == 4


def test_solve_matches_oracle_on_random_graphs():
    for g in random_even_corpus(60, seed=401):
        for kind in (MP, mp_s(1), mp_s(2), AK):
            expect = brute_force_solve(g, kind).value
            got = solve(g, kind).value
            assert got == expect, (g.edges, kind)


def test_solve_matches_oracle_on_labelled_bipartite_graphs():
    # bipartition present routes the solver through incremental
    # augmenting-path re-matching instead of blossom recomputation
    from preclusion import find_bipartition, with_bipartition
    checked = 0
    for g in random_even_corpus(120, seed=408):
        if find_bipartition(g) is None:
            continue
        labelled = with_bipartition(g)
        assert labelled.bipartition is not None
        for kind in (MP, mp_s(1), AK):
            assert solve(labelled, kind).value == brute_force_solve(g, kind).value
        checked += 1
    assert checked >= 30


def test_solve_on_planted_bipartite_instances():
    import random as _random
    rng = _random.Random(409)
    for _ in range(25):
        t = rng.randint(2, 4)
        g = random_bipartite_with_pm(t, rng.choice((0.2, 0.5, 0.8)), seed=rng.randrange(2**32))
        for kind in (MP, mp_s(1)):
            assert solve(g, kind).value == brute_force_solve(g, kind, limit=g.m).value


def test_certificate_soundness_on_random_graphs():
    for g in random_even_corpus(40, seed=402):
        for kind in (MP, mp_s(1), AK):
            cert = solve(g, kind)
            if not cert.feasible:
                continue
            assert len(cert.witness) == cert.value
            if kind.name == "mp":
                assert is_matching_preclusion_set(g, cert.witness)
            elif kind.name == "mps":
                assert is_s_restricted_set(g, cert.witness, kind.s)
            else:
                assert is_anti_kekule_set(g, cert.witness)
            # no smaller set passes: oracle already proved the same minimum
            assert brute_force_solve(g, kind).value == cert.value


def test_deterministic_witness_matches_oracle_witness():
    # brute force scans lexicographically, so both routes must agree exactly
    from preclusion import with_bipartition, find_bipartition
    for g in random_even_corpus(30, seed=403):
        candidates = [g]
        if find_bipartition(g) is not None:
            candidates.append(with_bipartition(g))
        for graph in candidates:
            for kind in (MP, mp_s(1)):
                oracle = brute_force_solve(graph, kind)
                if not oracle.feasible:
                    continue
                cert = solve(graph, kind, deterministic=True)
                assert sorted(cert.witness.members) == sorted(oracle.witness.members)


def test_mp_s_zero_equals_mp():
    for g in random_even_corpus(25, seed=404):
        assert solve(g, mp_s(0)).value == solve(g, MP).value


def test_monotone_chain_with_infinity_top():
    for g in random_even_corpus(40, seed=405):
        values = [solve(g, mp_s(s)).value for s in range(4)]
        assert all(a <= b for a, b in zip(values, values[1:]))


def test_mp_at_most_ak_on_even_order():
    for g in random_even_corpus(40, seed=406):
        mp_value = solve(g, MP).value
        ak_value = solve(g, AK).value
        assert mp_value <= ak_value


def test_trivial_upper_bound():
    for g in random_even_corpus(30, seed=407):
        if g.n % 2 or g.m == 0 or math.isinf(solve(g, MP).value):
            continue
        assert solve(g, MP).value <= g.min_degree()


def test_jobs_do_not_change_value_witness_or_stats():
    q3 = hypercube(3)
    for kind in (MP, mp_s(1), mp_s(2)):
        certs = [solve(q3, kind, deterministic=True, jobs=j) for j in (1, 4)]
        assert certs[0].value == certs[1].value
        assert certs[0].witness.members == certs[1].witness.members
        assert certs[0].stats == certs[1].stats
    q4 = hypercube(4)
    certs = [solve(q4, MP, jobs=j) for j in (1, 3)]
    assert certs[0].value == certs[1].value == 4
    assert certs[0].stats == certs[1].stats


def test_ak_odd_order_precondition():
    with pytest.raises(PreconditionError):
        solve(cycle(5), AK)


def test_ak_disconnected_is_infinite():
    g = Graph(4, [(0, 1), (2, 3)], bipartition=[0, 1, 0, 1])
    cert = solve(g, AK)
    assert math.isinf(cert.value)
    assert "disconnected" in cert.reason


def test_ak_k33():
    g = complete_bipartite(3, 3)
    assert solve(g, AK).value == brute_force_solve(g, AK).value
