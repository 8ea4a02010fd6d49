import json
import random

import pytest

from ghslab import (
    HOLDS,
    NOT_APPLICABLE,
    ConjectureCase,
    Dag,
    InvalidParamsError,
    NonConstantDiagonalError,
    NotBipartiteError,
    NotPrimeError,
    NotTopologicalError,
    append_counterexample_log,
    bipartite_complete,
    bipartite_matching,
    build,
    check_b_family,
    check_bipartite_formula,
    check_c_family,
    check_conjecture,
    check_cyclic_cokernel,
    check_exact_largest,
    check_largest_bound,
    check_pairwise_coprime,
    check_prime_bipartite,
    complete_graph,
    conjecture_exhaustive,
    family_b,
    family_c,
    family_reports,
    instance_descriptor,
    path_graph,
    replay_counterexample_log,
    snf,
    sweep_bipartite,
    sweep_bound_and_exact,
    sweep_cyclic_random,
)


def test_cyclic_cokernel_examples():
    rep = check_cyclic_cokernel(build((2, 5, 3), Dag(3, [(1, 2), (2, 3)])))
    assert rep.verdict == HOLDS
    assert rep.witness["snf"] == ["1", "1", "30"]

    rep = check_cyclic_cokernel(build((6, 9, 12), complete_graph(3)))
    assert rep.verdict == NOT_APPLICABLE
    assert rep.witness["snf"] == ["1", "2", "324"]

    rep = check_cyclic_cokernel(build((4,) * 5, path_graph(5)))
    assert rep.verdict == HOLDS
    assert rep.witness["snf"] == ["1", "1", "1", "1", "1024"]


def test_cyclic_cokernel_flags_partial_path():
    rep = check_cyclic_cokernel(build((2, 4, 6, 8), Dag(4, [(1, 2), (2, 3)])))
    assert rep.verdict == NOT_APPLICABLE
    assert "proper vertex subset" in rep.witness["note"]


def test_cyclic_cokernel_spanning_path_with_extra_edges():
    # constant diagonal plus a full spine: cyclic even with extra edges
    g = Dag(4, [(1, 2), (2, 3), (3, 4), (1, 3), (1, 4)])
    rep = check_cyclic_cokernel(build((6,) * 4, g))
    assert rep.verdict == HOLDS
    assert "constant-diagonal-with-spanning-path" in rep.witness["hypotheses"]


def test_pairwise_coprime_examples():
    rep = check_pairwise_coprime(build((2, 5, 3), Dag(3, [(2, 3)])))
    assert rep.verdict == HOLDS
    assert rep.witness["delta_next_to_last"] == "1"

    rep = check_pairwise_coprime(build((1, 1, 1), Dag(3, [(1, 2)])))
    assert rep.verdict == HOLDS
    assert rep.witness["snf"] == ["1", "1", "1"]

    rep = check_pairwise_coprime(build((6, 9, 12), complete_graph(3)))
    assert rep.verdict == NOT_APPLICABLE


def test_largest_bound_examples():
    rep = check_largest_bound(build((6,) * 4, family_b(2)))
    assert rep.verdict == HOLDS
    assert rep.witness["snf"][-1] == "108" and rep.witness["bound"] == "216"

    rep = check_largest_bound(build((6,) * 7, family_b(5)))
    assert rep.verdict == HOLDS
    assert rep.witness["snf"][-1] == "216"

    rep = check_largest_bound(build((7,) * 4, Dag(4, [])))
    assert rep.verdict == HOLDS
    assert rep.witness["h"] == 1 and rep.witness["snf"] == ["7"] * 4

    with pytest.raises(NonConstantDiagonalError):
        check_largest_bound(build((2, 3), Dag(2, [])))


def test_exact_largest_examples():
    rep = check_exact_largest(build((6,) * 3, family_b(1)))
    assert rep.verdict == HOLDS
    assert rep.witness["snf"][-1] == "216"

    rep = check_exact_largest(build((6,) * 5, family_b(3)))
    assert rep.verdict == NOT_APPLICABLE
    assert rep.witness["snf"][-1] == "72"

    for m in (2, 5, 9):
        rep = check_exact_largest(build((m,) * 4, path_graph(4)))
        assert rep.verdict == HOLDS
        assert rep.witness["snf"][-1] == str(m**4)


def test_b_family():
    # the m = 6 table, plus the gcd pattern at another modulus
    for i, largest in ((1, 216), (2, 108), (3, 72), (4, 108), (5, 216)):
        rep = check_b_family(i, 6)
        assert rep.verdict == HOLDS
        assert rep.witness["expected_largest"] == str(largest)
    assert check_b_family(4, 10).verdict == HOLDS
    with pytest.raises(InvalidParamsError):
        check_b_family(0, 6)


def test_c_family():
    rep = check_c_family(2, 6)
    assert rep.verdict == HOLDS
    assert rep.witness["snf"] == ["1", "1", "2", "18", "216"]

    rep = check_c_family(3, 6)
    assert rep.verdict == HOLDS
    assert rep.witness["snf"] == ["1", "1", "1", "3", "12", "1296"]

    # frozen from the exhaustive-minors oracle: nonunits {25, 25}
    rep = check_c_family(1, 5)
    assert rep.verdict == HOLDS
    assert rep.witness["snf"] == ["1", "1", "25", "25"]

    with pytest.raises(InvalidParamsError):
        check_c_family(2, 1)


def test_bipartite_formula_examples():
    parts = ((1, 2, 3), (4, 5, 6))
    rep = check_bipartite_formula(build((6,) * 6, bipartite_matching(3, 3)), parts)
    assert rep.verdict == HOLDS
    assert rep.witness["predicted"] == ["1", "1", "1", "36", "36", "36"]

    rep = check_bipartite_formula(build((6,) * 6, bipartite_complete(3, 3)), parts)
    assert rep.verdict == HOLDS
    assert rep.witness["predicted"] == ["1", "6", "6", "6", "6", "36"]
    assert rep.witness["rank"] == 1

    rep = check_bipartite_formula(build((5,) * 4, Dag(4, [])), ((1, 2), (3, 4)))
    assert rep.verdict == HOLDS
    assert rep.witness["predicted"] == ["5"] * 4


def test_bipartite_validation():
    inst = build((6,) * 3, Dag(3, [(1, 2)]))
    with pytest.raises(NotBipartiteError):
        check_bipartite_formula(inst, ((1, 2), (3,)))
    with pytest.raises(NotBipartiteError):
        check_bipartite_formula(build((6,) * 3, Dag(3, [])), ((1,), (2,)))
    with pytest.raises(NonConstantDiagonalError):
        check_bipartite_formula(build((2, 3), bipartite_matching(1, 1)), ((1,), (2,)))


def test_prime_bipartite_examples():
    rep = check_prime_bipartite(build((3,) * 4, bipartite_matching(2, 2)), ((1, 2), (3, 4)))
    assert rep.verdict == HOLDS
    assert rep.witness["snf"] == ["1", "1", "9", "9"]

    rep = check_prime_bipartite(build((2,) * 6, bipartite_complete(3, 3)), ((1, 2, 3), (4, 5, 6)))
    assert rep.verdict == HOLDS
    assert rep.witness["snf"] == ["1", "2", "2", "2", "2", "4"]
    assert rep.witness["r_p"] == 1

    rep = check_prime_bipartite(build((5,) * 4, Dag(4, [])), ((1, 2), (3, 4)))
    assert rep.verdict == HOLDS
    assert rep.witness["snf"] == ["5"] * 4

    with pytest.raises(NotPrimeError):
        check_prime_bipartite(build((4,) * 4, bipartite_matching(2, 2)), ((1, 2), (3, 4)))


def test_conjecture_examples():
    case = check_conjecture(path_graph(3), 5)
    assert case.holds and case.r_p == 2 and case.alphas == (1, 1, 125)

    case = check_conjecture(Dag(3, []), 2)
    assert case.holds and case.r_p == 0 and case.alphas == (2, 2, 2)
    assert "vacuous" in case.note

    with pytest.raises(NotPrimeError):
        check_conjecture(path_graph(3), 4)
    with pytest.raises(NotTopologicalError):
        check_conjecture(Dag(3, [(2, 1)]), 3)


def test_conjecture_exhaustive_small():
    cases = list(conjecture_exhaustive(1, 3, (2, 3)))
    assert len(cases) == (1 + 2 + 8) * 2
    assert all(c.holds for c in cases)


def test_counterexample_log_roundtrip(tmp_path):
    log = tmp_path / "violations.jsonl"
    honest = check_conjecture(path_graph(3), 5)
    fabricated = ConjectureCase(
        n=honest.n,
        edges=honest.edges,
        p=honest.p,
        r_p=honest.r_p,
        alphas=honest.alphas,
        holds=False,
        note="fabricated for replay testing",
    )
    assert append_counterexample_log(log, [honest]) == 0
    assert append_counterexample_log(log, [fabricated]) == 1
    replayed = replay_counterexample_log(log)
    assert len(replayed) == 1
    record, still_violated = replayed[0]
    assert record["p"] == 5
    # the fabricated record does not reproduce: replay exposes it
    assert still_violated is False


def test_sweeps_are_clean():
    assert all(r.verdict != "violated" for r in sweep_bound_and_exact(3, (2, 3, 4)))
    assert all(
        r.verdict != "violated" for r in sweep_bipartite(2, 2, (2, 3), (2, 3))
    )
    rng = random.Random(1)
    assert all(r.verdict != "violated" for r in sweep_cyclic_random(50, rng))


def test_bound_never_violated_on_random_instances():
    # the bound is a theorem: any violated verdict is a build bug
    rng = random.Random(99)
    from ghslab import sweep_bound_random

    reports = list(sweep_bound_random(1000, rng, n_range=(2, 7), m_range=(2, 12)))
    assert len(reports) == 2000
    bound_reports = [r for r in reports if r.claim == "largest-invariant-factor-bound"]
    assert len(bound_reports) == 1000
    assert all(r.verdict == HOLDS for r in bound_reports)


def test_family_reports_all_hold():
    reports = list(family_reports(6, 5))
    assert len(reports) == 5 * 3 + 5
    assert all(r.verdict != "violated" for r in reports)


def test_report_serialization_is_stable():
    rep = check_pairwise_coprime(build((2, 5, 3), Dag(3, [(2, 3)])))
    blob = rep.to_json()
    parsed = json.loads(blob)
    assert parsed["claim"] == "pairwise-coprime-single-nonunit"
    assert parsed["instance"] == instance_descriptor(build((2, 5, 3), Dag(3, [(2, 3)])))
    assert blob == rep.to_json()


def shift_edges(g, offset):
    return [(i + offset, j + offset) for i, j in g.edges]


def test_disjoint_union_multisets_for_prime_diagonal():
    # experimental: for a prime constant diagonal the divisor multiset of a
    # disjoint union is the merge of the parts' multisets
    p = 5
    g1, g2 = family_c(2), family_b(2)
    union = Dag(g1.n + g2.n, list(g1.edges) + shift_edges(g2, g1.n))
    merged = sorted(
        list(snf(build((p,) * g1.n, g1).matrix).diagonal)
        + list(snf(build((p,) * g2.n, g2).matrix).diagonal)
    )
    combined = sorted(snf(build((p,) * union.n, union).matrix).diagonal)
    assert combined == merged


def test_disjoint_union_fails_for_composite_diagonal():
    # the m = 6 spine families force coprime nonunit divisors 2 and 3, which
    # no single divisibility chain can carry
    g1, g2 = family_c(2), family_c(3)
    union = Dag(g1.n + g2.n, list(g1.edges) + shift_edges(g2, g1.n))
    merged = sorted(
        x
        for x in (
            list(snf(build((6,) * g1.n, g1).matrix).diagonal)
            + list(snf(build((6,) * g2.n, g2).matrix).diagonal)
        )
        if x != 1
    )
    combined = sorted(
        x for x in snf(build((6,) * union.n, union).matrix).diagonal if x != 1
    )
    assert combined != merged
    assert {2, 3} <= set(merged)
