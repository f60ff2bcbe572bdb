"""Smoke tests for the agsync Python module."""

import json

import pytest

import agsync


def test_cerny_word():
    a = agsync.cerny(4)
    assert a.n == 4 and a.k == 2
    word = agsync.shortest_reset_word(a)
    assert word == [0, 1, 1, 1, 0, 1, 1, 1, 0]
    assert agsync.is_synchronizing(a)
    assert agsync.is_strongly_connected(a)


def test_fig1():
    a = agsync.fig1()
    c = agsync.classify(a)
    assert c["verdict"] == "almost-group"
    assert c["dangling_state"] == 1
    assert not agsync.is_strongly_connected(a)
    assert agsync.summary(a).startswith("almost-group; dangling state 1 (letter a)")


def test_construction_and_round_trip():
    a = agsync.Automaton([[1, 1], [0, 0]])
    assert a.rows() == [[1, 1], [0, 0]]
    assert agsync.Automaton.from_json(a.to_json()) == a
    assert a.letter_map(0) == [1, 0]
    with pytest.raises(agsync.OutOfRangeEntry):
        agsync.Automaton([[2, 0], [0, 0]])
    with pytest.raises(agsync.Error):
        agsync.Automaton.from_json("{")
    assert "digraph" in a.to_dot()


def test_counts_are_python_ints():
    assert agsync.count_G(5, 2) == 57600
    assert agsync.count_G(30, 2) == 29 * __import__("math").factorial(30) ** 2
    assert agsync.N_term(5, 2, ell=1, b=1, s=3) == 2160
    assert agsync.lower_bound(6, 2) == 51120
    assert agsync.Z(4, 2) == 240
    assert agsync.non_sync_asymptote(20, 2) == pytest.approx(0.0025)


def test_family_members():
    family = agsync.generate_F(5, 2)
    assert len(family) == agsync.lower_bound(5, 2)
    for a in family[:50]:
        assert agsync.is_member_F(a)
        assert not agsync.is_synchronizing(a)
        bs = agsync.bs_decomposition(a)
        assert bs["signature"] == {"ell": 1, "b": 1, "s": 3}
        assert agsync.dangling_stable_pair(a) is not None
        assert len(agsync.stability_classes(a)) == 4
        assert agsync.factor_automaton(a).n == 4


def test_pair_analysis_partitions_pairs():
    a = agsync.generate_F(4, 2)[0]
    p = agsync.pair_analysis(a)
    assert len(p["mergeable"]) + len(p["deadlocks"]) == 6
    assert set(p["stable"]) <= set(p["mergeable"])
    assert agsync.f_cliques(a)


def test_sampling_is_reproducible():
    a, r1 = agsync.sample(8, seed=5, stream=2)
    b, r2 = agsync.sample(8, seed=5, stream=2)
    assert a == b and r1 == r2
    assert agsync.is_strongly_connected(a)
    with pytest.raises(agsync.DomainTooSmall):
        agsync.sample(4, k=1)
    with pytest.raises(agsync.RejectionExhausted):
        for stream in range(50):
            agsync.sample(3, stream=stream, max_rejects=1)


def test_montecarlo_and_census():
    e = agsync.montecarlo(5, samples=4000, seed=3)
    assert e["ci_low"] <= e["p_hat"] <= e["ci_high"]
    assert e == agsync.montecarlo(5, samples=4000, seed=3, threads=2)
    c = agsync.census(4)
    assert c["total"] == 1728
    assert all(c["checks"].values())
    with pytest.raises(agsync.BudgetExceeded):
        agsync.census(5, budget=100)
    json.dumps(agsync.analyze(agsync.cerny(5)))
    assert agsync.instance_record(agsync.cerny(3))["checks"]["synchronizing"] is True
