from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from oracles import DEGREES, brute_force_smc, positive_fuss_catalan
from smindy.homs import DerivedObject, HomEngine
from smindy.orbit import OrbitCategory
from smindy.orthogonal import (BudgetExceeded, SMSModel, cliques, enumerate_inf_orthogonal,
                               enumerate_smc, enumerate_smc_in_fd, enumerate_smc_window,
                               enumerate_sms, exceptional_order, generates, is_inf_orthogonal,
                               is_smc, is_smc_oracle, is_sms)
from smindy.quiver import dynkin_quiver

D = DerivedObject


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 9), st.data())
def test_cliques_match_brute_force(n, data):
    edges = data.draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
    adj = [0] * n
    for a, b in edges:
        if a != b:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    got = list(cliques(adj))
    want = [c for k in range(1, n + 1) for c in combinations(range(n), k)
            if all(adj[a] >> b & 1 for a, b in combinations(c, 2))]
    assert sorted(got) == sorted(want)
    assert len(set(got)) == len(got)


def test_a2_prototype_smc():
    eng = HomEngine(dynkin_quiver("A2"))
    s = [D((1, 0)), D((0, 1))]
    assert is_smc(eng, s) and is_smc_oracle(eng, s)
    assert not is_smc(eng, [D((1, 0))])  # does not generate
    assert not is_inf_orthogonal(eng, [D((1, 0)), D((1, 1))])  # P_1 maps onto S_1
    order = exceptional_order(eng, s)
    assert order is not None and eng.is_exceptional_sequence(order)


@pytest.mark.parametrize("name,lo,hi", [("A2", 0, 1), ("A2", 0, 2), ("A3", 0, 1), ("A2", -1, 1)])
def test_smc_enumeration_matches_brute_force(name, lo, hi):
    eng = HomEngine(dynkin_quiver(name))
    objs = eng.objects(range(lo, hi + 1))
    assert enumerate_smc(eng, objs) == brute_force_smc(eng, objs, is_smc_oracle)


@pytest.mark.parametrize("name,w", [(t, w) for t in ("A2", "A3", "A4", "D4") for w in (1, 2)])
def test_smc_and_sms_counts(name, w):
    q = dynkin_quiver(name)
    want = positive_fuss_catalan(DEGREES[name], q.coxeter_number, w)
    assert len(enumerate_smc_in_fd(q, w)) == want
    assert len(enumerate_sms(q, w)) == want


def test_sms_pruning_matches_unpruned_search():
    for w in (1, 2, 3):
        cat = OrbitCategory(dynkin_quiver("A2"), w)
        model = SMSModel(cat)
        brute = sorted(tuple(cat.objects[i] for i in c)
                       for k in range(1, model.size + 1) for c in combinations(range(model.size), k)
                       if model.is_sms_indices(c))
        assert enumerate_sms(cat) == brute
        assert all(len(c) == 2 for c in brute)


def test_sms_examples():
    cat = OrbitCategory(dynkin_quiver("A2"), 1)
    assert is_sms(cat, [D((1, 0)), D((0, 1))])
    assert not is_sms(cat, [D((1, 0))])
    # the same orbit object twice is not a collection of distinct objects
    assert not is_sms(cat, [D((1, 0)), cat.f_power(D((1, 0)), 1)])


def test_generation_needs_every_vertex():
    eng = HomEngine(dynkin_quiver("A3"))
    assert not generates(eng, [D((1, 0, 0)), D((0, 1, 0))])
    assert generates(eng, [D(s) for s in eng.quiver.simples])


def test_window_counts():
    # every SMC with objects in degrees 0..w corresponds to one NC_w tuple
    assert len(enumerate_smc_window(dynkin_quiver("A2"), 0, 1)) == 5
    assert len(enumerate_smc_window(dynkin_quiver("A3"), 0, 1)) == 14


def test_inf_orthogonal_collections_are_closed_under_subsets():
    eng = HomEngine(dynkin_quiver("A3"))
    found = set(enumerate_inf_orthogonal(eng, eng.objects(range(0, 2))))
    for c in found:
        assert is_inf_orthogonal(eng, c)
        for k in range(1, len(c)):
            for sub in combinations(c, k):
                assert tuple(sub) in found


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_smc_in_fd(dynkin_quiver("A3"), 1, budget=10)
    with pytest.raises(BudgetExceeded):
        enumerate_sms(dynkin_quiver("A3"), 1, budget=10)


def test_parallel_filter_is_identical():
    q = dynkin_quiver("A3")
    assert enumerate_smc_in_fd(q, 2, jobs=2) == enumerate_smc_in_fd(q, 2)
    assert enumerate_sms(q, 2, jobs=2) == enumerate_sms(q, 2)
