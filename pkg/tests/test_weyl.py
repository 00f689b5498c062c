from __future__ import annotations

import random
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

from oracles import DEGREES, fuss_catalan, positive_fuss_catalan, reflection_length_bfs, s3_nc_tuples
from smindy.quiver import KRONECKER, NotDynkinError, dynkin_quiver
from smindy.weyl import WeylGroup

ORDERS = {"A2": 6, "A3": 24, "A4": 120, "D4": 192}
_GROUPS: dict = {}


def group(name) -> WeylGroup:
    if name not in _GROUPS:
        _GROUPS[name] = WeylGroup(dynkin_quiver(name))
    return _GROUPS[name]


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_group_order(name):
    assert len(group(name).elements) == ORDERS[name]


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
def test_absolute_length_matches_bfs(name):
    g = group(name)
    dist = reflection_length_bfs(g)
    assert len(dist) == len(g.elements)
    for u, d in dist.items():
        assert g.abs_length(u) == d


def test_coxeter_element():
    g = group("A3")
    c = g.coxeter_element
    assert g.abs_length(c) == 3
    # c has order h
    p = g.identity
    for k in range(1, 5):
        p = p * c
        assert (p == g.identity) == (k == 4)


@pytest.mark.parametrize("name,w", [(t, w) for t in ("A2", "A3", "A4", "D4") for w in (1, 2)]
                         + [("A2", 3), ("A3", 3)])
def test_nc_counts_are_fuss_catalan(name, w):
    g = group(name)
    h = g.quiver.coxeter_number
    assert len(g.nc_tuples(w)) == fuss_catalan(DEGREES[name], h, w)
    assert len(g.positive_nc_tuples(w)) == positive_fuss_catalan(DEGREES[name], h, w)


@pytest.mark.parametrize("w", [1, 2, 3])
def test_a2_against_symmetric_group(w):
    brute = s3_nc_tuples(w)
    g = group("A2")
    assert len(g.nc_tuples(w)) == len(brute)
    assert len(g.positive_nc_tuples(w)) == sum(p for _, p in brute)
    if w == 1:
        assert (len(brute), sum(p for _, p in brute)) == (5, 2)


def test_nc_tuples_multiply_to_c():
    g = group("A3")
    for t in g.nc_tuples(2):
        assert reduce(lambda a, b: a * b, t) == g.coxeter_element
        assert sum(g.abs_length(u) for u in t) == 3


def test_support_and_parabolic():
    g = group("A3")
    s1, s2, s3 = g.simple
    assert g.support(s1 * s3) == {1, 3}
    assert g.in_proper_parabolic(s1 * s3)
    assert not g.in_proper_parabolic(g.coxeter_element)
    # a reflection that needs every letter
    t = g.reflection((1, 1, 1)).elem
    assert g.support(t) == {1, 2, 3}


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A3", "D4"]), st.integers(0, 10**6))
def test_t_reduced_expressions(name, seed):
    g = group(name)
    rng = random.Random(seed)
    u = rng.choice(g.elements)
    roots = g.t_reduced_expression(u, rng)
    assert len(roots) == g.abs_length(u)
    prod = reduce(lambda a, b: a * b, (g.reflection(r).elem for r in roots), g.identity)
    assert prod == u
    # supports from different descent choices agree
    assert g.support(u, rng) == g.support(u)


def test_all_t_reduced_expressions_of_c_in_a2():
    g = group("A2")
    words = g.t_reduced_expressions(g.coxeter_element)
    assert len(words) == 3  # h = 3 reduced T-words of a Coxeter element in rank 2


def test_non_dynkin_rejected():
    with pytest.raises(NotDynkinError):
        WeylGroup(KRONECKER)
    with pytest.raises(ValueError):
        group("A2").nc_tuples(0)
