from __future__ import annotations

from itertools import combinations

import pytest

from smindy.homs import DerivedObject, HomEngine
from smindy.orthogonal import exceptional_order
from smindy.perp import (left_perp_indecomposables, perp_category, perp_indecomposables,
                         perp_quiver, verify_reduction, wide_closure, wide_simples)
from smindy.quiver import dynkin_quiver

D = DerivedObject


def engine(name):
    return HomEngine(dynkin_quiver(name))


def test_a2_perp_of_s1():
    eng = engine("A2")
    # Ext^1(S_1, S_2) = 1 excludes S_2; P_1 = (1,1) receives Hom from S_1
    assert perp_indecomposables(eng, [(1, 0)]) == [(1, 1)]
    assert perp_indecomposables(eng, []) == list(eng.roots)
    assert perp_indecomposables(eng, eng.quiver.simples) == []


def test_wide_simples_examples():
    eng = engine("A2")
    assert wide_simples(eng, [(1, 1)]) == [(1, 1)]
    assert sorted(wide_simples(eng, [(1, 1), (0, 1)])) == sorted(eng.quiver.simples)
    assert sorted(wide_simples(eng, list(eng.quiver.simples))) == sorted(eng.quiver.simples)
    eng3 = engine("A3")
    # P_1 and P_3 span the wide subcategory with simples P_3 = S_3 and the cokernel (1,1,0)
    assert sorted(wide_simples(eng3, [(1, 1, 1), (0, 0, 1)])) == [(0, 0, 1), (1, 1, 0)]


def test_perp_quivers():
    eng = engine("A3")
    q = perp_quiver(eng, [(1, 0, 0)])
    assert q.type_name == "A2" and len(q.arrows) == 1
    assert perp_quiver(eng, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]).n == 0
    d4 = engine("D4")
    # the perp of the projective at the branch vertex deletes that vertex
    assert perp_quiver(d4, [d4.quiver.projectives[1]]).type_name == "A1xA1xA1"
    # the perp of the branch simple is of type A_3, not three isolated vertices
    cat = perp_category(d4, [(0, 1, 0, 0)])
    assert cat.quiver.type_name == "A3"
    assert sorted(cat.simples) == [(0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 0)]


def _exceptional_subsets(eng, max_size):
    for k in range(1, max_size + 1):
        for c in combinations(eng.roots, k):
            if exceptional_order(eng, [D(r) for r in c]) is not None:
                yield list(c)


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_rank_law_idempotence_and_uniqueness(name):
    eng = engine(name)
    for e in _exceptional_subsets(eng, 2):
        perp = perp_indecomposables(eng, e)
        cat = perp_category(eng, e)  # raises unless exactly one simple set exists
        assert cat.rank == eng.n - len(e)
        assert perp_indecomposables(eng, left_perp_indecomposables(eng, perp)) == perp
        assert set(e) <= set(wide_closure(eng, e))
        assert len(wide_simples(eng, e)) == len(e)
        q = cat.quiver
        assert q.is_dynkin
        # embedded perp roots are exactly the perp indecomposables
        assert sorted(cat.embed_root(r) for r in q.positive_roots) == sorted(perp)


def test_non_exceptional_generators_rejected():
    eng = engine("A2")
    with pytest.raises(ValueError):
        perp_category(eng, [(1, 0), (0, 1), (1, 1)])


@pytest.mark.parametrize("name", ["A2", "A3"])
def test_reduction_single_simples(name):
    eng = engine(name)
    for s in eng.quiver.simples:
        report = verify_reduction(eng, [D(s)], 1)
        assert report.passed, report.to_dict()
        assert report.counts["ambient"] == report.counts["perp"]


def test_reduction_complete_collection():
    eng = engine("A2")
    report = verify_reduction(eng, [D((1, 0)), D((0, 1))], 1)
    assert report.passed and report.counts["ambient"] == report.counts["perp"] == 1


def test_reduction_d4_and_shifted_generators_rejected():
    eng = engine("D4")
    assert verify_reduction(eng, [D((0, 1, 0, 0))], 1).passed
    with pytest.raises(ValueError):
        verify_reduction(eng, [D((0, 1, 0, 0), 1)], 1)
