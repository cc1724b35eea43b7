import random

import pytest

from finmet.extarith import INF, ZERO, fin
from finmet.harness import GenConfig, gen_metric
from finmet.spaces import (FinPreorder, FinSpace, is_separated,
                           is_valid_metric, metric_to_order, metric_violations,
                           order_to_metric, sep_reflection, symmetrize,
                           validate_metric, zero_classes)


def two_point(v=fin(1)):
    return FinSpace(("a", "b"), ((ZERO, v), (v, ZERO)))


def test_constructor_shape_checks():
    with pytest.raises(ValueError):
        FinSpace(("a", "a"), ((ZERO, ZERO), (ZERO, ZERO)))
    with pytest.raises(ValueError):
        FinSpace(("a", "b"), ((ZERO,),))


def test_valid_metric_no_violations():
    assert validate_metric(two_point()) == []
    assert is_valid_metric(two_point(INF))


def test_diagonal_violation_reported():
    sp = FinSpace(("a",), ((fin(1),),))
    bad = validate_metric(sp)
    assert [v.kind for v in bad] == ["nonzero-diagonal"]
    assert bad[0].points == ("a",)


def test_triangle_violation_reported():
    sp = FinSpace(("a", "b", "c"), (
        (ZERO, fin(1), fin(5)),
        (fin(1), ZERO, fin(1)),
        (fin(5), fin(1), ZERO)))
    kinds = {v.kind for v in validate_metric(sp)}
    assert kinds == {"triangle"}
    witnesses = {v.points for v in validate_metric(sp)}
    assert ("a", "b", "c") in witnesses


def test_asymmetric_distances_allowed():
    sp = FinSpace(("a", "b"), ((ZERO, fin(1)), (fin(2), ZERO)))
    assert validate_metric(sp) == []
    assert is_separated(sp)


def test_separation():
    assert is_separated(two_point())
    glued = FinSpace(("a", "b"), ((ZERO, ZERO), (ZERO, ZERO)))
    assert not is_separated(glued)
    # one-sided zero does not break separation
    oneway = FinSpace(("a", "b"), ((ZERO, ZERO), (fin(1), ZERO)))
    assert is_separated(oneway)


def test_sep_reflection_collapses_zero_pairs():
    sp = FinSpace(("a", "b", "c"), (
        (ZERO, ZERO, fin(1)),
        (ZERO, ZERO, fin(1)),
        (fin(1), fin(1), ZERO)))
    q, proj = sep_reflection(sp)
    assert q.labels == ("[a]", "[c]")
    assert proj.assignment == ("[a]", "[a]", "[c]")
    assert q.d("[a]", "[c]") == fin(1)
    assert is_separated(q)


def test_sep_reflection_identity_on_separated():
    rng = random.Random(3)
    for t in range(100):
        sp = gen_metric(GenConfig(seed=rng.getrandbits(40), max_points=5))
        q, proj = sep_reflection(sp)
        assert q.n == sp.n
        assert q.dist == sp.dist


def test_zero_classes_first_occurrence_order():
    mat = ((ZERO, INF, ZERO), (INF, ZERO, INF), (ZERO, INF, ZERO))
    classes, assigned = zero_classes(("x", "y", "z"), mat)
    assert classes == [(0, 2), (1,)]
    assert assigned == [0, 1, 0]


def test_symmetrize():
    sp = FinSpace(("a", "b"), ((ZERO, fin(1)), (fin(3), ZERO)))
    sym = symmetrize(sp)
    assert sym.d("a", "b") == fin(3) and sym.d("b", "a") == fin(3)
    assert validate_metric(sym) == []


def test_order_metric_round_trip():
    rel = ((True, True, False),
           (False, True, False),
           (True, True, True))
    pre = FinPreorder(("x", "y", "z"), rel)
    assert pre.preorder_violations() == []
    sp = order_to_metric(pre)
    assert sp.d("x", "y") == ZERO and sp.d("y", "x") == INF
    assert validate_metric(sp) == []
    back = metric_to_order(sp)
    assert back.rel == pre.rel


def test_order_to_metric_rejects_non_preorder():
    rel = ((True, True), (False, False))  # y not reflexive
    with pytest.raises(ValueError):
        order_to_metric(FinPreorder(("x", "y"), rel))


def test_metric_to_order_always_preorder():
    rng = random.Random(9)
    for t in range(100):
        sp = gen_metric(GenConfig(seed=rng.getrandbits(40), max_points=5))
        assert metric_to_order(sp).preorder_violations() == []


def test_metric_violations_on_raw_matrix():
    bad = metric_violations(("p", "q"), ((ZERO, ZERO), (fin(1), fin(2))))
    assert any(v.kind == "nonzero-diagonal" and v.points == ("q",) for v in bad)
