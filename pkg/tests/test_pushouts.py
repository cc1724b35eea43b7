import random

import pytest

from finmet.extarith import INF, ZERO, fin
from finmet.harness import GenConfig, gen_metric
from finmet.maps import FinMap, compose, is_embedding, subspace
from finmet.pushouts import (cokernel_pair, pushout_along_embedding,
                             pushout_closure_oracle, pushout_of_embeddings,
                             verify_pushout_universal)
from finmet.limits import is_pullback_square
from finmet.spaces import FinSpace, is_separated, validate_metric


def worked_instance():
    a = FinSpace(("s",), ((ZERO,),))
    x = FinSpace(("p", "x"), ((ZERO, fin(1)), (fin(1), ZERO)))
    b = FinSpace(("q", "b"), ((ZERO, fin(2)), (fin(2), ZERO)))
    return FinMap(a, x, ("p",)), FinMap(a, b, ("q",))


def rand_instance(rng, max_points=5):
    x = gen_metric(GenConfig(seed=rng.getrandbits(40), max_points=max_points))
    keep = [lab for lab in x.labels if rng.random() < 0.5]
    _, i = subspace(x, keep)
    b = gen_metric(GenConfig(seed=rng.getrandbits(40),
                             max_points=rng.randint(len(keep), max_points)
                             if keep else max_points))
    if b.n == 0 and i.source.n > 0:
        return None
    f = FinMap(i.source, b,
               tuple(rng.choice(b.labels) for _ in i.source.labels))
    from finmet.maps import is_nonexpansive
    if not is_nonexpansive(f):
        return None
    return i, f


def test_worked_instance_pinned():
    i, f = worked_instance()
    result = pushout_along_embedding(i, f)
    g = result.gamma
    # glue point: q is identified with p, so they sit at distance 0
    assert g.value("0:q", "1:p") == ZERO and g.value("1:p", "0:q") == ZERO
    assert g.value("0:q", "1:x") == fin(1)
    assert g.value("1:x", "0:b") == fin(3)   # x -> p=q -> b
    apex = result.apex
    assert apex.labels == ("[0:q]", "[0:b]", "[1:x]")
    assert apex.d("[1:x]", "[0:b]") == fin(3)
    assert apex.d("[0:q]", "[1:x]") == fin(1)
    assert result.square.commutes()


def test_formula_agrees_with_closure_oracle():
    rng = random.Random(61)
    done = 0
    while done < 150:
        inst = rand_instance(rng)
        if inst is None:
            continue
        done += 1
        i, f = inst
        result = pushout_along_embedding(i, f)
        oracle = pushout_closure_oracle(i, f)
        assert result.gamma.gamma == oracle.gamma
        assert is_separated(result.apex)
        assert validate_metric(result.apex) == []
        assert result.square.commutes()


def test_empty_glue_gives_coproduct():
    x = FinSpace(("p",), ((ZERO,),))
    b = FinSpace(("q",), ((ZERO,),))
    empty = FinSpace((), ())
    i = FinMap(empty, x, ())
    f = FinMap(empty, b, ())
    result = pushout_along_embedding(i, f)
    assert result.gamma.value("0:q", "1:p") == INF
    assert result.apex.n == 2


def test_universal_property_sampled():
    rng = random.Random(67)
    done = 0
    while done < 25:
        inst = rand_instance(rng, max_points=4)
        if inst is None:
            continue
        done += 1
        i, f = inst
        result = pushout_along_embedding(i, f)
        assert verify_pushout_universal(result, trials=40,
                                        seed=rng.getrandbits(40))


def test_requires_embedding():
    x2 = FinSpace(("a", "b"), ((ZERO, fin(1)), (fin(1), ZERO)))
    one = FinSpace(("*",), ((ZERO,),))
    squash = FinMap(x2, one, ("*", "*"))
    with pytest.raises(ValueError):
        pushout_along_embedding(squash, squash)


def test_pushout_of_embeddings_legs_are_embeddings():
    rng = random.Random(71)
    for t in range(100):
        w = gen_metric(GenConfig(seed=rng.getrandbits(40), max_points=5))
        keep0 = [lab for lab in w.labels if rng.random() < 0.7]
        keep1 = [lab for lab in w.labels if rng.random() < 0.7]
        shared = [lab for lab in keep0 if lab in keep1]
        y0, _ = subspace(w, keep0)
        y1, _ = subspace(w, keep1)
        x, _ = subspace(w, shared)
        f0 = FinMap(x, y0, tuple(x.labels))
        f1 = FinMap(x, y1, tuple(x.labels))
        result = pushout_of_embeddings(f0, f1)
        assert is_embedding(result.leg_b)
        assert is_embedding(result.leg_x)
        assert result.square.commutes()
        assert is_pullback_square(result.square)


def test_pushout_of_embeddings_matches_general_route():
    rng = random.Random(73)
    for t in range(100):
        w = gen_metric(GenConfig(seed=rng.getrandbits(40), max_points=4))
        keep0 = [lab for lab in w.labels if rng.random() < 0.7]
        keep1 = [lab for lab in w.labels if rng.random() < 0.7]
        shared = [lab for lab in keep0 if lab in keep1]
        y0, _ = subspace(w, keep0)
        y1, _ = subspace(w, keep1)
        x, _ = subspace(w, shared)
        f0 = FinMap(x, y0, tuple(x.labels))
        f1 = FinMap(x, y1, tuple(x.labels))
        special = pushout_of_embeddings(f0, f1)
        general = pushout_along_embedding(f1, f0)
        assert special.gamma.gamma == general.gamma.gamma


def test_cokernel_pair_diagonal():
    x2 = FinSpace(("a", "b"), ((ZERO, fin(1)), (fin(1), ZERO)))
    one = FinSpace(("a",), ((ZERO,),))
    i = FinMap(one, x2, ("a",))
    q0, q1, apex = cokernel_pair(i)
    # the two copies of b stay apart, the two copies of a merge
    assert q0("a") == q1("a")
    assert q0("b") != q1("b")
    assert apex.n == 3
    assert apex.d(q0("b"), q1("b")) == fin(2)  # b -> a -> b'
