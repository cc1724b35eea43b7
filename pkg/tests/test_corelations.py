import itertools
import random

import pytest

from finmet.corelations import (BlockMetric, corelation_from_cospan,
                                doubled_space, gamma_from_subset,
                                is_effective, is_equivalence, is_reflexive,
                                is_symmetric, is_transitive,
                                is_valid_blockmetric, validate_blockmetric,
                                zero_locus)
from finmet.extarith import INF, ZERO, fin
from finmet.harness import GenConfig, gen_equivalence, gen_metric, gen_subset
from finmet.maps import FinMap
from finmet.pushouts import cokernel_pair
from finmet.spaces import FinSpace


def two_point(v=fin(1)):
    return FinSpace(("a", "b"), ((ZERO, v), (v, ZERO)))


def test_block_layout():
    x2 = two_point()
    bm = gamma_from_subset(x2, ("a",))
    assert bm.value("a", 0, "b", 1) == fin(1)
    assert bm.value("b", 0, "b", 1) == fin(2)
    full = bm.as_matrix()
    assert full[0][3] == fin(1)  # (a,0) to (b,1)
    assert doubled_space(x2).labels == ("0:a", "0:b", "1:a", "1:b")


def test_gamma_subset_pinned_values():
    x2 = two_point()
    # through {a}: cross(b,b) = d(b,a) + d(a,b) = 2
    bm_a = gamma_from_subset(x2, ("a",))
    assert bm_a.g01 == ((ZERO, fin(1)), (fin(1), fin(2)))
    # through both points the cross block is d itself
    bm_ab = gamma_from_subset(x2, ("a", "b"))
    assert bm_ab.g01 == x2.dist
    # empty subset: summands stay infinitely far apart
    bm_none = gamma_from_subset(x2, ())
    assert bm_none.g01 == ((INF, INF), (INF, INF))


def test_gamma_subset_always_equivalence_and_effective():
    rng = random.Random(81)
    for t in range(150):
        sp = gen_metric(GenConfig(seed=rng.getrandbits(40), max_points=5))
        subset = gen_subset(sp, rng)
        bm = gamma_from_subset(sp, subset)
        assert is_valid_blockmetric(bm)
        assert is_equivalence(bm)
        assert zero_locus(bm) == subset
        assert is_effective(bm)


def test_zero_locus_matches_cokernel_pair():
    rng = random.Random(83)
    for t in range(100):
        sp = gen_metric(GenConfig(seed=rng.getrandbits(40), max_points=4))
        subset = gen_subset(sp, rng)
        bm = gamma_from_subset(sp, subset)
        from finmet.maps import subspace
        sub, incl = subspace(sp, subset)
        q0, q1, _ = cokernel_pair(incl)
        via_cospan = corelation_from_cospan(q0, q1)
        assert via_cospan == bm


def test_reflexive_symmetric_predicates():
    bm = gamma_from_subset(two_point(), ("a",))
    assert is_reflexive(bm) and is_symmetric(bm)
    # raise one cross entry so the two cross blocks disagree
    g01 = ((ZERO, fin(1)), (fin(1), INF))
    skew = BlockMetric(base=two_point(), g00=two_point().dist, g01=g01,
                       g10=((ZERO, fin(1)), (fin(1), fin(2))),
                       g11=two_point().dist)
    assert not is_symmetric(skew)


def test_transitive_requires_reflexive():
    x2 = two_point()
    zero = tuple(tuple(ZERO for _ in range(2)) for _ in range(2))
    flat = BlockMetric(base=x2, g00=zero, g01=zero, g10=zero, g11=zero)
    with pytest.raises(ValueError):
        is_transitive(flat)


def test_transitivity_counterexample():
    # cross block not closed under min-plus squaring
    x2 = two_point(fin(2))
    g01 = ((fin(2), fin(2)), (fin(2), fin(4)))
    # square of g01 at (b,b): min(2+2, 4+4) = 4 = entry, at (a,a): min(2+2,2+2)=4 > 2
    bm = BlockMetric(base=x2, g00=x2.dist, g01=g01, g10=g01, g11=x2.dist)
    assert is_reflexive(bm)
    assert not is_transitive(bm)
    assert not is_equivalence(bm)


def test_validate_blockmetric_catches_above_coproduct():
    x2 = two_point()
    diag = ((ZERO, INF), (INF, ZERO))
    bm = BlockMetric(base=x2, g00=diag, g11=diag,
                     g01=((INF, fin(1)), (INF, INF)),
                     g10=((INF, INF), (fin(1), INF)))
    bad = validate_blockmetric(bm)
    assert any(v.kind == "above-ambient" for v in bad)


def test_equivalences_on_two_points_exhaustive():
    x2 = two_point()
    grid = (ZERO, fin(1, 2), fin(1), fin(2), INF)
    found = 0
    for entries in itertools.product(grid, repeat=4):
        cross = ((entries[0], entries[1]), (entries[2], entries[3]))
        bm = BlockMetric(base=x2, g00=x2.dist, g01=cross, g10=cross,
                         g11=x2.dist)
        if not (is_valid_blockmetric(bm) and is_equivalence(bm)):
            continue
        found += 1
        assert is_effective(bm)
    assert found >= 3


def test_gen_equivalence_is_equivalence():
    for seed in range(60):
        sp = gen_metric(GenConfig(seed=seed * 7 + 1, max_points=4))
        bm = gen_equivalence(sp, GenConfig(seed=seed))
        assert is_equivalence(bm) and is_effective(bm)


def test_cospan_needs_joint_surjectivity():
    x2 = two_point()
    one = FinSpace(("*", "o"), ((ZERO, INF), (INF, ZERO)))
    q = FinMap(x2, one, ("*", "*"))
    with pytest.raises(ValueError):
        corelation_from_cospan(q, q)
