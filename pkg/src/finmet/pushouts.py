"""Explicit pushouts along embeddings.

The pushout of B <- A -> X (with A -> X an embedding) is computed as the
separation quotient of B + X under an explicitly described submetric
gamma; an independent shortest-path closure oracle recomputes gamma from
the raw gluing costs so the two routes can be compared exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .extarith import ZERO, ext_min, ext_min_all
from .limits import Square, coproduct
from .maps import FinMap, compose, is_embedding, is_nonexpansive
from .minplus import minplus_closure
from .quotients import Submetric, quotient_by_submetric
from .spaces import is_separated


@dataclass(frozen=True)
class PushoutResult:
    square: Square       # left: A -> B, top: A -> X, bottom/right: legs into P
    gamma: Submetric     # the submetric on B + X the apex was built from

    @property
    def apex(self):
        return self.square.bottom.target

    @property
    def leg_b(self):
        return self.square.bottom

    @property
    def leg_x(self):
        return self.square.right


def _check_pushout_inputs(i, f):
    if i.source != f.source:
        raise ValueError("pushout legs must share their source")
    if not is_embedding(i):
        raise ValueError("pushout is only computed along an embedding")
    for sp in (i.source, i.target, f.target):
        if not is_separated(sp):
            raise ValueError("pushout requires separated spaces")


def pushout_along_embedding(i, f):
    """Pushout of f: A -> B along the embedding i: A -> X.

    gamma on B + X: within B it is d_B; within X the direct distance
    competes with detours through the glued subspace; mixed entries route
    through a single glue point.  The apex is the separation quotient.
    """
    _check_pushout_inputs(i, f)
    a_space, x_space, b_space = i.source, i.target, f.target
    ia = [x_space.index(i(a)) for a in a_space.labels]
    fa = [b_space.index(f(a)) for a in a_space.labels]
    na = a_space.n

    bx, iota_b, iota_x = coproduct(b_space, x_space)
    nb = b_space.n

    def entry(p, q):
        if p < nb and q < nb:
            return b_space.dist[p][q]
        if p >= nb and q >= nb:
            x, y = p - nb, q - nb
            direct = x_space.dist[x][y]
            detour = ext_min_all(
                x_space.dist[x][ia[s]] + b_space.dist[fa[s]][fa[t]]
                + x_space.dist[ia[t]][y]
                for s in range(na) for t in range(na)
            )
            return ext_min(direct, detour)
        if p < nb:
            b, x = p, q - nb
            return ext_min_all(
                b_space.dist[b][fa[s]] + x_space.dist[ia[s]][x]
                for s in range(na)
            )
        x, b = p - nb, q
        return ext_min_all(
            x_space.dist[x][ia[s]] + b_space.dist[fa[s]][b]
            for s in range(na)
        )

    n = bx.n
    gamma = Submetric(bx, tuple(
        tuple(entry(p, q) for q in range(n)) for p in range(n)
    ))
    proj = quotient_by_submetric(gamma)
    square = Square(left=f, top=i,
                    bottom=compose(iota_b, proj), right=compose(iota_x, proj))
    return PushoutResult(square=square, gamma=gamma)


def pushout_closure_oracle(i, f):
    """Independent recomputation of the pushout submetric.

    Start from the coproduct metric on B + X, add zero-cost arcs between
    f(a) and i(a) for every glue point a, and saturate with the all-pairs
    min-plus closure.  Must agree exactly with the formula route.
    """
    _check_pushout_inputs(i, f)
    a_space, x_space, b_space = i.source, i.target, f.target
    bx, _, _ = coproduct(b_space, x_space)
    nb = b_space.n
    cost = [list(row) for row in bx.dist]
    for a in a_space.labels:
        p = b_space.index(f(a))
        q = nb + x_space.index(i(a))
        cost[p][q] = ZERO
        cost[q][p] = ZERO
    return Submetric(bx, minplus_closure(cost))


def pushout_of_embeddings(f0, f1):
    """Pushout of two embeddings out of a common space.

    Same-summand distances survive unchanged; cross distances route once
    through the shared subspace.  Both legs into the apex are embeddings
    and the resulting square is also a pullback.
    """
    if f0.source != f1.source:
        raise ValueError("pushout legs must share their source")
    if not (is_embedding(f0) and is_embedding(f1)):
        raise ValueError("both legs must be embeddings")
    for sp in (f0.source, f0.target, f1.target):
        if not is_separated(sp):
            raise ValueError("pushout requires separated spaces")
    x_space, y0, y1 = f0.source, f0.target, f1.target
    i0 = [y0.index(f0(x)) for x in x_space.labels]
    i1 = [y1.index(f1(x)) for x in x_space.labels]
    nx = x_space.n

    yy, iota0, iota1 = coproduct(y0, y1)
    n0 = y0.n

    def entry(p, q):
        if p < n0 and q < n0:
            return y0.dist[p][q]
        if p >= n0 and q >= n0:
            return y1.dist[p - n0][q - n0]
        if p < n0:
            u, v = p, q - n0
            return ext_min_all(
                y0.dist[u][i0[s]] + y1.dist[i1[s]][v] for s in range(nx)
            )
        v, u = p - n0, q
        return ext_min_all(
            y1.dist[v][i1[s]] + y0.dist[i0[s]][u] for s in range(nx)
        )

    n = yy.n
    gamma = Submetric(yy, tuple(
        tuple(entry(p, q) for q in range(n)) for p in range(n)
    ))
    proj = quotient_by_submetric(gamma)
    square = Square(left=f0, top=f1,
                    bottom=compose(iota0, proj), right=compose(iota1, proj))
    return PushoutResult(square=square, gamma=gamma)


def cokernel_pair(i):
    """The two legs of the pushout of an embedding along itself."""
    result = pushout_of_embeddings(i, i)
    return result.leg_b, result.leg_x, result.apex


def _mediator_exists(result, j, g):
    """Mediator out of the apex for the cocone (j out of B, g out of X).

    The legs into the apex are meant to be jointly surjective, so any
    mediator is forced pointwise; this checks it is well-defined and
    non-expansive.  The triangles commute by construction.
    """
    sq = result.square
    apex = result.apex
    mediator = {}
    for src_map, cocone in ((sq.bottom, j), (sq.right, g)):
        for lab, apex_lab in zip(src_map.source.labels, src_map.assignment):
            want = cocone(lab)
            if mediator.setdefault(apex_lab, want) != want:
                return False  # cocone separates points the apex merged
    u = FinMap(apex, j.target, tuple(mediator[lab] for lab in apex.labels))
    return is_nonexpansive(u)


def _glued_quotient_cocone(result, costs):
    """Cocone obtained by quotienting B + X along a cost matrix that glues
    f(a) to i(a); always commutes and is non-expansive by construction."""
    sq = result.square
    f, i = sq.left, sq.top
    b_space, x_space = f.target, i.target
    bx, iota_b, iota_x = coproduct(b_space, x_space)
    nb = b_space.n
    cost = [list(row) for row in costs]
    for a in f.source.labels:
        p = b_space.index(f(a))
        q = nb + x_space.index(i(a))
        cost[p][q] = ZERO
        cost[q][p] = ZERO
    proj = quotient_by_submetric(Submetric(bx, minplus_closure(cost)))
    return compose(iota_b, proj), compose(iota_x, proj)


def verify_pushout_universal(result, trials=100, seed=0):
    """Sample commuting cocones and check the mediating-morphism property.

    Cocones come from three sources: the closure-oracle pushout itself
    (always first, so a corrupted apex is refuted deterministically),
    quotients of B + X along random glued cost grids, and rejection-
    sampled raw assignments into small random targets.
    """
    from .harness import GenConfig, gen_metric, sample_cost_below

    sq = result.square
    f, i = sq.left, sq.top
    apex = result.apex
    hit = set(sq.bottom.assignment) | set(sq.right.assignment)
    if hit != set(apex.labels):
        return False  # an unreachable apex point breaks uniqueness

    rng = random.Random(seed)
    b_space, x_space = f.target, i.target
    bx, _, _ = coproduct(b_space, x_space)

    # Trial 0: the oracle pushout as a competing cocone.
    j, g = _glued_quotient_cocone(result, bx.dist)
    if not _mediator_exists(result, j, g):
        return False

    checked = 1
    attempts = 0
    max_attempts = trials * 200
    while checked < trials and attempts < max_attempts:
        attempts += 1
        if rng.random() < 0.5:
            j, g = _glued_quotient_cocone(
                result, sample_cost_below(bx, rng))
        else:
            t_space = gen_metric(GenConfig(seed=rng.getrandbits(63),
                                           max_points=rng.randint(1, 4)))
            j = FinMap(b_space, t_space,
                       tuple(rng.choice(t_space.labels) for _ in b_space.labels))
            g = FinMap(x_space, t_space,
                       tuple(rng.choice(t_space.labels) for _ in x_space.labels))
            if not (is_nonexpansive(j) and is_nonexpansive(g)):
                continue
            if compose(f, j).assignment != compose(i, g).assignment:
                continue
        checked += 1
        if not _mediator_exists(result, j, g):
            return False
    return True
