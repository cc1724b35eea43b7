"""Deterministic random generators and brute-force oracles.

Everything is a pure function of an explicit seed.  The min-plus closure
doubles as the universal repair step: any sampled zero-diagonal cost
grid closes to a valid metric, and closing a grid capped below an
ambient metric stays below it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .corelations import gamma_from_subset
from .extarith import INF, ZERO, fin
from .maps import FinMap, compose, is_nonexpansive
from .minplus import minplus_closure
from .quotients import Submetric, quotient_by_submetric
from .spaces import FinSpace, sep_reflection

DEFAULT_GRID = (ZERO, fin(1, 2), fin(1), fin(2), INF)


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_points: int = 4
    value_grid: tuple = DEFAULT_GRID
    trials: int = 100

    def __post_init__(self):
        if self.max_points < 0:
            raise ValueError("max_points must be >= 0")
        if not self.value_grid or ZERO not in self.value_grid:
            raise ValueError("value grid must be nonempty and contain 0")


def gen_metric(cfg):
    """A valid separated space on up to cfg.max_points points.

    Sample a grid matrix, zero the diagonal, repair with the min-plus
    closure, then separate; the result is relabelled p0, p1, ...
    """
    rng = random.Random(cfg.seed)
    n = cfg.max_points
    cost = [[ZERO if i == j else rng.choice(cfg.value_grid) for j in range(n)]
            for i in range(n)]
    raw = FinSpace(tuple("p%d" % i for i in range(n)), minplus_closure(cost))
    reflected, _ = sep_reflection(raw)
    return FinSpace(tuple("p%d" % i for i in range(reflected.n)),
                    reflected.dist)


def sample_cost_below(space, rng, grid=DEFAULT_GRID):
    """A zero-diagonal grid matrix capped pointwise by the space's metric."""
    n = space.n
    return [
        [ZERO if i == j else min(rng.choice(grid), space.dist[i][j])
         for j in range(n)]
        for i in range(n)
    ]


def gen_submetric(space, cfg):
    """A valid submetric: sampled below d, then min-plus closed.

    The closure stays below d because d itself is closed.
    """
    rng = random.Random(cfg.seed)
    cost = sample_cost_below(space, rng, cfg.value_grid)
    return Submetric(space, minplus_closure(cost))


def gen_surjection(space, cfg):
    """A surjection out of a separated space: the quotient of a sampled
    submetric.  Up to isomorphism every surjection arises this way."""
    return quotient_by_submetric(gen_submetric(space, cfg))


def gen_nonexpansive_map(source, target, rng, attempts=50):
    """A non-expansive map by rejection sampling; falls back to a constant
    map (always non-expansive) and returns None only if target is empty."""
    if target.n == 0:
        return FinMap(source, target, ()) if source.n == 0 else None
    for _ in range(attempts):
        f = FinMap(source, target,
                   tuple(rng.choice(target.labels) for _ in source.labels))
        if is_nonexpansive(f):
            return f
    pick = rng.choice(target.labels)
    return FinMap(source, target, tuple(pick for _ in source.labels))


def gen_subset(space, rng):
    """A seed-chosen subset of the space's points."""
    return tuple(lab for lab in space.labels if rng.random() < 0.5)


def gen_equivalence(space, cfg):
    """An equivalence block metric: the subset block metric of a sampled
    subset (a complete generator at finite scale)."""
    rng = random.Random(cfg.seed)
    return gamma_from_subset(space, gen_subset(space, rng))


def enumerate_mediators(source, target, precompose=(), postcompose=(),
                        cap=4096):
    """All non-expansive maps source -> target satisfying the given
    commutation constraints.

    precompose: pairs (j, want) requiring h . j = want (j into source);
    postcompose: pairs (p, want) requiring p . h = want (p out of target).
    Raises when the raw search space exceeds the cap.
    """
    if source.n and target.n ** source.n > cap:
        raise ValueError("mediator search space exceeds cap")
    out = []
    for assignment in itertools.product(target.labels, repeat=source.n):
        h = FinMap(source, target, assignment)
        if not is_nonexpansive(h):
            continue
        if any(compose(j, h).assignment != want.assignment
               for j, want in precompose):
            continue
        if any(compose(h, p).assignment != want.assignment
               for p, want in postcompose):
            continue
        out.append(h)
    return out


def brute_iso_check(m1, m2, cap=7):
    """Label-independent equality: search for a distance-preserving bijection."""
    if m1.n > cap or m2.n > cap:
        raise ValueError("space too large for brute-force isomorphism search")
    if m1.n != m2.n:
        return False
    n = m1.n
    for perm in itertools.permutations(range(n)):
        if all(m1.dist[i][j] == m2.dist[perm[i]][perm[j]]
               for i in range(n) for j in range(n)):
            return True
    return False
