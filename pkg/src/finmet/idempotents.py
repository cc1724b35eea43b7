"""The min-plus idempotence lemma as standalone checkable operations.

A cost matrix (no metric axioms, nonzero diagonal allowed) that equals
its own min-plus square factors through its zero-diagonal points: every
finite entry is attained by a path routed through a point with zero
self-cost.  The boolean-relation corollary produces density witnesses
for idempotent endorelations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .extarith import ext_min_all
from .extarith import ZERO
from .minplus import freeze, minplus_matmul


@dataclass(frozen=True)
class CostMatrix:
    labels: tuple
    rho: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "rho", freeze(self.rho))
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate point labels")
        if len(self.rho) != n or any(len(row) != n for row in self.rho):
            raise ValueError("cost matrix shape does not match label count")


@dataclass(frozen=True)
class BoolRelation:
    labels: tuple
    rel: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "rel", freeze(self.rel))
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate point labels")
        if len(self.rel) != n or any(len(row) != n for row in self.rel):
            raise ValueError("relation matrix shape does not match label count")


def minplus_square(cm):
    """T(rho)(x, y) = min_z rho(x, z) + rho(z, y); needs a nonempty base."""
    if not cm.labels:
        raise ValueError("min-plus square needs a nonempty base")
    return CostMatrix(cm.labels, minplus_matmul(cm.rho, cm.rho))


def is_idempotent(cm):
    return minplus_square(cm).rho == cm.rho


@dataclass(frozen=True)
class FactorReport:
    """Witness table for routing an idempotent matrix through its
    zero-diagonal points."""

    zero_diagonal: tuple                 # labels with rho(a, a) = 0
    witnesses: dict = field(default_factory=dict)  # (x, y) -> label or None
    failures: tuple = ()                 # finite pairs with no witness

    @property
    def ok(self):
        return not self.failures


def factor_through_zero_diagonal(cm):
    """For each pair with finite cost, a zero-diagonal point attaining it.

    Pairs with infinite cost are vacuously witnessed when the routed
    minimum is also infinite.  Ties break to the least point index.
    """
    if not is_idempotent(cm):
        raise ValueError("input is not min-plus idempotent")
    n = len(cm.labels)
    rho = cm.rho
    a_idx = [i for i in range(n) if rho[i][i] == ZERO]
    witnesses = {}
    failures = []
    for x in range(n):
        for y in range(n):
            pair = (cm.labels[x], cm.labels[y])
            if rho[x][y].is_inf:
                routed = ext_min_all(rho[x][a] + rho[a][y] for a in a_idx)
                if routed.is_inf:
                    witnesses[pair] = None
                else:
                    failures.append(pair)  # routed min below an infinite entry
                continue
            for a in a_idx:
                if rho[x][a] + rho[a][y] == rho[x][y]:
                    witnesses[pair] = cm.labels[a]
                    break
            else:
                failures.append(pair)
    return FactorReport(zero_diagonal=tuple(cm.labels[i] for i in a_idx),
                        witnesses=witnesses,
                        failures=tuple(failures))


def bool_compose(rel_a, rel_b):
    """Existential composition of boolean square matrices."""
    n = len(rel_a)
    return tuple(
        tuple(any(rel_a[i][k] and rel_b[k][j] for k in range(n))
              for j in range(n))
        for i in range(n)
    )


def is_bool_idempotent(relation):
    return bool_compose(relation.rel, relation.rel) == relation.rel


def relation_density_witness(relation, x, y):
    """For an idempotent relation with x R y: a point a with
    x R a, a R a, a R y; None if no such point exists (cannot happen on
    valid finite input).  Least index wins."""
    if not is_bool_idempotent(relation):
        raise ValueError("relation is not idempotent")
    i = relation.labels.index(x)
    j = relation.labels.index(y)
    if not relation.rel[i][j]:
        raise ValueError("pair is not related")
    for k in range(len(relation.labels)):
        if relation.rel[i][k] and relation.rel[k][k] and relation.rel[k][j]:
            return relation.labels[k]
    return None
