"""Finite (co)limits: binary products with the sup-metric, binary
coproducts with cross-distance infinity, equalizers, and pullbacks."""

from __future__ import annotations

from dataclasses import dataclass

from .extarith import INF
from .maps import FinMap, compose, is_isomorphism, subspace
from .spaces import FinSpace


@dataclass(frozen=True)
class Square:
    """A commuting square: bottom . left = right . top (apex = left.source)."""

    left: FinMap    # W -> U
    top: FinMap     # W -> V
    bottom: FinMap  # U -> T
    right: FinMap   # V -> T

    def __post_init__(self):
        if self.left.source != self.top.source:
            raise ValueError("square legs do not share an apex")
        if self.bottom.target != self.right.target:
            raise ValueError("square sides do not share a codomain")
        if (self.left.target != self.bottom.source
                or self.top.target != self.right.source):
            raise ValueError("square sides do not match legs")

    def commutes(self):
        a = compose(self.left, self.bottom)
        b = compose(self.top, self.right)
        return a.assignment == b.assignment


def pair_label(x, y):
    return "(%s,%s)" % (x, y)


def product(m1, m2):
    """All pairs with the sup-metric; returns (space, p1, p2)."""
    labels = []
    pairs = []
    for x in m1.labels:
        for y in m2.labels:
            labels.append(pair_label(x, y))
            pairs.append((m1.index(x), m2.index(y)))

    def sup(u, v):
        return u if v <= u else v

    dist = tuple(
        tuple(sup(m1.dist[i1][j1], m2.dist[i2][j2]) for (j1, j2) in pairs)
        for (i1, i2) in pairs
    )
    space = FinSpace(tuple(labels), dist)
    p1 = FinMap(space, m1, tuple(m1.labels[i] for (i, _) in pairs))
    p2 = FinMap(space, m2, tuple(m2.labels[j] for (_, j) in pairs))
    return space, p1, p2


def summand_label(side, label):
    return "%d:%s" % (side, label)


def coproduct(m1, m2):
    """Disjoint union; summands keep their metric, cross-distances are inf."""
    labels = tuple(
        [summand_label(0, x) for x in m1.labels]
        + [summand_label(1, y) for y in m2.labels]
    )
    n1 = m1.n
    n = n1 + m2.n

    def entry(i, j):
        if i < n1 and j < n1:
            return m1.dist[i][j]
        if i >= n1 and j >= n1:
            return m2.dist[i - n1][j - n1]
        return INF

    dist = tuple(tuple(entry(i, j) for j in range(n)) for i in range(n))
    space = FinSpace(labels, dist)
    j1 = FinMap(m1, space, tuple(labels[:n1]))
    j2 = FinMap(m2, space, tuple(labels[n1:]))
    return space, j1, j2


def copair(f, g, coprod_space):
    """The map out of a coproduct induced by maps on the two summands."""
    if f.target != g.target:
        raise ValueError("copairing needs a common target")
    return FinMap(coprod_space, f.target, tuple(f.assignment) + tuple(g.assignment))


def equalizer(f, g):
    """The inclusion of {x | f(x) = g(x)} with the restricted metric."""
    if f.source != g.source or f.target != g.target:
        raise ValueError("equalizer needs parallel morphisms")
    keep = [lab for lab, a, b in zip(f.source.labels, f.assignment, g.assignment)
            if a == b]
    _, incl = subspace(f.source, keep)
    return incl


def pullback(f, g):
    """The sub-product of pairs where the cospan legs agree.

    Returns a Square with the computed apex and projections as legs.
    """
    if f.target != g.target:
        raise ValueError("pullback needs a common target")
    prod, p1, p2 = product(f.source, g.source)
    keep = [lab for lab in prod.labels
            if f(p1(lab)) == g(p2(lab))]
    _, incl = subspace(prod, keep)
    return Square(left=compose(incl, p1), top=compose(incl, p2),
                  bottom=f, right=g)


def is_pullback_square(sq):
    """True iff the comparison from the apex to the computed pullback is an iso."""
    if not sq.commutes():
        raise ValueError("square does not commute")
    computed = pullback(sq.bottom, sq.right)
    apex = computed.left.source
    cmp_assignment = tuple(
        pair_label(sq.left(w), sq.top(w)) for w in sq.left.source.labels
    )
    # The comparison is automatically well-defined and non-expansive.
    comparison = FinMap(sq.left.source, apex, cmp_assignment)
    return is_isomorphism(comparison)
