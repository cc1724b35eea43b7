"""Finite separated Lawvere metric spaces and finite preorders.

A FinSpace is a finite labelled point set with an ExtValue distance
matrix required to satisfy only d(x,x) = 0 and the triangle inequality;
neither symmetry nor finiteness of distances is assumed.  Separation
(d(x,y) = 0 = d(y,x) implies x = y) is the metric analogue of
antisymmetry and is checked, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .extarith import INF, ZERO
from .minplus import freeze


@dataclass(frozen=True)
class Violation:
    """One violated axiom instance, with the points that witness it."""

    kind: str
    points: tuple
    detail: str

    def __str__(self):
        return "%s at (%s): %s" % (self.kind, ", ".join(self.points), self.detail)


@dataclass(frozen=True)
class FinSpace:
    labels: tuple
    dist: tuple  # row-major, dist[i][j] = d(labels[i], labels[j])

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "dist", freeze(self.dist))
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate point labels")
        if len(self.dist) != n or any(len(row) != n for row in self.dist):
            raise ValueError("distance matrix shape does not match label count")

    @property
    def n(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError("no point labelled %r" % (label,)) from None

    def d(self, x, y):
        return self.dist[self.index(x)][self.index(y)]


@dataclass(frozen=True)
class FinPreorder:
    labels: tuple
    rel: tuple  # rel[i][j] is True when labels[i] <= labels[j]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "rel", freeze(self.rel))
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate point labels")
        if len(self.rel) != n or any(len(row) != n for row in self.rel):
            raise ValueError("relation matrix shape does not match label count")

    def preorder_violations(self):
        """Reflexivity and transitivity failures, as Violations."""
        out = []
        n = len(self.labels)
        for i in range(n):
            if not self.rel[i][i]:
                out.append(Violation("non-reflexive", (self.labels[i],), "x <= x fails"))
        for i in range(n):
            for j in range(n):
                if not self.rel[i][j]:
                    continue
                for k in range(n):
                    if self.rel[j][k] and not self.rel[i][k]:
                        out.append(Violation(
                            "non-transitive",
                            (self.labels[i], self.labels[j], self.labels[k]),
                            "x <= y and y <= z but not x <= z"))
        return out


def validate_metric(space):
    """All metric-axiom violations of a candidate FinSpace; empty means valid."""
    return metric_violations(space.labels, space.dist)


def metric_violations(labels, dist):
    """Axiom check on a raw labelled matrix (shared with submetric validation)."""
    out = []
    n = len(labels)
    for i in range(n):
        if dist[i][i] != ZERO:
            out.append(Violation("nonzero-diagonal", (labels[i],),
                                 "d(x,x) = %s" % dist[i][i]))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not dist[i][k] <= dist[i][j] + dist[j][k]:
                    out.append(Violation(
                        "triangle", (labels[i], labels[j], labels[k]),
                        "%s > %s + %s" % (dist[i][k], dist[i][j], dist[j][k])))
    return out


def is_valid_metric(space):
    return not validate_metric(space)


def is_separated(space):
    """No distinct pair at distance 0 in both directions."""
    for i in range(space.n):
        for j in range(space.n):
            if i != j and space.dist[i][j] == ZERO and space.dist[j][i] == ZERO:
                return False
    return True


def zero_classes(labels, mat):
    """Partition by x ~ y iff mat(x,y) = mat(y,x) = 0.

    Classes are ordered by first occurrence; members keep label order.
    Well-defined for any matrix satisfying the metric axioms.
    """
    n = len(labels)
    assigned = [None] * n
    classes = []
    for i in range(n):
        if assigned[i] is not None:
            continue
        members = [i]
        assigned[i] = len(classes)
        for j in range(i + 1, n):
            if assigned[j] is None and mat[i][j] == ZERO and mat[j][i] == ZERO:
                members.append(j)
                assigned[j] = len(classes)
        classes.append(tuple(members))
    return classes, assigned


def class_label(labels, members):
    return "[%s]" % min(labels[i] for i in members)


def sep_reflection(space):
    """The separation-reflection quotient and its projection.

    Identifies x, y whenever d(x,y) = d(y,x) = 0; the quotient distance
    between classes is the distance between any representatives, which
    the triangle inequality makes well-defined.
    """
    from .maps import FinMap

    classes, assigned = zero_classes(space.labels, space.dist)
    qlabels = tuple(class_label(space.labels, members) for members in classes)
    qdist = tuple(
        tuple(space.dist[ci[0]][cj[0]] for cj in classes) for ci in classes
    )
    quotient = FinSpace(qlabels, qdist)
    proj = FinMap(space, quotient,
                  tuple(qlabels[assigned[i]] for i in range(space.n)))
    return quotient, proj


def symmetrize(space):
    """Replace d by max of the two directions; preserves validity and separation."""
    def bigger(u, v):
        return u if v <= u else v

    dist = tuple(
        tuple(bigger(space.dist[i][j], space.dist[j][i]) for j in range(space.n))
        for i in range(space.n)
    )
    return FinSpace(space.labels, dist)


def order_to_metric(preorder):
    """The {0, inf}-valued metric of a preorder: 0 iff x <= y."""
    bad = preorder.preorder_violations()
    if bad:
        raise ValueError("not a preorder: %s" % "; ".join(map(str, bad)))
    dist = tuple(
        tuple(ZERO if cell else INF for cell in row) for row in preorder.rel
    )
    return FinSpace(preorder.labels, dist)


def metric_to_order(space):
    """x <= y iff d(x,y) = 0; reflexive and transitive for any valid metric."""
    rel = tuple(
        tuple(cell == ZERO for cell in row) for row in space.dist
    )
    return FinPreorder(space.labels, rel)
