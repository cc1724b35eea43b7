"""Binary corelations on X, encoded as block submetrics on X + X.

A corelation is a surjection out of X + X; under the quotient/submetric
duality it is a metric on X + X below the coproduct metric, stored here
as four X-indexed blocks.  The reflexive/symmetric/transitive predicates
are the dualized relation laws; every equivalence corelation is the
cokernel-pair corelation of its zero locus.
"""

from __future__ import annotations

from dataclasses import dataclass

from .extarith import ZERO, ext_min_all
from .limits import coproduct, copair
from .maps import is_surjective
from .minplus import freeze, minplus_matmul
from .quotients import kernel_metric, validate_submetric
from .spaces import FinSpace, is_separated


@dataclass(frozen=True)
class BlockMetric:
    """blocks[i][j][x][y] encodes the distance from (x, i) to (y, j)."""

    base: FinSpace
    g00: tuple
    g01: tuple
    g10: tuple
    g11: tuple

    def __post_init__(self):
        n = self.base.n
        for name in ("g00", "g01", "g10", "g11"):
            block = freeze(getattr(self, name))
            object.__setattr__(self, name, block)
            if len(block) != n or any(len(row) != n for row in block):
                raise ValueError("block %s shape does not match base" % name)

    def block(self, i, j):
        return getattr(self, "g%d%d" % (i, j))

    def value(self, x, i, y, j):
        return self.block(i, j)[self.base.index(x)][self.base.index(y)]

    def as_matrix(self):
        """The full matrix on X + X (summand 0 first)."""
        top = tuple(r0 + r1 for r0, r1 in zip(self.g00, self.g01))
        bottom = tuple(r0 + r1 for r0, r1 in zip(self.g10, self.g11))
        return top + bottom


def doubled_space(x_space):
    space, _, _ = coproduct(x_space, x_space)
    return space


def validate_blockmetric(bm):
    """Violations of the submetric contract against the coproduct metric on X+X."""
    return validate_submetric(doubled_space(bm.base), bm.as_matrix())


def is_valid_blockmetric(bm):
    return not validate_blockmetric(bm)


def corelation_from_cospan(q0, q1):
    """The block metric of a cospan q0, q1: X -> S, via the kernel metric
    of the copairing X + X -> S; the copairing must be surjective."""
    if q0.source != q1.source or q0.target != q1.target:
        raise ValueError("corelation needs parallel morphisms")
    x_space = q0.source
    xx, _, _ = coproduct(x_space, x_space)
    folded = copair(q0, q1, xx)
    if not is_surjective(folded):
        raise ValueError("cospan is not jointly surjective, hence not a corelation")
    full = kernel_metric(folded).gamma
    n = x_space.n
    return BlockMetric(
        base=x_space,
        g00=tuple(row[:n] for row in full[:n]),
        g01=tuple(row[n:] for row in full[:n]),
        g10=tuple(row[:n] for row in full[n:]),
        g11=tuple(row[n:] for row in full[n:]),
    )


def is_reflexive(bm):
    """d(x, y) <= every block entry; dual of relation reflexivity."""
    d = bm.base.dist
    n = bm.base.n
    for i in (0, 1):
        for j in (0, 1):
            block = bm.block(i, j)
            for x in range(n):
                for y in range(n):
                    if not d[x][y] <= block[x][y]:
                        return False
    return True


def is_symmetric(bm):
    """Invariance under swapping both summand indices."""
    return bm.g00 == bm.g11 and bm.g01 == bm.g10


def is_transitive(bm):
    """Cross blocks equal to their own min-plus square.

    Only stated for reflexive block metrics; a non-reflexive input is an
    error rather than a False.
    """
    if not is_reflexive(bm):
        raise ValueError("transitivity is only defined for reflexive inputs")
    return (bm.g01 == minplus_matmul(bm.g01, bm.g01)
            and bm.g10 == minplus_matmul(bm.g10, bm.g10))


def is_equivalence(bm):
    return is_reflexive(bm) and is_symmetric(bm) and is_transitive(bm)


def gamma_from_subset(x_space, subset):
    """The block metric with cross distances routed through the subset at
    zero crossing cost; the cokernel-pair corelation of the inclusion."""
    if not is_separated(x_space):
        raise ValueError("base must be separated")
    idx = sorted(x_space.index(lab) for lab in subset)
    if len(set(idx)) != len(list(subset)):
        raise ValueError("duplicate labels in subset")
    d = x_space.dist
    n = x_space.n
    cross = tuple(
        tuple(ext_min_all(d[x][a] + d[a][y] for a in idx) for y in range(n))
        for x in range(n)
    )
    return BlockMetric(base=x_space, g00=d, g01=cross, g10=cross, g11=d)


def zero_locus(bm):
    """Points whose cross self-distance vanishes; requires an equivalence."""
    if not is_equivalence(bm):
        raise ValueError("zero locus is only defined for equivalences")
    n = bm.base.n
    out = [bm.base.labels[a] for a in range(n) if bm.g01[a][a] == ZERO]
    check = [bm.base.labels[a] for a in range(n) if bm.g10[a][a] == ZERO]
    assert out == check  # the two definitions agree under symmetry
    return tuple(out)


def is_effective(bm):
    """Exact equality with the subset block metric of the zero locus.

    Every valid equivalence is effective; the predicate exists so that
    theorem can be asserted exhaustively.
    """
    locus = zero_locus(bm)  # raises on non-equivalence input
    return bm == gamma_from_subset(bm.base, locus)
