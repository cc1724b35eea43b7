"""Min-plus (tropical) matrix operations on ExtValue matrices.

Matrices are tuples of tuples of ExtValue.  The closure here is the
all-pairs shortest-path saturation: the least matrix below the given
costs that satisfies the triangle inequality.  It doubles as the
independent oracle for the explicit pushout formulas and as the repair
step of the random-space generator.
"""

from __future__ import annotations

from .extarith import ext_min


def freeze(rows):
    return tuple(tuple(row) for row in rows)


def minplus_matmul(a, b):
    """Tropical product: out[i][j] = min_k a[i][k] + b[k][j]."""
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            best = a[i][0] + b[0][j]
            for k in range(1, n):
                best = ext_min(best, a[i][k] + b[k][j])
            row.append(best)
        out.append(tuple(row))
    return tuple(out)


def minplus_closure(cost):
    """All-pairs relaxation of a square cost matrix (Floyd-Warshall).

    For a matrix with zero diagonal the result is the least valid metric
    below the given costs.  Iteration order is fixed by point index, so
    the result is deterministic.
    """
    n = len(cost)
    dist = [list(row) for row in cost]
    for k in range(n):
        for i in range(n):
            dik = dist[i][k]
            if dik.is_inf:
                continue
            row_k = dist[k]
            row_i = dist[i]
            for j in range(n):
                cand = dik + row_k[j]
                if cand < row_i[j]:
                    row_i[j] = cand
    return freeze(dist)
