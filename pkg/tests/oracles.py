"""Slow, independent reference evaluations used only by the tests.

The contraction engine rescales to integers and applies gates with numpy
slicing on a tensor; these oracles instead multiply dense 2^L x 2^L
Fraction matrices built entry by entry from the bit convention.
"""

from fractions import Fraction
from itertools import permutations

import numpy as np

from svf.vertex import embed, r_matrix


def kron_vectors(vectors):
    out = np.array([Fraction(1)], dtype=object)
    for vec in vectors:
        out = np.kron(out, np.array([vec.c1, vec.c2], dtype=object))
    return out


def dense_triangular(u, c, e, s):
    n = len(u)
    psi = kron_vectors([s] * n)
    for i in range(1, n):
        for k in range(i + 1, n + 1):
            psi = embed(r_matrix(u[i - 1], u[k - 1], c).matrix(), n, i, k).dot(psi)
    return Fraction(kron_vectors([e] * n).dot(psi))


def dense_gdw(u, v, c, vecs, east=None):
    """Full 2^(m+n) state: sites 1..m are the auxiliary rows, m+1..m+n the columns."""
    east = vecs.e if east is None else east
    m, n = len(u), len(v)
    L = m + n
    psi = kron_vectors([vecs.w] * m + [vecs.s] * n)
    for i in range(m):
        for k in range(n):
            psi = embed(r_matrix(u[i], v[k], c).matrix(), L, i + 1, m + k + 1).dot(psi)
    return Fraction(kron_vectors([east] * m + [vecs.n] * n).dot(psi))


def leibniz_det(rows):
    m = len(rows)
    total = Fraction(0)
    for perm in permutations(range(m)):
        inversions = sum(1 for a in range(m) for b in range(a + 1, m) if perm[a] > perm[b])
        term = Fraction(-1 if inversions % 2 else 1)
        for r, col in enumerate(perm):
            term *= rows[r][col]
        total += term
    return total
