"""Exact evaluators for the factorized, subset-sum and determinant formulas.

Every denominator is checked before division; a vanishing one raises
PoleError (or DegeneracyError for boundary pairings) naming the factor.
Conventions for m = 0: empty products and determinants are 1, so
Z_{0,n} = <n|s>^n.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .contraction import ModelParams
from .errors import DegeneracyError, ParameterError, PoleError, UnsupportedRangeError
from .exact import det
from .scalar import as_rational
from .vertex import BoundaryVector, BoundaryVectors, pairing


def _c(c) -> Fraction:
    c = as_rational(c)
    if c == 0:
        raise ParameterError("crossing constant c must be nonzero")
    return c


def _nonzero(x: Fraction, factor: str, where: str) -> Fraction:
    if x == 0:
        raise PoleError(factor, where)
    return x


def triangular_factorized(u: Sequence, c, e: BoundaryVector, s: BoundaryVector) -> Fraction:
    """(e1 s1 + e2 s2)^n prod_{i<j} (u_i - u_j + c) / c."""
    c = _c(c)
    u = [as_rational(x) for x in u]
    value = pairing(BoundaryVector.of(e), BoundaryVector.of(s)) ** len(u)
    for i, j in combinations(range(len(u)), 2):
        value *= (u[i] - u[j] + c) / c
    return value


def pair_specialized_product(u: Sequence, c, e: BoundaryVector, s: BoundaryVector) -> Fraction:
    """(e.s)^n prod_{1<=j<k<=n-j} (u_j - u_k + c)/c * (u_k - u_j + c)/c.

    This is the value Z_n takes once u_j = u_{n+1-j} for every j < (n+1)/2;
    the caller is responsible for imposing that pairing on ``u``.
    """
    c = _c(c)
    u = [as_rational(x) for x in u]
    n = len(u)
    value = pairing(BoundaryVector.of(e), BoundaryVector.of(s)) ** n
    for j in range(1, n + 1):
        for k in range(j + 1, n - j + 1):
            x = u[j - 1] - u[k - 1]
            value *= (x + c) / c * ((-x + c) / c)
    return value


def beta(vecs: BoundaryVectors) -> Fraction:
    """(e2 n1 - e1 n2)(s2 w1 - s1 w2) / ((e1 s1 + e2 s2)(n1 w1 + n2 w2))."""
    es = pairing(vecs.e, vecs.s)
    nw = pairing(vecs.n, vecs.w)
    if es == 0:
        raise DegeneracyError("e1 s1 + e2 s2", "beta")
    if nw == 0:
        raise DegeneracyError("n1 w1 + n2 w2", "beta")
    n, e, s, w = vecs.n, vecs.e, vecs.s, vecs.w
    return (e.c2 * n.c1 - e.c1 * n.c2) * (s.c2 * w.c1 - s.c1 * w.c2) / (es * nw)


def _prefactor(vecs: BoundaryVectors, m: int, n: int) -> Fraction:
    return (
        pairing(vecs.n, vecs.s) ** (n - m)
        * pairing(vecs.e, vecs.s) ** m
        * pairing(vecs.n, vecs.w) ** m
    )


def _check_range(m: int, n: int) -> None:
    if m > n:
        raise UnsupportedRangeError(f"closed forms need m <= n, got m={m}, n={n}")


def _check_distinct(u: Sequence[Fraction], where: str) -> None:
    for i, j in combinations(range(len(u)), 2):
        _nonzero(u[i] - u[j], f"u_{i + 1} - u_{j + 1}", where)


def gdw_subset_sum(params: ModelParams) -> Fraction:
    """Generalized domain-wall Z_{m,n} as a sum over the 2^m subsets K of rows."""
    where = "subset-sum formula"
    u, v, c = params.u, params.v, params.c
    m, n = params.m, params.n
    _check_range(m, n)
    _check_distinct(u, where)
    b = beta(params.vectors)
    total = Fraction(0)
    for size in range(m + 1):
        for K in combinations(range(m), size):
            inK = set(K)
            term = (-b) ** size
            if term == 0:
                continue
            for i in range(m):
                if i in inK:
                    for vk in v:
                        term *= u[i] - vk
                else:
                    for vk in v:
                        term *= u[i] - vk + c
            if term == 0:
                continue
            for i in K:
                for j in range(m):
                    if j not in inK:
                        term *= (u[i] - u[j] + c) / (u[i] - u[j])
            total += term
    return _prefactor(params.vectors, m, n) * total / c ** (m * n)


def gdw_matrix(params: ModelParams) -> list[list[Fraction]]:
    """The m x m matrix whose determinant appears in the determinant formula."""
    where = "determinant formula"
    u, v, c = params.u, params.v, params.c
    m = params.m
    b = beta(params.vectors)
    for j in range(m):
        for i, vi in enumerate(v):
            _nonzero(u[j] - vi, f"u_{j + 1} - v_{i + 1}", where)
    _check_distinct(u, where)
    rows = []
    for j in range(m):
        diag = Fraction(1)
        for vi in v:
            diag *= (u[j] - vi + c) / (u[j] - vi)
        cross = Fraction(1)
        for i in range(m):
            if i != j:
                cross *= (u[j] - u[i] + c) / (u[j] - u[i])
        row = []
        for k in range(m):
            den = _nonzero(u[j] - u[k] + c, f"u_{j + 1} - u_{k + 1} + c", where)
            entry = -b * c / den * cross
            if j == k:
                entry += diag
            row.append(entry)
        rows.append(row)
    return rows


def gdw_determinant(params: ModelParams) -> Fraction:
    """Z_{m,n} = prefactor * prod (u_i - v_j) * det(gdw_matrix) / c^{mn}."""
    m, n = params.m, params.n
    _check_range(m, n)
    rows = gdw_matrix(params)
    value = _prefactor(params.vectors, m, n) / params.c ** (m * n)
    for ui in params.u:
        for vj in params.v:
            value *= ui - vj
    return value * det(rows)


def z11_explicit(u, v, c, vecs: BoundaryVectors) -> Fraction:
    """Single-vertex Z_{1,1}(u | v) written out term by term."""
    c = _c(c)
    x = as_rational(u) - as_rational(v)
    n1, n2 = vecs.n.components()
    e1, e2 = vecs.e.components()
    s1, s2 = vecs.s.components()
    w1, w2 = vecs.w.components()
    return (
        (e1 * w1 * n1 * s1 + e2 * w2 * n2 * s2) * (x + c) / c
        + (e2 * w1 * n1 * s2 + e1 * w2 * n2 * s1)
        + (e1 * w1 * n2 * s2 + e2 * w2 * n1 * s1) * x / c
    )


def gdw_specialized(v: Sequence, c, vecs: BoundaryVectors, m: int) -> Fraction:
    """Z_{m,n} at u_i = v_{n-m+i}: prefactor * prod_{i>n-m} prod_j (v_i - v_j + c)/c."""
    c = _c(c)
    v = [as_rational(x) for x in v]
    n = len(v)
    _check_range(m, n)
    value = _prefactor(vecs, m, n)
    for i in range(n - m, n):
        for j in range(n):
            value *= (v[i] - v[j] + c) / c
    return value


def trapezoid_factorized(v_all: Sequence, split, c, vecs: BoundaryVectors) -> Fraction:
    """T_{n,m} = <n|s>^n <n|w>^m prod (v_i - v_j + c)/c prod_{i<j} (v_j - v_i + c)/c.

    Note the second product runs over pairs of top rapidities in the
    opposite order to the triangular formula.
    """
    c = _c(c)
    v_all = [as_rational(x) for x in v_all]
    n, m = (int(x) for x in split)
    if n < 0 or m < 0 or n + m != len(v_all):
        raise ParameterError(f"split {split} does not match {len(v_all)} rapidities")
    value = pairing(vecs.n, vecs.s) ** n * pairing(vecs.n, vecs.w) ** m
    for i in range(n, n + m):
        for j in range(n):
            value *= (v_all[i] - v_all[j] + c) / c
    for i, j in combinations(range(n, n + m), 2):
        value *= (v_all[j] - v_all[i] + c) / c
    return value
