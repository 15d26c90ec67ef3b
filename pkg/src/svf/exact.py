"""Small exact linear-algebra helpers: Bareiss determinant, interpolation."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import ParameterError


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Rational entries are first brought to a common denominator so the
    elimination runs on integers; every Bareiss division is then exact.
    A zero pivot is handled by a row swap; no swap available means det 0.
    """
    m = len(rows)
    if m == 0:
        return Fraction(1)
    if any(len(r) != m for r in rows):
        raise ParameterError("determinant needs a square matrix")
    entries = [[Fraction(x) for x in r] for r in rows]
    den = math.lcm(*(x.denominator for r in entries for x in r))
    a = [[int(x * den) for x in r] for r in entries]

    sign = 1
    prev = 1
    for k in range(m - 1):
        if a[k][k] == 0:
            for p in range(k + 1, m):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        piv = a[k][k]
        for i in range(k + 1, m):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, m):
                row_i[j] = (piv * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return Fraction(sign * a[m - 1][m - 1], den**m)


def interpolate(nodes: Sequence[Fraction], values: Sequence[Fraction]) -> list[Fraction]:
    """Monomial coefficients (lowest degree first) of the interpolating polynomial."""
    xs = [Fraction(x) for x in nodes]
    if len(set(xs)) != len(xs):
        raise ParameterError("interpolation nodes must be pairwise distinct")
    if len(xs) != len(values):
        raise ParameterError("need one value per node")
    # Newton divided differences, then expand the Newton form.
    coef = [Fraction(y) for y in values]
    npts = len(xs)
    for level in range(1, npts):
        for i in range(npts - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * npts
    for i in range(npts - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [shifted[d] - xs[i] * poly[d] for d in range(npts)]
        poly[0] += coef[i]
    return poly
