"""Emptiness formation probability P(m) on the trapezoid.

Two independent routes: the determinant formula, and the product of a
contracted rectangle (east fixed to <1|), the frozen-triangle weights and
the inverse trapezoid normalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .contraction import ModelParams, gdw_contract_fixed_east, trapezoid_value
from .errors import DegeneracyError, ParameterError, PoleError
from .exact import det
from .scalar import as_rational
from .vertex import BoundaryVector, BoundaryVectors, pairing

EAST_ONE = BoundaryVector(1, 0, "e")


@dataclass(frozen=True)
class EfpParams:
    """n columns, emptiness length m, rapidities v_1..v_{n+m}."""

    n: int
    m: int
    v: tuple
    c: Fraction
    vectors: BoundaryVectors

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(as_rational(x) for x in self.v))
        object.__setattr__(self, "c", as_rational(self.c))
        if self.n < 0 or self.m < 0 or len(self.v) != self.n + self.m:
            raise ParameterError(f"need n + m = {self.n + self.m} rapidities, got {len(self.v)}")
        if self.c == 0:
            raise ParameterError("crossing constant c must be nonzero")

    @property
    def top(self) -> tuple:
        return self.v[self.n:]

    def in_probabilistic_regime(self) -> bool:
        """Ordered rapidities, c > 0 and nonnegative n, s, w components."""
        vecs = self.vectors
        comps = vecs.n.components() + vecs.s.components() + vecs.w.components()
        ordered = all(a <= b for a, b in zip(self.v, self.v[1:]))
        return ordered and self.c > 0 and all(x >= 0 for x in comps)


def gamma(vecs: BoundaryVectors) -> Fraction:
    """-n2 (s2 w1 - s1 w2) / (s1 (n1 w1 + n2 w2))."""
    n, s, w = vecs.n, vecs.s, vecs.w
    if s.c1 == 0:
        raise DegeneracyError("s1", "gamma")
    nw = pairing(n, w)
    if nw == 0:
        raise DegeneracyError("n1 w1 + n2 w2", "gamma")
    return -n.c2 * (s.c2 * w.c1 - s.c1 * w.c2) / (s.c1 * nw)


def efp_matrix(p: EfpParams) -> list[list[Fraction]]:
    where = "EFP determinant"
    n, m, v, c = p.n, p.m, p.v, p.c
    g = gamma(p.vectors)
    rows = []
    for j in range(m):
        vj = v[n + j]
        lead = Fraction(1)
        for i in range(n):
            den = vj - v[i] + c
            if den == 0:
                raise PoleError(f"v_{n + j + 1} - v_{i + 1} + c", where)
            lead *= (vj - v[i]) / den
        for i in range(m):
            if i != j:
                den = vj - v[n + i]
                if den == 0:
                    raise PoleError(f"v_{n + j + 1} - v_{n + i + 1}", where)
                lead *= (vj - v[n + i] + c) / den
        row = []
        for k in range(m):
            den = vj - v[n + k] + c
            if den == 0:
                raise PoleError(f"v_{n + j + 1} - v_{n + k + 1} + c", where)
            entry = -g * c / den * lead
            if j == k:
                entry += 1
            row.append(entry)
        rows.append(row)
    return rows


def efp_determinant(p: EfpParams) -> Fraction:
    if p.m == 0:
        return Fraction(1)
    vecs = p.vectors
    ns = pairing(vecs.n, vecs.s)
    if ns == 0:
        raise DegeneracyError("n1 s1 + n2 s2", "EFP determinant")
    rows = efp_matrix(p)
    return (vecs.n.c1 * vecs.s.c1 / ns) ** p.m * det(rows)


def efp_components(p: EfpParams) -> Fraction:
    """P(m) = Z_{m,n}(top | bottom)|_{e=(1,0)} * n1^m * frozen weights / T_{n,m}.

    Numerator and normalization are both lattice contractions.
    """
    if p.m == 0:
        return Fraction(1)
    n, m, v, c = p.n, p.m, p.v, p.c
    T = trapezoid_value(v, (n, m), c, p.vectors)
    if T == 0:
        raise DegeneracyError("T_{n,m}", "EFP normalization")
    rect = gdw_contract_fixed_east(ModelParams(c, v[n:], v[:n], p.vectors), EAST_ONE)
    frozen = Fraction(1)
    for i, j in combinations(range(n, n + m), 2):
        frozen *= (v[j] - v[i] + c) / c
    return rect * p.vectors.n.c1 ** m * frozen / T


def efp_params(v: Sequence, split, c, vecs: BoundaryVectors) -> EfpParams:
    n, m = (int(x) for x in split)
    return EfpParams(n, m, tuple(v), as_rational(c), vecs)
