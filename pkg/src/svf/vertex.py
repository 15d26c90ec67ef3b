"""Rational R-matrix, boundary vectors and the Yang-Baxter / unitarity checks.

Basis convention: |1> is bit 0 and |2> is bit 1.  On two sites the ordered
basis is (|11>, |12>, |21>, |22>), i.e. index = 2 * (first bit) + second bit.
On L sites, site k sits at bit position L - k, so site 1 is the most
significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ParameterError
from .scalar import RationalLike, as_rational

ROLES = ("n", "e", "s", "w")


@dataclass(frozen=True)
class BoundaryVector:
    """Two-component vector c1|1> + c2|2>; its dual uses the same components."""

    c1: Fraction
    c2: Fraction
    role: str = ""

    def __post_init__(self):
        object.__setattr__(self, "c1", as_rational(self.c1))
        object.__setattr__(self, "c2", as_rational(self.c2))
        if self.role and self.role not in ROLES:
            raise ParameterError(f"unknown boundary role {self.role!r}")

    @classmethod
    def of(cls, pair, role: str = "") -> "BoundaryVector":
        if isinstance(pair, BoundaryVector):
            return replace(pair, role=role or pair.role)
        c1, c2 = pair
        return cls(as_rational(c1), as_rational(c2), role)

    def components(self) -> tuple[Fraction, Fraction]:
        return (self.c1, self.c2)

    def is_zero(self) -> bool:
        return self.c1 == 0 and self.c2 == 0


@dataclass(frozen=True)
class BoundaryVectors:
    """The four boundary vectors: north, east, south, west."""

    n: BoundaryVector
    e: BoundaryVector
    s: BoundaryVector
    w: BoundaryVector

    def __post_init__(self):
        for role in ROLES:
            object.__setattr__(self, role, BoundaryVector.of(getattr(self, role), role))

    @classmethod
    def from_pairs(cls, n, e, s, w) -> "BoundaryVectors":
        return cls(n, e, s, w)

    @classmethod
    def ordinary_dwbc(cls) -> "BoundaryVectors":
        """|s> = |1>, |w> = |2>, <n| = <2|, <e| = <1|."""
        return cls((0, 1), (1, 0), (1, 0), (0, 1))

    def with_east(self, east) -> "BoundaryVectors":
        return replace(self, e=BoundaryVector.of(east, "e"))

    def scaled(self, role: str, factor: RationalLike) -> "BoundaryVectors":
        f = as_rational(factor)
        v = getattr(self, role)
        return replace(self, **{role: BoundaryVector(v.c1 * f, v.c2 * f, role)})

    def as_dict(self) -> dict[str, tuple[Fraction, Fraction]]:
        return {role: getattr(self, role).components() for role in ROLES}


def pairing(bra: BoundaryVector, ket: BoundaryVector) -> Fraction:
    """<bra|ket> = bra.c1 * ket.c1 + bra.c2 * ket.c2 (no conjugation)."""
    return bra.c1 * ket.c1 + bra.c2 * ket.c2


@dataclass(frozen=True)
class RMatrix:
    """R(u - v) = a on |11>,|22>; b on |12>,|21>; cw on the two swap entries."""

    a: Fraction
    b: Fraction
    cw: Fraction = Fraction(1)

    def matrix(self) -> np.ndarray:
        z = Fraction(0)
        a, b, w = self.a, self.b, self.cw
        return np.array(
            [
                [a, z, z, z],
                [z, b, w, z],
                [z, w, b, z],
                [z, z, z, a],
            ],
            dtype=object,
        )


def _check_c(c: Fraction) -> Fraction:
    c = as_rational(c)
    if c == 0:
        raise ParameterError("crossing constant c must be nonzero")
    return c


def r_matrix(u: RationalLike, v: RationalLike, c: RationalLike) -> RMatrix:
    c = _check_c(c)
    x = as_rational(u) - as_rational(v)
    return RMatrix((x + c) / c, x / c, Fraction(1))


def permutation_matrix() -> np.ndarray:
    P = np.full((4, 4), Fraction(0), dtype=object)
    P[0, 0] = P[3, 3] = P[1, 2] = P[2, 1] = Fraction(1)
    return P


def embed(R: np.ndarray, num_sites: int, j: int, k: int) -> np.ndarray:
    """Dense 2^L x 2^L matrix of a two-site operator acting on sites (j, k).

    ``R`` is a 4x4 array in the two-site basis with site j as the first
    tensor factor.  Built entry by entry from bit arithmetic.
    """
    if not (1 <= j <= num_sites and 1 <= k <= num_sites) or j == k:
        raise ParameterError(f"bad site pair ({j}, {k}) for {num_sites} sites")
    dim = 1 << num_sites
    bj, bk = num_sites - j, num_sites - k
    out = np.full((dim, dim), Fraction(0), dtype=object)
    for col in range(dim):
        pair_in = 2 * ((col >> bj) & 1) + ((col >> bk) & 1)
        rest = col & ~((1 << bj) | (1 << bk))
        for pair_out in range(4):
            w = R[pair_out, pair_in]
            if w == 0:
                continue
            row = rest | ((pair_out >> 1) << bj) | ((pair_out & 1) << bk)
            out[row, col] += w
    return out


def check_yang_baxter(ui, uj, uk, c) -> bool:
    """R12(ui-uj) R13(ui-uk) R23(uj-uk) == R23 R13 R12 on three sites, exactly."""
    c = _check_c(c)
    ui, uj, uk = map(as_rational, (ui, uj, uk))
    Rij = embed(r_matrix(ui, uj, c).matrix(), 3, 1, 2)
    Rik = embed(r_matrix(ui, uk, c).matrix(), 3, 1, 3)
    Rjk = embed(r_matrix(uj, uk, c).matrix(), 3, 2, 3)
    lhs = Rij.dot(Rik).dot(Rjk)
    rhs = Rjk.dot(Rik).dot(Rij)
    return bool((lhs == rhs).all())


def unitarity_factor(uj, uk, c) -> Fraction:
    c = _check_c(c)
    uj, uk = as_rational(uj), as_rational(uk)
    return (uj - uk + c) / c * ((uk - uj + c) / c)


def check_unitarity(uj, uk, c) -> bool:
    """R_jk(uj-uk) R_kj(uk-uj) == factor * Id on two sites, exactly.

    R_kj takes site k as its first tensor factor, so it is embedded with
    the sites swapped.
    """
    c = _check_c(c)
    Rjk = embed(r_matrix(uj, uk, c).matrix(), 2, 1, 2)
    Rkj = embed(r_matrix(uk, uj, c).matrix(), 2, 2, 1)
    prod = Rjk.dot(Rkj)
    f = unitarity_factor(uj, uk, c)
    ident = np.array(
        [[f if r == q else Fraction(0) for q in range(4)] for r in range(4)],
        dtype=object,
    )
    return bool((prod == ident).all())


def vectors_from_components(components: Sequence) -> BoundaryVectors:
    """Build from (n1, n2, e1, e2, s1, s2, w1, w2)."""
    n1, n2, e1, e2, s1, s2, w1, w2 = components
    return BoundaryVectors((n1, n2), (e1, e2), (s1, s2), (w1, w2))
