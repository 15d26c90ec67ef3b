"""Brute-force evaluation of the lattice partition functions.

Everything here is computed straight from products of R-matrices acting on
tensor products of boundary vectors, with no use of any closed form.  This
is the oracle the closed forms are checked against.

Internally the R-matrix weights depend only on differences of rapidities
divided by c, so all rapidities and c are rescaled by a common denominator
to integers, the integer matrix c * R is applied, and the single division
by c^(#gates) and by the boundary-vector denominators happens at the end.
Amplitudes are Python ints in numpy object arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import DegeneracyError, ParameterError
from .exact import interpolate
from .scalar import as_rational
from .vertex import BoundaryVector, BoundaryVectors, RMatrix, pairing


@dataclass(frozen=True)
class ModelParams:
    """Crossing constant, horizontal rapidities u_1..u_m, vertical v_1..v_n."""

    c: Fraction
    u: tuple
    v: tuple
    vectors: BoundaryVectors

    def __post_init__(self):
        object.__setattr__(self, "c", as_rational(self.c))
        object.__setattr__(self, "u", tuple(as_rational(x) for x in self.u))
        object.__setattr__(self, "v", tuple(as_rational(x) for x in self.v))
        if self.c == 0:
            raise ParameterError("crossing constant c must be nonzero")

    @property
    def m(self) -> int:
        return len(self.u)

    @property
    def n(self) -> int:
        return len(self.v)


@dataclass
class StateVector:
    """Dense amplitudes over L two-dimensional sites; site k is bit L - k."""

    num_sites: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=object).reshape(-1)
        if amps.shape[0] != 1 << self.num_sites:
            raise ParameterError(
                f"state over {self.num_sites} sites needs {1 << self.num_sites} amplitudes"
            )
        self.amplitudes = amps

    @classmethod
    def basis(cls, bits: Sequence[int]) -> "StateVector":
        """Basis state from per-site bits (0 for |1>, 1 for |2>), site 1 first."""
        L = len(bits)
        amps = np.full(1 << L, Fraction(0), dtype=object)
        idx = 0
        for b in bits:
            idx = 2 * idx + int(b)
        amps[idx] = Fraction(1)
        return cls(L, amps)

    @classmethod
    def product(cls, vectors: Sequence[BoundaryVector]) -> "StateVector":
        t = np.array(Fraction(1), dtype=object)
        for vec in vectors:
            t = np.multiply.outer(t, np.array([vec.c1, vec.c2], dtype=object))
        return cls(len(vectors), t.reshape(-1))

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.num_sites)

    def contract(self, vectors: Sequence[BoundaryVector]) -> Fraction:
        """<v_1| x ... x <v_L| applied to this state."""
        if len(vectors) != self.num_sites:
            raise ParameterError("need one dual vector per site")
        t = self.tensor()
        for vec in vectors:
            t = vec.c1 * t[0] + vec.c2 * t[1]
        return Fraction(t)

    def apply_gate(self, site_j: int, site_k: int, R: RMatrix) -> "StateVector":
        return apply_gate(self, site_j, site_k, R)


def _gate(t: np.ndarray, ax_j: int, ax_k: int, a, b, w) -> np.ndarray:
    """Apply the six-vertex matrix with weights (a, b, w) to tensor axes (ax_j, ax_k)."""
    t = np.moveaxis(t, (ax_j, ax_k), (0, 1))
    x00, x01, x10, x11 = t[0, 0], t[0, 1], t[1, 0], t[1, 1]
    out = np.empty_like(t)
    out[0, 0] = a * x00
    out[0, 1] = b * x01 + w * x10
    out[1, 0] = w * x01 + b * x10
    out[1, 1] = a * x11
    return np.moveaxis(out, (0, 1), (ax_j, ax_k))


def apply_gate(state: StateVector, site_j: int, site_k: int, R: RMatrix) -> StateVector:
    """Apply R to the (site_j, site_k) factor pair; site_j is R's first factor."""
    L = state.num_sites
    if not (1 <= site_j <= L and 1 <= site_k <= L) or site_j == site_k:
        raise ParameterError(f"bad site pair ({site_j}, {site_k}) for {L} sites")
    t = _gate(state.tensor(), site_j - 1, site_k - 1, R.a, R.b, R.cw)
    return StateVector(L, t.reshape(-1))


class _IntFrame:
    """Integer rescaling of rapidities and c by a common denominator."""

    def __init__(self, rapidities: Sequence[Fraction], c: Fraction):
        c = as_rational(c)
        if c == 0:
            raise ParameterError("crossing constant c must be nonzero")
        D = math.lcm(c.denominator, *(as_rational(x).denominator for x in rapidities))
        self.D = D
        self.C = int(c * D)
        self.gates = 0

    def weights(self, x: Fraction, y: Fraction) -> tuple[int, int, int]:
        self.gates += 1
        d = int((x - y) * self.D)
        return d + self.C, d, self.C

    def denominator(self) -> Fraction:
        return Fraction(self.C) ** self.gates


def _int_vec(vec: BoundaryVector) -> tuple[int, int, int]:
    """(p, q, d) with vec = (p, q) / d."""
    d = math.lcm(vec.c1.denominator, vec.c2.denominator)
    return int(vec.c1 * d), int(vec.c2 * d), d


def _track(stats: Optional[dict], t) -> None:
    if stats is None:
        return
    arr = np.asarray(t, dtype=object).reshape(-1)
    top = max((abs(int(x)).bit_length() for x in arr), default=0)
    stats["max_bits"] = max(stats.get("max_bits", 0), top)


def _product_tensor(p: int, q: int, count: int) -> np.ndarray:
    t = np.array(1, dtype=object)
    pair = np.array([p, q], dtype=object)
    for _ in range(count):
        t = np.multiply.outer(t, pair)
    return t


def _contract_all(t, p: int, q: int, count: int):
    for _ in range(count):
        t = p * t[0] + q * t[1]
    return t


def triangular_contract(
    u: Sequence, c, e: BoundaryVector, s: BoundaryVector, stats: Optional[dict] = None
) -> Fraction:
    """Z_n(u_1..u_n) with |s> on every line in and <e| on every line out.

    Gate order: group i = 1..n-1 acts after groups 1..i-1, and inside a
    group R_{i,i+1}(u_i - u_{i+1}) acts first, then R_{i,i+2}, ..., R_{i,n}.
    n = 0 gives 1.
    """
    u = [as_rational(x) for x in u]
    frame = _IntFrame(u, c)
    n = len(u)
    e1, e2, de = _int_vec(BoundaryVector.of(e))
    s1, s2, ds = _int_vec(BoundaryVector.of(s))
    t = _product_tensor(s1, s2, n)
    for i in range(n - 1):
        for k in range(i + 1, n):
            t = _gate(t, i, k, *frame.weights(u[i], u[k]))
            _track(stats, t)
    value = _contract_all(t, e1, e2, n)
    return Fraction(int(value)) / (frame.denominator() * Fraction(de * ds) ** n)


def _gdw_core(u, v, c, vecs: BoundaryVectors, east: BoundaryVector, stats=None) -> Fraction:
    u = [as_rational(x) for x in u]
    v = [as_rational(x) for x in v]
    frame = _IntFrame(u + v, c)
    m, n = len(u), len(v)
    n1, n2, dn = _int_vec(vecs.n)
    e1, e2, de = _int_vec(east)
    s1, s2, ds = _int_vec(vecs.s)
    w1, w2, dw = _int_vec(vecs.w)
    col = _product_tensor(s1, s2, n)
    for i in range(m):
        # aux site for row i is axis 0, column k is axis k
        full = np.stack([np.asarray(w1 * col, dtype=object), np.asarray(w2 * col, dtype=object)])
        for k in range(n):
            full = _gate(full, 0, k + 1, *frame.weights(u[i], v[k]))
            _track(stats, full)
        col = e1 * full[0] + e2 * full[1]
    value = _contract_all(col, n1, n2, n)
    scale = Fraction(dn * ds) ** n * Fraction(de * dw) ** m
    return Fraction(int(value)) / (frame.denominator() * scale)


def gdw_contract(params: ModelParams, stats: Optional[dict] = None) -> Fraction:
    """Z_{m,n}(u | v) by row peeling over the 2^n column space.

    Row i = 1..m acts after rows 1..i-1; within a row R_{a_i,1}(u_i - v_1)
    acts first and R_{a_i,n}(u_i - v_n) last.  Cost O(m n 2^n).
    """
    return _gdw_core(params.u, params.v, params.c, params.vectors, params.vectors.e, stats)


def gdw_contract_fixed_east(params: ModelParams, east_override) -> Fraction:
    """Z_{m,n} with the east vector replaced (e.g. (1, 0) for the EFP numerator)."""
    east = BoundaryVector.of(east_override, "e")
    return _gdw_core(params.u, params.v, params.c, params.vectors, east)


def _split(v_all: Sequence, split) -> tuple[list[Fraction], int, int]:
    v_all = [as_rational(x) for x in v_all]
    n, m = (int(x) for x in split)
    if n < 0 or m < 0 or n + m != len(v_all):
        raise ParameterError(f"split {split} does not match {len(v_all)} rapidities")
    return v_all, n, m


def default_aux_east(vecs: BoundaryVectors) -> BoundaryVector:
    """East vector used for the trapezoid quotient: vecs.e unless <e|s> = 0."""
    if pairing(vecs.e, vecs.s) != 0:
        return vecs.e
    if vecs.s.c1 != 0:
        return BoundaryVector(1, 0, "e")
    if vecs.s.c2 != 0:
        return BoundaryVector(0, 1, "e")
    raise DegeneracyError("<e|s> (s = 0)", "trapezoid normalization")


def trapezoid_value(
    v_all: Sequence, split, c, vecs: BoundaryVectors, aux_east=None, stats=None
) -> Fraction:
    """T_{n,m}(v_1..v_n | v_{n+1}..v_{n+m}) as a quotient of two contractions.

    The specialized rectangle Z_{m,n+m}(v_{n+1}..v_{n+m} | v_1..v_{n+m})
    divided by the triangle Z_m(v_{n+1}..v_{n+m}), both contracted with
    the same east vector; the result does not depend on that choice.
    """
    v_all, n, m = _split(v_all, split)
    east = default_aux_east(vecs) if aux_east is None else BoundaryVector.of(aux_east, "e")
    top = v_all[n:]
    divisor = triangular_contract(top, c, east, vecs.s)
    if divisor == 0:
        c = as_rational(c)
        if m and pairing(east, vecs.s) == 0:
            raise DegeneracyError("<e|s>", "trapezoid normalization Z_m")
        for i in range(m):
            for j in range(i + 1, m):
                if top[i] - top[j] + c == 0:
                    raise DegeneracyError(
                        f"v_{n + i + 1} - v_{n + j + 1} + c", "trapezoid normalization Z_m"
                    )
        raise DegeneracyError("Z_m", "trapezoid normalization")
    rect = _gdw_core(top, v_all, c, vecs, east, stats)
    return rect / divisor


def trapezoid_direct(v_all: Sequence, split, c, vecs: BoundaryVectors, stats=None) -> Fraction:
    """T_{n,m} contracted on its own lattice, with no division.

    Setting u_i = v_{n+i} in Z_{m,n+m} turns one vertex per row into a
    permutation, which rewires the rectangle into two disconnected pieces.
    The left piece has n vertical lines (|s> in, <n| out) and m bent lines
    b_1..b_m (|w> in, <n| out).  Bent line i crosses the n vertical lines
    and then the already-bent lines b_1..b_{i-1}, with b_i as the first
    tensor factor of each R.
    """
    v_all, n, m = _split(v_all, split)
    frame = _IntFrame(v_all, c)
    n1, n2, dn = _int_vec(vecs.n)
    s1, s2, ds = _int_vec(vecs.s)
    w1, w2, dw = _int_vec(vecs.w)
    t = np.multiply.outer(_product_tensor(s1, s2, n), _product_tensor(w1, w2, m))
    for i in range(m):
        bi = n + i
        for k in range(n):
            t = _gate(t, bi, k, *frame.weights(v_all[bi], v_all[k]))
            _track(stats, t)
        for k in range(i):
            t = _gate(t, bi, n + k, *frame.weights(v_all[bi], v_all[n + k]))
            _track(stats, t)
    value = _contract_all(t, n1, n2, n + m)
    scale = Fraction(dn) ** (n + m) * Fraction(ds) ** n * Fraction(dw) ** m
    return Fraction(int(value)) / (frame.denominator() * scale)


def degree_profile(
    u: Sequence, var_index: int, nodes: Sequence, c, e: BoundaryVector, s: BoundaryVector
) -> list[Fraction]:
    """Coefficients of Z_n as a polynomial in u_j (1-based), lowest degree first.

    Z_n is sampled by contraction at each node with the other u's fixed.
    """
    u = [as_rational(x) for x in u]
    if not 1 <= var_index <= len(u):
        raise ParameterError(f"var_index {var_index} out of range for n={len(u)}")
    values = []
    for x in nodes:
        uu = list(u)
        uu[var_index - 1] = as_rational(x)
        values.append(triangular_contract(uu, c, e, s))
    return interpolate(nodes, values)
