"""Randomized exact identity checks, shared by the CLI and the test suite.

Each check draws one parameter set from a seeded Sampler, evaluates both
sides of an identity exactly and returns an Outcome.  Draws that hit a pole
of a closed form raise Redraw and are retried with fresh parameters, so a
reported failure always means two exact values disagreed.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import closed_forms as cf
from .contraction import (
    ModelParams,
    degree_profile,
    gdw_contract,
    trapezoid_direct,
    trapezoid_value,
    triangular_contract,
)
from .efp import EfpParams, efp_components, efp_determinant, gamma
from .errors import PoleError
from .scalar import format_rational
from .vertex import BoundaryVector, BoundaryVectors, check_unitarity, check_yang_baxter

NUM_RANGE = (-20, 20)
DEN_RANGE = (1, 10)
MAX_REDRAWS = 500
# contraction cost grows as 2^(columns); the trapezoid suites stay below this
MAX_TRAPEZOID_LINES = 12


class Redraw(Exception):
    """The drawn parameters hit a pole; draw again."""


@dataclass
class Outcome:
    identity: str
    ok: bool
    inputs: dict
    expected: str
    actual: str


class Sampler:
    """Seeded source of small random rationals."""

    def __init__(self, seed):
        self.rng = random.Random(seed)

    def rational(self) -> Fraction:
        return Fraction(self.rng.randint(*NUM_RANGE), self.rng.randint(*DEN_RANGE))

    def nonzero(self) -> Fraction:
        while True:
            x = self.rational()
            if x != 0:
                return x

    def positive(self) -> Fraction:
        return Fraction(self.rng.randint(1, NUM_RANGE[1]), self.rng.randint(*DEN_RANGE))

    def nonnegative(self) -> Fraction:
        return Fraction(self.rng.randint(0, NUM_RANGE[1]), self.rng.randint(*DEN_RANGE))

    def rationals(self, k: int) -> list[Fraction]:
        return [self.rational() for _ in range(k)]

    def distinct(self, k: int) -> list[Fraction]:
        out: list[Fraction] = []
        while len(out) < k:
            x = self.rational()
            if x not in out:
                out.append(x)
        return out

    def increasing(self, k: int) -> list[Fraction]:
        return sorted(self.distinct(k))

    def vector(self, role: str = "", nonneg: bool = False) -> BoundaryVector:
        draw = self.nonnegative if nonneg else self.rational
        return BoundaryVector(draw(), draw(), role)

    def vectors(self, nonneg: bool = False) -> BoundaryVectors:
        return BoundaryVectors(*(self.vector(r, nonneg) for r in ("n", "e", "s", "w")))


def _fmt(x) -> str | list:
    if isinstance(x, (list, tuple)):
        return [_fmt(y) for y in x]
    return format_rational(x)


def _vecs_echo(vecs: BoundaryVectors) -> dict:
    return {role: _fmt(list(pair)) for role, pair in vecs.as_dict().items()}


def _equal(identity: str, inputs: dict, expected: Fraction, actual: Fraction) -> Outcome:
    return Outcome(identity, expected == actual, inputs, format_rational(expected), format_rational(actual))


def _all_equal(identity: str, inputs: dict, values: Sequence[Fraction]) -> Outcome:
    ok = all(x == values[0] for x in values)
    return Outcome(identity, ok, inputs, format_rational(values[0]), " | ".join(map(format_rational, values)))


# --- vertex --------------------------------------------------------------


def check_yang_baxter_draw(smp: Sampler) -> Outcome:
    ui, uj, uk, c = smp.rational(), smp.rational(), smp.rational(), smp.nonzero()
    ok = check_yang_baxter(ui, uj, uk, c)
    inputs = {"ui": _fmt(ui), "uj": _fmt(uj), "uk": _fmt(uk), "c": _fmt(c)}
    return Outcome("R12 R13 R23 = R23 R13 R12", ok, inputs, "true", str(ok).lower())


def check_unitarity_draw(smp: Sampler) -> Outcome:
    uj, uk, c = smp.rational(), smp.rational(), smp.nonzero()
    ok = check_unitarity(uj, uk, c)
    inputs = {"uj": _fmt(uj), "uk": _fmt(uk), "c": _fmt(c)}
    return Outcome("R_jk(x) R_kj(-x) = scalar * id", ok, inputs, "true", str(ok).lower())


# --- triangular ----------------------------------------------------------


def check_triangular_factorization(smp: Sampler, n: int) -> Outcome:
    u, c, vecs = smp.rationals(n), smp.nonzero(), smp.vectors()
    inputs = {"u": _fmt(u), "c": _fmt(c), "e": _fmt(list(vecs.e.components())), "s": _fmt(list(vecs.s.components()))}
    return _equal(
        "Z_n contraction = (e.s)^n prod (u_i - u_j + c)/c",
        inputs,
        cf.triangular_factorized(u, c, vecs.e, vecs.s),
        triangular_contract(u, c, vecs.e, vecs.s),
    )


def check_triangular_vanishing(smp: Sampler, n: int, j: int | None = None) -> Outcome:
    if j is None:
        j = smp.rng.randint(1, n - 1)
    u, c, vecs = smp.rationals(n), smp.nonzero(), smp.vectors()
    u[n - 1] = u[j - 1] + c
    inputs = {"u": _fmt(u), "c": _fmt(c), "j": str(j), "e": _fmt(list(vecs.e.components())), "s": _fmt(list(vecs.s.components()))}
    return _equal(f"Z_n = 0 at u_n = u_{j} + c", inputs, Fraction(0), triangular_contract(u, c, vecs.e, vecs.s))


def check_triangular_degree(smp: Sampler, n: int, j: int | None = None) -> Outcome:
    if j is None:
        j = smp.rng.randint(1, n)
    u, c, vecs = smp.rationals(n), smp.nonzero(), smp.vectors()
    nodes = smp.distinct(n + 2)
    coeffs = degree_profile(u, j, nodes, c, vecs.e, vecs.s)
    high = coeffs[n:]
    inputs = {"u": _fmt(u), "c": _fmt(c), "j": str(j), "nodes": _fmt(nodes)}
    ok = all(x == 0 for x in high)
    actual = ", ".join(_fmt(high))
    return Outcome(f"deg_u{j} Z_{n} <= {n - 1}", ok, inputs, "0 at every degree >= n", actual)


def pair_specialize(u: Sequence[Fraction]) -> list[Fraction]:
    """Impose u_{n+1-j} = u_j for every j below the middle."""
    u = list(u)
    n = len(u)
    for j in range(n // 2):
        u[n - 1 - j] = u[j]
    return u


def check_triangular_pair_specialization(smp: Sampler, n: int) -> Outcome:
    u, c, vecs = pair_specialize(smp.rationals(n)), smp.nonzero(), smp.vectors()
    inputs = {"u": _fmt(u), "c": _fmt(c), "e": _fmt(list(vecs.e.components())), "s": _fmt(list(vecs.s.components()))}
    return _equal(
        "Z_n at u_j = u_{n+1-j} equals the unitarity double product",
        inputs,
        cf.pair_specialized_product(u, c, vecs.e, vecs.s),
        triangular_contract(u, c, vecs.e, vecs.s),
    )


# --- generalized domain wall -------------------------------------------


def _gdw_inputs(p: ModelParams) -> dict:
    return {"c": _fmt(p.c), "u": _fmt(p.u), "v": _fmt(p.v), "vectors": _vecs_echo(p.vectors)}


def check_gdw_triple(smp: Sampler, m: int, n: int) -> Outcome:
    p = ModelParams(smp.nonzero(), smp.distinct(m), smp.rationals(n), smp.vectors())
    try:
        values = [gdw_contract(p), cf.gdw_subset_sum(p), cf.gdw_determinant(p)]
    except PoleError as exc:
        raise Redraw(str(exc)) from exc
    identity = "Z_{m,n}: contraction = subset-sum = determinant"
    if m == n == 1:
        values.append(cf.z11_explicit(p.u[0], p.v[0], p.c, p.vectors))
        identity += " = explicit Z_{1,1}"
    return _all_equal(identity, _gdw_inputs(p), values)


def check_gdw_specialization(smp: Sampler, m: int, n: int) -> Outcome:
    v, c, vecs = smp.distinct(n), smp.nonzero(), smp.vectors()
    p = ModelParams(c, v[n - m:], v, vecs)
    values = [cf.gdw_specialized(v, c, vecs, m), gdw_contract(p)]
    try:
        values.append(cf.gdw_subset_sum(p))
    except PoleError:
        # beta undefined at this draw; the lemma is still checked on the contraction
        pass
    return _all_equal("Z_{m,n} at u_i = v_{n-m+i} = specialized product", _gdw_inputs(p), values)


# --- trapezoid -----------------------------------------------------------


def _trap_inputs(v, n, m, c, vecs) -> dict:
    return {"v": _fmt(v), "split": [str(n), str(m)], "c": _fmt(c), "vectors": _vecs_echo(vecs)}


def check_trapezoid_factorization(smp: Sampler, n: int, m: int) -> Outcome:
    v, c, vecs = smp.rationals(n + m), smp.nonzero(), smp.vectors()
    try:
        quotient = trapezoid_value(v, (n, m), c, vecs)
    except PoleError as exc:
        raise Redraw(str(exc)) from exc
    values = [cf.trapezoid_factorized(v, (n, m), c, vecs), quotient, trapezoid_direct(v, (n, m), c, vecs)]
    return _all_equal("T_{n,m}: factorized = quotient = direct lattice", _trap_inputs(v, n, m, c, vecs), values)


def check_trapezoid_e_independence(smp: Sampler, n: int, m: int) -> Outcome:
    v, c, vecs = smp.rationals(n + m), smp.nonzero(), smp.vectors()
    e1, e2 = smp.vector("e"), smp.vector("e")
    try:
        a = trapezoid_value(v, (n, m), c, vecs, aux_east=e1)
        b = trapezoid_value(v, (n, m), c, vecs, aux_east=e2)
    except PoleError as exc:
        raise Redraw(str(exc)) from exc
    inputs = _trap_inputs(v, n, m, c, vecs)
    inputs["aux_east"] = [_fmt(list(e1.components())), _fmt(list(e2.components()))]
    return _equal("T_{n,m} quotient independent of auxiliary e", inputs, a, b)


def check_two_regime(smp: Sampler, n: int, m: int) -> Outcome:
    v, c, vecs = smp.rationals(n + m), smp.nonzero(), smp.vectors()
    whole = gdw_contract(ModelParams(c, v[n:], v, vecs))
    parts = trapezoid_direct(v, (n, m), c, vecs) * triangular_contract(v[n:], c, vecs.e, vecs.s)
    return _equal("Z_{m,n+m}|u=v_top = T_{n,m} * Z_m", _trap_inputs(v, n, m, c, vecs), parts, whole)


# --- emptiness formation probability -----------------------------------


def _efp_inputs(p: EfpParams) -> dict:
    return _trap_inputs(p.v, p.n, p.m, p.c, p.vectors)


def check_efp_equality(smp: Sampler, n: int, m: int) -> Outcome:
    p = EfpParams(n, m, tuple(smp.rationals(n + m)), smp.nonzero(), smp.vectors())
    try:
        det_value = efp_determinant(p)
        comp_value = efp_components(p)
        g = gamma(p.vectors)
        b = cf.beta(p.vectors.with_east((1, 0)))
    except PoleError as exc:
        raise Redraw(str(exc)) from exc
    ok = det_value == comp_value and g == b
    return Outcome(
        "P(m) determinant = components; gamma = beta at e=(1,0)",
        ok,
        _efp_inputs(p),
        f"{format_rational(comp_value)}; gamma={format_rational(b)}",
        f"{format_rational(det_value)}; gamma={format_rational(g)}",
    )


def draw_regime_params(smp: Sampler, n: int, m: int) -> EfpParams:
    """Strictly increasing v, c > 0, nonnegative n, s, w with s1 > 0."""
    vecs = smp.vectors(nonneg=True)
    if vecs.s.c1 == 0:
        vecs = BoundaryVectors(vecs.n, vecs.e, (smp.positive(), vecs.s.c2), vecs.w)
    return EfpParams(n, m, tuple(smp.increasing(n + m)), smp.positive(), vecs)


def check_efp_regime(smp: Sampler, n: int, m: int) -> Outcome:
    p = draw_regime_params(smp, n, m)
    try:
        det_value = efp_determinant(p)
        comp_value = efp_components(p)
    except PoleError as exc:
        raise Redraw(str(exc)) from exc
    ok = det_value == comp_value and 0 <= det_value <= 1
    return Outcome("0 <= P(m) <= 1 in the ordered nonnegative regime", ok, _efp_inputs(p), "in [0, 1]", format_rational(det_value))


# --- suite registry ----------------------------------------------------


@dataclass
class Suite:
    name: str
    check: Callable[..., Outcome]
    sizes: Callable[[int], list[tuple]]


def _tri_sizes(lo: int) -> Callable[[int], list[tuple]]:
    return lambda k: [(n,) for n in range(lo, max(k, lo) + 1)]


def _gdw_sizes(k: int) -> list[tuple]:
    return [(m, n) for n in range(1, k + 1) for m in range(1, n + 1)]


def _trap_sizes(k: int) -> list[tuple]:
    total = min(2 * k, MAX_TRAPEZOID_LINES)
    return [(n, m) for t in range(1, total + 1) for m in range(0, t + 1) for n in [t - m]]


def _efp_sizes(k: int) -> list[tuple]:
    return [(n, m) for n in range(0, k + 1) for m in range(0, min(k, 4) + 1)]


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("yang-baxter", check_yang_baxter_draw, lambda k: [()]),
        Suite("unitarity", check_unitarity_draw, lambda k: [()]),
        Suite("triangular-factorization", check_triangular_factorization, _tri_sizes(1)),
        Suite("triangular-vanishing", check_triangular_vanishing, _tri_sizes(2)),
        Suite("triangular-degree", check_triangular_degree, _tri_sizes(2)),
        Suite("triangular-pair-specialization", check_triangular_pair_specialization, _tri_sizes(2)),
        Suite("gdw-triple-equality", check_gdw_triple, _gdw_sizes),
        Suite("gdw-specialization", check_gdw_specialization, _gdw_sizes),
        Suite("trapezoid-factorization", check_trapezoid_factorization, _trap_sizes),
        Suite("trapezoid-e-independence", check_trapezoid_e_independence, _trap_sizes),
        Suite("two-regime-factorization", check_two_regime, _trap_sizes),
        Suite("efp-equality", check_efp_equality, _efp_sizes),
        Suite("efp-regime", check_efp_regime, _efp_sizes),
    ]
}


def run_check(check: Callable[..., Outcome], smp: Sampler, *sizes) -> Outcome:
    """Run one check, redrawing on poles."""
    last = None
    for _ in range(MAX_REDRAWS):
        try:
            return check(smp, *sizes)
        except Redraw as exc:
            last = exc
    return Outcome(check.__name__, False, {"sizes": list(map(str, sizes))}, "pole-free draw", f"gave up: {last}")


@dataclass
class SuiteReport:
    suite: str
    trials: int
    seed: int
    max_n: int
    passes: int = 0
    failures: list = field(default_factory=list)
    suites: list = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        d = asdict(self)
        if not self.suites:
            del d["suites"]
        return d

    @property
    def ok(self) -> bool:
        return not self.failures


def run_suite(name: str, trials: int, seed: int, max_n: int) -> SuiteReport:
    """Run ``trials`` draws of one suite; sizes cycle through every allowed shape."""
    if name == "all":
        return run_all(trials, seed, max_n)
    if name not in SUITES:
        raise KeyError(name)
    suite = SUITES[name]
    start = time.perf_counter()
    smp = Sampler(f"{seed}:{name}")
    sizes = suite.sizes(max_n)
    report = SuiteReport(name, trials, seed, max_n)
    for t in range(trials):
        outcome = run_check(suite.check, smp, *sizes[t % len(sizes)])
        if outcome.ok:
            report.passes += 1
        else:
            report.failures.append({"trial": t, **asdict(outcome)})
    report.elapsed = round(time.perf_counter() - start, 3)
    return report


def run_all(trials: int, seed: int, max_n: int) -> SuiteReport:
    start = time.perf_counter()
    report = SuiteReport("all", 0, seed, max_n)
    for name in SUITES:
        sub = run_suite(name, trials, seed, max_n)
        report.trials += sub.trials
        report.passes += sub.passes
        report.failures.extend({"suite": name, **f} for f in sub.failures)
        report.suites.append(sub.to_dict())
    report.elapsed = round(time.perf_counter() - start, 3)
    return report
