import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from svf.closed_forms import beta
from svf.efp import EfpParams, efp_components, efp_determinant, gamma
from svf.errors import DegeneracyError, ParameterError, PoleError
from svf.suites import Sampler, draw_regime_params
from svf.vertex import BoundaryVectors

HALF_CASE = EfpParams(1, 1, (0, 1), 1, BoundaryVectors((1, 1), (0, 0), (1, 0), (0, 1)))
nonneg = st.fractions(min_value=0, max_value=20, max_denominator=10)
positive = nonneg.filter(lambda x: x > 0)


def test_gamma_examples():
    assert gamma(BoundaryVectors((1, 1), (1, 1), (1, 1), (1, 1))) == 0
    assert gamma(BoundaryVectors((1, 1), (0, 0), (1, 0), (0, 1))) == 1


def test_gamma_degenerate():
    with pytest.raises(DegeneracyError, match="s1"):
        gamma(BoundaryVectors((1, 1), (0, 0), (0, 1), (0, 1)))
    with pytest.raises(DegeneracyError, match="n1 w1"):
        gamma(BoundaryVectors((1, -1), (0, 0), (1, 0), (1, 1)))


@settings(max_examples=50)
@given(nonneg, nonneg, positive, nonneg, nonneg, nonneg)
def test_gamma_is_beta_at_east_one(n1, n2, s1, s2, w1, w2):
    V = BoundaryVectors((n1, n2), (3, 7), (s1, s2), (w1, w2))
    if n1 * w1 + n2 * w2 == 0:
        return
    assert gamma(V) == beta(V.with_east((1, 0)))


def test_half_case():
    assert efp_determinant(HALF_CASE) == Fraction(1, 2)
    assert efp_components(HALF_CASE) == Fraction(1, 2)


def test_empty_is_one():
    V = BoundaryVectors((1, 2), (0, 0), (3, 1), (1, 1))
    p = EfpParams(3, 0, (0, 1, 2), 2, V)
    assert efp_determinant(p) == efp_components(p) == 1


def test_gamma_zero_gives_prefactor():
    V = BoundaryVectors((1, 2), (0, 0), (3, 1), (6, 2))  # s parallel to w
    p = EfpParams(2, 2, (0, 1, 3, 7), 1, V)
    expected = Fraction(1 * 3, 1 * 3 + 2 * 1) ** 2
    assert efp_determinant(p) == expected == efp_components(p)


@pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (2, 2), (3, 2), (1, 3), (0, 2), (4, 4)])
def test_routes_agree(n, m):
    rng = random.Random(7 * n + m)
    checked = 0
    while checked < 5:
        V = BoundaryVectors(*[(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5))) for _ in range(4)])
        v = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 10)) for _ in range(n + m))
        p = EfpParams(n, m, v, Fraction(rng.randint(1, 9)), V)
        try:
            a = efp_determinant(p)
            b = efp_components(p)
        except PoleError:
            continue
        assert a == b
        checked += 1


@pytest.mark.parametrize("seed", range(5))
def test_probabilistic_regime(seed):
    smp = Sampler(seed)
    for n, m in [(2, 1), (3, 2), (1, 3), (4, 2)]:
        p = draw_regime_params(smp, n, m)
        assert p.in_probabilistic_regime()
        try:
            value = efp_determinant(p)
        except PoleError:
            continue
        assert 0 <= value <= 1
        assert value == efp_components(p)


def test_pole_named():
    V = BoundaryVectors((1, 1), (0, 0), (1, 0), (0, 1))
    with pytest.raises(PoleError, match="v_2 - v_1 \\+ c"):
        efp_determinant(EfpParams(1, 1, (0, -1), 1, V))


def test_bad_params():
    V = HALF_CASE.vectors
    with pytest.raises(ParameterError):
        EfpParams(1, 1, (0,), 1, V)
    with pytest.raises(ParameterError):
        EfpParams(1, 1, (0, 1), 0, V)
