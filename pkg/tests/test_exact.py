from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import leibniz_det
from svf.errors import ParameterError
from svf.exact import det, interpolate

small = st.fractions(min_value=-20, max_value=20, max_denominator=10)


@st.composite
def square(draw, max_size=5):
    m = draw(st.integers(0, max_size))
    return [[draw(small) for _ in range(m)] for _ in range(m)]


@settings(max_examples=200)
@given(square())
def test_bareiss_matches_leibniz(rows):
    assert det(rows) == leibniz_det(rows)


def test_zero_pivot_needs_swap():
    rows = [[0, 1, 2], [3, 0, 1], [1, 1, 0]]
    assert det(rows) == leibniz_det([[Fraction(x) for x in r] for r in rows]) == 7


def test_singular():
    assert det([[1, 2], [2, 4]]) == 0
    assert det([[0, 0], [0, 5]]) == 0


def test_empty_is_one():
    assert det([]) == 1


def test_not_square():
    with pytest.raises(ParameterError):
        det([[1, 2]])


@given(st.lists(small, min_size=1, max_size=6))
def test_interpolation_recovers_coefficients(coeffs):
    nodes = [Fraction(k) for k in range(-3, len(coeffs) + 1)]
    values = [sum(a * x**d for d, a in enumerate(coeffs)) for x in nodes]
    got = interpolate(nodes, values)
    assert got[: len(coeffs)] == coeffs
    assert all(x == 0 for x in got[len(coeffs):])


def test_interpolation_repeated_nodes():
    with pytest.raises(ParameterError):
        interpolate([1, 1], [0, 0])
