from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strongmatch.numeric import (QSqrt3, ROOT3, format_number, is_exact, parse_number, tol)

small = st.fractions(min_value=-50, max_value=50, max_denominator=60)


def test_root3_squares_to_three():
    assert ROOT3 * ROOT3 == 3


@given(small, small)
def test_sign_matches_float(a, b):
    x = QSqrt3(a, b)
    f = float(x)
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)


@given(small, small, small, small)
def test_ordering_matches_float(a, b, c, d):
    x, y = QSqrt3(a, b), QSqrt3(c, d)
    if abs(float(x) - float(y)) > 1e-9:
        assert (x < y) == (float(x) < float(y))


def test_exact_equality_near_tie():
    # 1351/780 is a convergent of sqrt3; the difference is ~ 5e-7 but nonzero
    assert QSqrt3(0, 1) != Fraction(1351, 780)
    assert QSqrt3(Fraction(1351, 780), -1).sign() == 1


def test_tolerance_policy():
    assert tol(1, Fraction(1, 3), ROOT3) == 0
    assert tol(1, 0.5) == 1e-9
    assert is_exact(3) and not is_exact(3.0)


def test_parse_and_format():
    assert parse_number("0.1", exact=True) == Fraction(1, 10)
    assert parse_number("0.25") == 0.25
    with pytest.raises(ValueError):
        parse_number("inf")
    assert format_number(0.1) == "0.100000000000"
    assert format_number(Fraction(1, 3)) == "0.333333333333"
    assert format_number(-0.0) == "0.000000000000"
    assert format_number(-1e-15) == "0.000000000000"
