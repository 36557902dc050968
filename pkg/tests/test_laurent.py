from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from dehn4.laurent import LaurentPoly, poly_det, _exact_div


def lp(d):
    return LaurentPoly(d)


def test_construction_drops_zeros_and_merges():
    p = LaurentPoly([(1, 2), (1, -2), (0, 3)])
    assert p == lp({0: 3})
    assert lp({}).is_zero()
    assert LaurentPoly.one().is_one()


def test_arithmetic():
    p = lp({1: 1, 0: -1})
    q = lp({-1: 1, 0: 1})
    assert p + q == lp({1: 1, -1: 1})
    assert p - p == LaurentPoly.zero()
    assert p * q == lp({1: 1, -1: -1})
    assert (p * q).coeff(0) == 0


def test_evaluate_exact_rationals():
    p = lp({2: 1, 0: -1, -2: 1})
    assert p.evaluate(2) == Fraction(4) - 1 + Fraction(1, 4)
    assert p.evaluate(Fraction(1, 2)) == p.evaluate(2)


def test_substitution_and_reciprocal():
    p = lp({1: 1, 0: -1, -1: 1})
    assert p.substituted(3) == lp({3: 1, 0: -1, -3: 1})
    assert p.substituted(-1) == p
    assert p.reciprocal() == p
    with pytest.raises(ValueError):
        p.substituted(0)


def test_normalized_centers_and_fixes_sign():
    raw = lp({2: -1, 1: 3, 0: -1})  # figure-eight determinant, uncentered
    norm = raw.normalized()
    assert norm == lp({1: -1, 0: 3, -1: -1})
    assert norm.evaluate(1) == 1
    flipped = lp({1: 2, 0: -5, -1: 2})  # value -1 at t = 1
    assert flipped.normalized() == lp({1: -2, 0: 5, -1: -2})


def test_normalized_rejects_bad_input():
    with pytest.raises(ValueError, match="zero polynomial"):
        LaurentPoly.zero().normalized()
    with pytest.raises(ValueError, match="palindromic"):
        lp({1: 2, 0: 1}).normalized()
    with pytest.raises(ValueError, match="odd span"):
        lp({1: 1, 0: 2, -1: 2, -2: 1}).normalized()
    with pytest.raises(ValueError, match="expected"):
        lp({1: 1, 0: 1, -1: 1}).normalized()


def test_unit_equal():
    p = lp({1: 1, 0: -1, -1: 1})
    assert p.unit_equal(p.shifted(4))
    assert p.unit_equal(-p)
    assert not p.unit_equal(lp({0: 1}))
    assert LaurentPoly.zero().unit_equal(LaurentPoly.zero())
    assert not LaurentPoly.zero().unit_equal(p)


def test_str_forms():
    assert str(LaurentPoly.zero()) == "0"
    assert str(lp({1: 1, 0: -1, -1: 1})) == "t - 1 + t^-1"
    assert str(lp({2: -3})) == "-3*t^2"


def test_poly_det_small_cases():
    one = LaurentPoly.one()
    t = lp({1: 1})
    assert poly_det([]) == one
    assert poly_det([[t]]) == t
    # det [[t, 1], [1, t]] = t^2 - 1
    assert poly_det([[t, one], [one, t]]) == lp({2: 1, 0: -1})
    # zero column
    zero = LaurentPoly.zero()
    assert poly_det([[zero, one], [zero, t]]).is_zero()


def test_poly_det_needs_pivot_swap():
    one = LaurentPoly.one()
    zero = LaurentPoly.zero()
    t = lp({1: 1})
    # det [[0, 1], [1, t]] = -1
    assert poly_det([[zero, one], [one, t]]) == -one


def test_exact_div_errors_on_non_exact():
    t = lp({1: 1})
    with pytest.raises(ArithmeticError):
        _exact_div(lp({1: 1, 0: 1}), lp({0: 2}))
    with pytest.raises(ZeroDivisionError):
        _exact_div(t, LaurentPoly.zero())
    assert _exact_div(lp({2: 1, 0: -1}), lp({1: 1, 0: -1})) == lp({1: 1, 0: 1})


@given(
    st.dictionaries(st.integers(-5, 5), st.integers(-6, 6), max_size=5),
    st.dictionaries(st.integers(-5, 5), st.integers(-6, 6), max_size=5),
)
def test_multiplication_commutes_and_evaluates(c1, c2):
    p, q = lp(c1), lp(c2)
    assert p * q == q * p
    assert (p * q).evaluate(3) == p.evaluate(3) * q.evaluate(3)


@given(st.dictionaries(st.integers(-4, 4), st.integers(-6, 6), min_size=1, max_size=5))
def test_exact_division_inverts_multiplication(coeffs):
    p = lp(coeffs)
    q = lp({2: 1, 0: 3, -1: -2})
    if p.is_zero():
        return
    assert _exact_div(p * q, p) == q
