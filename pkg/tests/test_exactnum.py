import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mopkit.errors import IncompatibleGammaError, PoleError
from mopkit.exactnum import (
    GammaScaled,
    as_rational,
    gamma,
    gamma_ratio,
    gs_add,
    gs_mul,
    gs_to_float,
    pochhammer,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
positive_non_integers = st.fractions(min_value=Fraction(1, 12), max_value=12, max_denominator=12).filter(
    lambda x: x.denominator != 1
)


def test_pochhammer_values():
    assert pochhammer(3, 2) == 12
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(-2, 3) == 0
    assert pochhammer(Fraction(7, 3), 0) == 1


def test_pochhammer_rejects_negative_length():
    with pytest.raises(ValueError):
        pochhammer(1, -1)


def test_as_rational_refuses_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational("-3/4") == Fraction(-3, 4)


def test_gamma_ratio_integer_shift_is_rational():
    assert gamma_ratio(5, 2) == 24
    assert gamma_ratio(Fraction(7, 2), Fraction(3, 2)) == Fraction(15, 4)
    assert gamma_ratio(2, 5) == Fraction(1, 24)
    assert gamma_ratio(Fraction(7, 2), Fraction(3, 2)).is_rational


def test_gamma_ratio_non_integer_shift_keeps_gammas():
    g = gamma_ratio(Fraction(1, 3), Fraction(1, 2))
    assert not g.is_rational
    assert g.numer == (Fraction(1, 3),) and g.denom == (Fraction(1, 2),)


def test_gamma_at_integer_folds_to_factorial():
    assert gamma(6) == 120
    assert gamma(1) == 1


def test_gamma_three_halves_numeric():
    with mpmath.workprec(128):
        assert abs(gs_to_float(gamma(Fraction(3, 2)), 128) - mpmath.sqrt(mpmath.pi) / 2) < mpmath.mpf(2) ** -125


def test_poles_raise():
    with pytest.raises(PoleError):
        gamma(0)
    with pytest.raises(PoleError):
        GammaScaled(1, (), (-3,))
    with pytest.raises(PoleError):
        gamma_ratio(-1, Fraction(1, 2))


def test_mismatched_addition_raises():
    with pytest.raises(IncompatibleGammaError):
        gamma(Fraction(1, 3)) + gamma(Fraction(1, 2))
    with pytest.raises(IncompatibleGammaError):
        gamma(Fraction(1, 3)).as_rational()


def test_addition_with_zero_and_matching_residuals():
    g = gamma(Fraction(1, 3))
    assert g + 0 == g
    assert gs_add(g, g) == 2 * g
    assert (gamma(Fraction(4, 3)) - g / 3).is_zero()


def test_mul_and_reciprocal():
    g = gamma(Fraction(2, 5))
    assert gs_mul(g, g.reciprocal()) == 1
    assert (g * Fraction(3, 2) / g) == Fraction(3, 2)
    with pytest.raises(ZeroDivisionError):
        GammaScaled(0).reciprocal()


def test_float_conversion_and_overflow():
    assert float(GammaScaled(Fraction(3, 4))) == 0.75
    huge = GammaScaled(1, (Fraction(801, 2),))
    with pytest.raises(OverflowError):
        float(huge)
    assert gs_to_float(huge, 64) > 0
    with pytest.raises(ValueError):
        gs_to_float(huge, 32)


def test_str_parse_round_trip_example():
    g = GammaScaled(Fraction(-3, 2), (Fraction(1, 3),), (Fraction(1, 2),))
    assert str(g) == "-3/2 * Γ(1/3) / Γ(1/2)"
    assert GammaScaled.parse(str(g)) == g
    with pytest.raises(ValueError):
        GammaScaled.parse("3 * Gamma(2)")


@given(rationals, st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_split(x, m, n):
    assert pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(x + m, n)


@given(positive_non_integers, positive_non_integers)
def test_gamma_ratio_inverse(a, b):
    assert gamma_ratio(a, b) * gamma_ratio(b, a) == 1


@given(st.lists(positive_non_integers, min_size=1, max_size=6), st.lists(positive_non_integers, max_size=6), st.randoms())
def test_canonical_form_ignores_operation_order(numer, denom, r):
    factors = [gamma(a) for a in numer] + [gamma(b).reciprocal() for b in denom]
    forward = GammaScaled(1)
    for f in factors:
        forward = forward * f
    r.shuffle(factors)
    shuffled = GammaScaled(1)
    for f in factors:
        shuffled = shuffled * f
    assert forward == shuffled
    assert forward == GammaScaled(1, numer, denom)
    assert hash(forward) == hash(shuffled)


@given(st.fractions(max_denominator=10**6))
def test_rational_to_float_is_correctly_rounded(x):
    assert float(GammaScaled(x)) == float(x)


@given(rationals, st.lists(positive_non_integers, max_size=4), st.lists(positive_non_integers, max_size=4))
def test_parse_round_trip(r, numer, denom):
    g = GammaScaled(r, numer, denom)
    assert GammaScaled.parse(str(g)) == g


@given(positive_non_integers, st.integers(0, 6))
def test_shift_matches_numeric_gamma(a, k):
    g = gamma(a + k)
    with mpmath.workprec(100):
        ref = mpmath.gamma(mpmath.mpf(a.numerator) / a.denominator + k)
        assert abs(gs_to_float(g, 100) / ref - 1) < mpmath.mpf(2) ** -90


def test_numeric_sign_of_negative_arguments():
    g = gamma(Fraction(-1, 2))
    assert g == GammaScaled(-2, (Fraction(1, 2),))
    assert abs(float(g) - float(mpmath.gamma(-0.5))) < 1e-12
    rnd = random.Random(1)
    for _ in range(20):
        a = Fraction(rnd.randint(-40, -1), 7)
        if a.denominator == 1:
            continue
        assert abs(float(gamma(a)) / float(mpmath.gamma(float(a))) - 1) < 1e-10
