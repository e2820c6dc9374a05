import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mopkit.errors import DenominatorPoleError, InvalidInstanceError, NonTerminatingError, PoleError
from mopkit.hypergeom import (
    HypergeomSpec,
    KPInstance,
    kp_lhs,
    kp_rhs,
    kp_rhs_original,
    pfq_coefficients,
    pfq_terminating,
    reversal,
)
from mopkit.sampling import random_kp_instance, random_reversal_spec


def direct_sum(numer, denom, x):
    # independent term-by-term evaluation
    total, term, l = Fraction(0), Fraction(1), 0
    while term != 0:
        total += term
        for a in numer:
            term *= Fraction(a) + l
        for b in denom:
            term /= Fraction(b) + l
        term *= Fraction(x) / (l + 1)
        l += 1
    return total


@pytest.mark.parametrize(
    "numer, denom, x, value",
    [
        ([-1], [], 3, -2),
        ([-1, 2], [5], 1, Fraction(3, 5)),
        ([-2, 3], [4], 1, Fraction(1, 10)),
        ([-2, 4, 1], [3, 3], 1, Fraction(7, 18)),
        ([-2, 1, 1], [2, 2], 1, Fraction(11, 18)),
        ([-3, Fraction(1, 2)], [Fraction(3, 4)], Fraction(-2, 3), None),
    ],
)
def test_terminating_values(numer, denom, x, value):
    got = pfq_terminating(HypergeomSpec(numer, denom, x))
    assert got == direct_sum(numer, denom, x)
    if value is not None:
        assert got == value


def test_zero_argument_and_zero_numerator():
    assert pfq_terminating(HypergeomSpec([-5, Fraction(1, 3)], [Fraction(2, 7)], 0)) == 1
    assert pfq_terminating(HypergeomSpec([0, 4], [3], 1)) == 1


def test_non_terminating_rejected():
    with pytest.raises(NonTerminatingError):
        pfq_terminating(HypergeomSpec([Fraction(1, 2)], [2], 1))


def test_denominator_pole_rejected():
    with pytest.raises(DenominatorPoleError):
        pfq_terminating(HypergeomSpec([-3], [-1], 1))
    # the denominator vanishes only after termination
    assert pfq_terminating(HypergeomSpec([-1], [-1], 1)) == 2


def test_coefficients_trim_to_termination():
    c = pfq_coefficients([-2, 3], [4])
    assert c == [1, Fraction(-3, 2), Fraction(3, 5)]


@given(st.integers(0, 2**32))
def test_numerator_permutation_invariance(seed):
    rng = random.Random(seed)
    spec = random_reversal_spec(rng)
    numer = list(spec.numer)
    rng.shuffle(numer)
    assert pfq_terminating(HypergeomSpec(numer, spec.denom[::-1], 1)) == pfq_terminating(spec)


def test_reversal_examples():
    for numer, denom in [([-2, 3], [4]), ([-2, 1, 1], [2, 2]), ([-4, Fraction(1, 3), Fraction(5, 2)], [Fraction(2, 7), Fraction(9, 4)])]:
        spec = HypergeomSpec(numer, denom, 1)
        pref, rev = reversal(spec)
        assert pref * pfq_terminating(rev) == pfq_terminating(spec)


def test_reversal_general_argument():
    spec = HypergeomSpec([-3, Fraction(1, 2), Fraction(2, 3)], [Fraction(5, 4)], Fraction(-2, 5))
    pref, rev = reversal(spec)
    assert rev.argument == Fraction(5, 2)
    assert pref * pfq_terminating(rev) == pfq_terminating(spec)


def test_reversal_pole():
    with pytest.raises(PoleError):
        reversal(HypergeomSpec([-3, -1], [Fraction(1, 2)], 1))


@given(st.integers(0, 2**32))
def test_reversal_property(seed):
    spec = random_reversal_spec(random.Random(seed))
    pref, rev = reversal(spec)
    assert pref * pfq_terminating(rev) == pfq_terminating(spec)


def test_kp_small_cases():
    assert kp_lhs(KPInstance(0, [], [], [Fraction(1, 2)], [1])) == 1
    inst = KPInstance(-1, [], [], [2], [1])
    assert kp_lhs(inst) == kp_rhs(inst) == kp_rhs_original(inst) == Fraction(1, 3)
    # 3F2(-2, 4, 1; 3, 3; 1)
    inst = KPInstance(-2, [3], [1], [1], [2])
    assert kp_lhs(inst) == Fraction(7, 18)
    assert kp_rhs(inst) == Fraction(7, 18)
    assert kp_rhs_original(inst) == Fraction(7, 18)


def test_kp_single_b_example():
    # 2F1(-1, 1/2; 1/2 + 3; 1) = 1 - (1/2)/(7/2)
    inst = KPInstance(-1, [], [], [Fraction(1, 2)], [3])
    assert kp_lhs(inst) == Fraction(6, 7) == kp_rhs(inst) == kp_rhs_original(inst)


def test_kp_validation():
    with pytest.raises(InvalidInstanceError):
        KPInstance(-1, [], [], [Fraction(1, 2), Fraction(3, 2)], [2, 1])
    with pytest.raises(InvalidInstanceError):
        KPInstance(-1, [Fraction(1, 3)], [], [Fraction(1, 2)], [1])
    with pytest.raises(InvalidInstanceError):
        KPInstance(0, [Fraction(1, 3)], [3], [Fraction(1, 2)], [2])
    with pytest.raises(NonTerminatingError):
        kp_lhs(KPInstance(Fraction(1, 2), [], [], [Fraction(1, 3)], [3]))


@given(st.integers(0, 2**32))
def test_kp_identity_property(seed):
    inst = random_kp_instance(random.Random(seed))
    lhs = kp_lhs(inst)
    assert lhs == kp_rhs(inst)
    assert lhs == kp_rhs_original(inst)
    assert lhs == direct_sum(inst.lhs_spec().numer, inst.lhs_spec().denom, 1)
