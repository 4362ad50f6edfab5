"""Directed floats and enclosures: bracketing and direction algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from padelog.directed import (
    DOWN,
    UP,
    DirectedFloat,
    Enclosure,
    log1p_enclosure,
)


def _fractions(max_num=10**6, max_den=10**4):
    return st.builds(
        Fraction,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den),
    )


def test_from_exact_brackets_nondyadic():
    x = Fraction(1, 3)
    up = DirectedFloat.from_exact(x, UP, 64)
    dn = DirectedFloat.from_exact(x, DOWN, 64)
    assert dn.as_fraction() < x < up.as_fraction()


def test_from_exact_dyadic_is_exact():
    x = Fraction(5, 8)
    for d in (UP, DOWN):
        assert DirectedFloat.from_exact(x, d, 64).as_fraction() == x


def test_direction_mismatch_rejected():
    up = DirectedFloat.from_exact(1, UP)
    dn = DirectedFloat.from_exact(1, DOWN)
    with pytest.raises(ValueError):
        up.add(dn)
    with pytest.raises(ValueError):
        up.sub(up)  # sub consumes an opposite-direction bound
    with pytest.raises(ValueError):
        up.div(up)
    up.sub(dn)
    up.div(dn)


def test_neg_flips_direction():
    up = DirectedFloat.from_exact(Fraction(1, 3), UP)
    neg = up.neg()
    assert neg.rounding == DOWN
    assert neg.as_fraction() == -up.as_fraction()


def test_signed_multiplication_rejected():
    up = DirectedFloat.from_exact(-2, UP)
    other = DirectedFloat.from_exact(3, UP)
    with pytest.raises(ValueError):
        up.mul(other)
    with pytest.raises(ValueError):
        other.scale_exact(-1)


def test_exp_log_sqrt_keep_sides_ordered():
    for x in (Fraction(1, 3), Fraction(7, 2), Fraction(1, 97)):
        up = DirectedFloat.from_exact(x, UP, 64)
        dn = DirectedFloat.from_exact(x, DOWN, 64)
        assert dn.exp().as_fraction() < up.exp().as_fraction()
        assert dn.log().as_fraction() < up.log().as_fraction()
        assert dn.sqrt().as_fraction() < up.sqrt().as_fraction()


def test_log_and_sqrt_domain_errors():
    with pytest.raises(ValueError):
        DirectedFloat.from_exact(0, UP).log()
    with pytest.raises(ValueError):
        DirectedFloat.from_exact(-1, DOWN).sqrt()


def test_overflow_saturates_by_direction():
    # exp of a huge bound: rounding up escapes to +inf, rounding down
    # stays at the largest finite value, so both remain valid bounds.
    big = 10**400
    up = DirectedFloat.from_exact(big, UP).exp()
    dn = DirectedFloat.from_exact(big, DOWN).exp()
    assert not up.is_finite()
    assert dn.is_finite()
    with pytest.raises(OverflowError):
        up.as_fraction()


def test_mantissa_exponent_reconstructs_value():
    x = DirectedFloat.from_exact(Fraction(355, 113), UP, 96)
    mant, exp = x.mantissa_exponent()
    assert Fraction(mant) * Fraction(2) ** exp == x.as_fraction()


@given(_fractions(), _fractions())
@settings(max_examples=60, deadline=None, derandomize=True)
def test_enclosure_contains_exact_sums_and_products(a, b):
    ea = Enclosure.from_exact(a, 64)
    eb = Enclosure.from_exact(b, 64)
    for enc, exact in (
        (ea + eb, a + b),
        (ea - eb, a - b),
        (ea * eb, a * b),
    ):
        assert enc.lower.as_fraction() <= exact <= enc.upper.as_fraction()


@given(_fractions(), _fractions(max_num=10**4))
@settings(max_examples=60, deadline=None, derandomize=True)
def test_enclosure_division_containment(a, b):
    if b == 0:
        b = Fraction(1, 7)
    enc = Enclosure.from_exact(a, 64) / Enclosure.from_exact(b, 64)
    exact = a / b
    assert enc.lower.as_fraction() <= exact <= enc.upper.as_fraction()


@given(_fractions(max_num=50, max_den=50), st.integers(min_value=-4, max_value=6))
@settings(max_examples=60, deadline=None, derandomize=True)
def test_pow_int_containment(a, k):
    if k < 0 and a == 0:
        a = Fraction(3, 2)
    enc = Enclosure.from_exact(a, 96).pow_int(k)
    exact = a**k
    assert enc.lower.as_fraction() <= exact <= enc.upper.as_fraction()


def test_chain_containment_log_exp_roundtrip():
    x = Fraction(7, 5)
    enc = Enclosure.from_exact(x, 128).log().exp()
    assert enc.lower.as_fraction() < x < enc.upper.as_fraction()
    assert enc.rel_width() < 2.0**-100


def test_division_by_zero_straddling_interval():
    num = Enclosure.from_exact(1, 64)
    den = Enclosure.from_exact(Fraction(-1, 2), 64) + Enclosure.from_exact(1, 64)
    assert not den.contains_zero()
    straddle = Enclosure.from_exact(Fraction(-1, 2), 64) + Enclosure.from_exact(
        Fraction(1, 2), 64
    )
    with pytest.raises(ZeroDivisionError):
        num / straddle


def test_mixed_precision_rejected():
    with pytest.raises(ValueError):
        Enclosure.from_exact(1, 64) + Enclosure.from_exact(1, 128)


def test_certainly_lt_is_strict_on_endpoints():
    a = Enclosure.from_exact(1, 64)
    b = Enclosure.from_exact(2, 64)
    assert a.certainly_lt(b)
    assert not a.certainly_lt(a)
    assert a.certainly_le(a)


def test_abs_covers_both_signs():
    enc = Enclosure.from_exact(Fraction(-3, 7), 64).abs()
    assert enc.lower.as_fraction() <= Fraction(3, 7) <= enc.upper.as_fraction()
    mixed = Enclosure.from_exact(Fraction(-1, 3), 64) + Enclosure.from_exact(
        Fraction(1, 2), 64
    )
    assert mixed.abs().lower.as_fraction() >= 0


def test_higher_precision_tightens_enclosures():
    def chain(bits):
        e = Enclosure.from_exact(Fraction(1, 10), bits)
        return (1 + e).log().exp().sqrt()

    coarse, fine = chain(64), chain(192)
    assert fine.width() < coarse.width()
    # the two precisions must agree on the value they enclose
    assert fine.lower.as_fraction() <= coarse.upper.as_fraction()
    assert coarse.lower.as_fraction() <= fine.upper.as_fraction()


def test_log1p_enclosure_matches_reference_value():
    # log(11/10) to 40 digits: 0.0953101798043248600439521232807650922206
    ref = Fraction("0.0953101798043248600439521232807650922206")
    enc = log1p_enclosure(Fraction(1, 10), 192)
    mid = (enc.lower.as_fraction() + enc.upper.as_fraction()) / 2
    assert abs(mid - ref) < Fraction(1, 10**38)
    assert enc.rel_width() < 2.0**-180


def test_log1p_enclosure_domain():
    with pytest.raises(ValueError):
        log1p_enclosure(Fraction(-1))
    with pytest.raises(ValueError):
        log1p_enclosure(Fraction(-3, 2))


def test_negative_argument_log1p():
    enc = log1p_enclosure(Fraction(-1, 10), 128)
    assert enc.hi < 0
    # log(9/10) = -log(10/9); compare against the positive branch
    other = log1p_enclosure(Fraction(1, 9), 128)
    total = enc + other
    assert total.contains_zero()
