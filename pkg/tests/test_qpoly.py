from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dlchar.qpoly import ONE, Q, ZERO, QPoly, QRatFun


def test_gcd_common_factor():
    assert (Q ** 2 - 1).gcd(Q - 1) == Q - 1


def test_divexact_long_division():
    lhs = Q * (Q ** 2 - 1)
    assert lhs.divexact(Q + 1) == Q * (Q - 1)
    with pytest.raises(ValueError):
        lhs.divexact(Q + 2)


def test_mul_zero():
    assert ZERO * Q ** 3 == ZERO
    assert (Q ** 3 * ZERO).is_zero()


def test_eval_at():
    # |SL2(F_3)| = 24 from the order polynomial q(q^2-1)
    assert (Q * (Q ** 2 - 1)).eval_at(3) == 24
    assert ONE.eval_at(97) == 1
    assert (Q - 1).eval_at(5) == 4
    assert (Q ** 2 + Fraction(1, 2)).eval_at(Fraction(1, 3)) == Fraction(11, 18)


def test_valuation():
    assert (Q ** 2 * (Q - 1)).valuation(Q) == 2
    assert (Q + 1).valuation(Q - 1) == 0
    # scalar factors do not affect valuation
    assert ((Q - 1) * Fraction(1, 2)).valuation(Q - 1) == 1
    with pytest.raises(ValueError):
        ZERO.valuation(Q)


def test_denominator_clearing():
    assert ((Q + 1) * Fraction(1, 2)).denominator_clearing() == 2
    assert (Q - 1).denominator_clearing() == 1
    assert ((Q ** 3 + Q) * Fraction(1, 6) + Q ** 2 * Fraction(1, 4)).denominator_clearing() == 12


def test_str_rendering():
    assert str(Q ** 4 - Q ** 2 + 1) == "q^4 - q^2 + 1"
    assert str(ZERO) == "0"
    assert str((Q + 1) * Fraction(1, 2)) == "1/2*q + 1/2"


def test_json_round_trip():
    p = Q ** 5 - Fraction(3, 7) * Q ** 2 + 2
    assert QPoly.from_json(p.to_json()) == p
    assert QPoly.from_json([]) == ZERO


def test_ratfun_normalization():
    r = QRatFun(Q ** 2 - 1, Q - 1)
    assert r.is_polynomial()
    assert r.as_poly() == Q + 1
    r2 = QRatFun(2 * ONE, 2 * Q - 2)
    assert r2.den.is_monic()
    assert r2 == QRatFun(ONE, Q - 1)


def test_ratfun_arithmetic():
    half_sum = (QRatFun(ONE, Q - 1) + QRatFun(ONE, Q + 1)) * Fraction(1, 2)
    # 1/2 (1/(q-1) + 1/(q+1)) = q/(q^2-1)
    assert half_sum == QRatFun(Q, Q ** 2 - 1)
    assert half_sum.inverse() == QRatFun(Q ** 2 - 1, Q)
    assert QRatFun(Q, Q + 1) / QRatFun(Q, Q + 1) == QRatFun(ONE)


poly_strategy = st.builds(
    lambda cs: QPoly([Fraction(n, d) for n, d in cs]),
    st.lists(st.tuples(st.integers(-6, 6), st.integers(1, 4)), min_size=0, max_size=6),
)


@settings(max_examples=120, derandomize=True, deadline=None)
@given(poly_strategy, poly_strategy)
def test_degree_multiplicative(a, b):
    if a.is_zero() or b.is_zero():
        assert (a * b).is_zero()
    else:
        assert (a * b).degree == a.degree + b.degree


@settings(max_examples=120, derandomize=True, deadline=None)
@given(poly_strategy, poly_strategy, st.integers(-5, 5))
def test_eval_is_ring_hom(a, b, x):
    assert (a + b).eval_at(x) == a.eval_at(x) + b.eval_at(x)
    assert (a * b).eval_at(x) == a.eval_at(x) * b.eval_at(x)


@settings(max_examples=100, derandomize=True, deadline=None)
@given(poly_strategy, poly_strategy)
def test_divmod_invariant(a, b):
    if b.is_zero():
        return
    quo, rem = a.divmod(b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree
