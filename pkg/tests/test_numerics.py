from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eulerseries.numerics import (
    FixedReal,
    fix_elementary,
    fix_exp,
    fix_from_rational,
    fix_log,
    fixed_log2,
    fixed_pi,
    log_rational,
    rat_arith,
)

PI_50 = "3.14159265358979323846264338327950288419716939937510"
LOG2_50 = "0.69314718055994530941723212145817656807550013436025"


def test_rat_arith_examples():
    assert rat_arith(Fraction(1, 6), Fraction(1, 12), "add") == Fraction(1, 4)
    assert rat_arith(Fraction(3, 4), Fraction(0), "mul") == 0
    assert rat_arith(Fraction(1, 3), Fraction(1, 3), "div") == 1
    r = rat_arith(Fraction(2, 4), Fraction(-6, 8), "sub")
    assert (r.numerator, r.denominator) == (5, 4)


def test_rat_arith_errors():
    with pytest.raises(ZeroDivisionError):
        rat_arith(Fraction(1), Fraction(0), "div")
    with pytest.raises(ValueError):
        rat_arith(Fraction(1), Fraction(1), "pow")


def test_fix_from_rational_examples():
    x = fix_from_rational(Fraction(1, 3), 6)
    assert x.format() == "0.333333" and x.error == 1
    h = fix_from_rational(Fraction(1, 2), 4)
    assert h.format() == "0.5000" and h.error <= 1
    assert fix_from_rational(Fraction(13, 60), 8).format() == "0.21666667"


def test_from_string_and_format():
    x = FixedReal.from_string("-0.5772")
    assert x.scale == 4 and x.mantissa == -5772
    assert x.format() == "-0.5772"
    assert FixedReal.from_string("12.5", scale=3).format() == "12.500"
    assert FixedReal(5, 3).format() == "0.005"


def test_rescale_counts_rounding():
    x = FixedReal(123456, 5)
    y = x.rescale(3)
    assert y.mantissa == 1235 and y.error == 1
    z = x.rescale(8)
    assert z.mantissa == 123456000 and z.error == 0


def test_elementary_examples():
    one = FixedReal(10**12, 12)
    assert abs(fix_elementary(one, "log").mantissa) <= 1
    e0 = fix_elementary(FixedReal(0, 12), "exp")
    assert abs(e0.mantissa - 10**12) <= 1
    l2 = fix_elementary(FixedReal(2 * 10**12, 12), "log")
    assert l2.format() == "0.693147180560"
    assert l2.contains(Fraction(LOG2_50[:40]))
    sq = fix_elementary(FixedReal(4 * 10**20, 20), "pow_rational", Fraction(1, 2))
    assert sq.contains(2)


def test_log_of_nonpositive_raises():
    with pytest.raises(ValueError):
        fix_log(FixedReal(0, 5))
    with pytest.raises(ValueError):
        fix_log(FixedReal(-3, 5))
    with pytest.raises(ValueError):
        fix_elementary(FixedReal(1, 2), "sin")


def test_constants_match_50_digit_strings():
    assert fixed_pi(45).format() == PI_50[:47]
    assert fixed_log2(45).contains(Fraction(LOG2_50))
    assert abs(fixed_pi(80).to_fraction() - Fraction(PI_50)) < Fraction(1, 10**49)


def test_division_by_interval_containing_zero():
    with pytest.raises(ZeroDivisionError):
        FixedReal(10, 4) / FixedReal(1, 4, 2)


rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6)


@given(rationals, st.integers(5, 50))
def test_rational_round_trip(x, s):
    f = fix_from_rational(x, s)
    assert abs(f.to_fraction() - x) <= Fraction(1, 10**s)
    assert f.contains(x)


def _trees(depth):
    leaf = st.tuples(st.just("leaf"), st.fractions(min_value=-50, max_value=50, max_denominator=1000))
    if depth == 0:
        return leaf
    sub = _trees(depth - 1)
    return st.one_of(leaf, st.tuples(st.sampled_from(["add", "sub", "mul", "div"]), sub, sub))


def _eval(tree, scale):
    if tree[0] == "leaf":
        return tree[1], fix_from_rational(tree[1], scale)
    op, left, right = tree
    ex, fx = _eval(left, scale)
    ey, fy = _eval(right, scale)
    if op == "add":
        return ex + ey, fx + fy
    if op == "sub":
        return ex - ey, fx - fy
    if op == "mul":
        return ex * ey, fx * fy
    if abs(fy.mantissa) <= fy.error or ey == 0:
        return ex, fx
    return ex / ey, fx / fy


@settings(max_examples=200, deadline=None)
@given(_trees(10), st.integers(8, 30))
def test_error_bound_soundness(tree, scale):
    exact, approx = _eval(tree, scale)
    assert approx.contains(exact)


@settings(deadline=None)
@given(st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=10**5), st.integers(10, 40))
def test_log_exp_inverse(x, scale):
    fx = fix_from_rational(x, scale)
    back = fix_exp(fix_log(fx))
    assert abs(back.to_fraction() - x) <= back.error_bound + fx.error_bound


def test_log_rational_matches_sum_of_logs():
    a = log_rational(6, 30)
    b = log_rational(2, 30) + log_rational(3, 30)
    assert abs(a.to_fraction() - b.to_fraction()) <= a.error_bound + b.error_bound
