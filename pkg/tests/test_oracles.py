from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from eulerseries.digits import WordSpec
from eulerseries.numerics import fix_log, fixed_log2, fixed_pi, log_rational
from eulerseries.oracles import (
    QuadratureError,
    QuadratureSpec,
    closed_form,
    definition_sum,
    digamma,
    literal,
    log_gamma,
    quadrature,
    somos_direct,
    validate_literal,
    zeta_prime_2,
)
from eulerseries.oracles.constants import LiteralMismatch, _raw, euler_gamma
from eulerseries.oracles.quadrature import AVERAGED, CATALAN, DEFINITION, RAMANUJAN, gregory
from eulerseries.sequences import SeriesParams

mpmath.mp.dps = 60


def mp(x):
    return mpmath.mpf(x.mantissa) / mpmath.mpf(10) ** x.scale


def close(x, ref, slack=0):
    """|x - ref| within x's own bound (plus optional slack)."""
    return abs(mp(x) - ref) <= mpmath.mpf(x.error_bound.numerator) / x.error_bound.denominator + slack


def test_log_gamma_examples():
    assert log_gamma(1, 30).to_fraction() == 0 or abs(mp(log_gamma(1, 30))) < 1e-29
    half = log_gamma(Fraction(1, 2), 30)
    assert close(half, mpmath.log(mpmath.pi) / 2)
    q = log_gamma(Fraction(1, 4), 30)
    assert mp(q.rescale(12)) == mpmath.mpf("1.288022524698")
    with pytest.raises(ValueError):
        log_gamma(0, 10)


def test_digamma_examples():
    g = mpmath.euler
    assert close(digamma(1, 30), -g)
    assert close(digamma(Fraction(1, 2), 30), -g - 2 * mpmath.log(2))
    assert close(digamma(2, 30), 1 - g)
    with pytest.raises(ValueError):
        digamma(-1, 10)


def test_reflection_quarter():
    s = log_gamma(Fraction(1, 4), 40) + log_gamma(Fraction(3, 4), 40)
    # Gamma(1/4) Gamma(3/4) = pi / sin(pi/4) = pi sqrt(2)
    rhs = fix_log(fixed_pi(45)) + fixed_log2(45) * Fraction(1, 2)
    assert abs(s.to_fraction() - rhs.to_fraction()) <= s.error_bound + rhs.error_bound


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=Fraction(1, 1000), max_value=20, max_denominator=1000))
def test_digamma_recurrence(x):
    lhs = digamma(x + 1, 25) - digamma(x, 25)
    assert abs(lhs.to_fraction() - 1 / x) <= lhs.error_bound


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=Fraction(1, 100), max_value=30, max_denominator=100))
def test_log_gamma_against_mpmath(x):
    v = log_gamma(x, 30)
    assert close(v, mpmath.loggamma(mpmath.mpf(x.numerator) / x.denominator))


def test_literals_validate():
    for name in ("pi", "log2", "euler_gamma", "glaisher", "catalan"):
        assert validate_literal(name)
    assert close(literal("euler_gamma", 50), mpmath.euler)
    assert close(literal("catalan", 50), mpmath.catalan)
    assert close(literal("glaisher", 50), mpmath.glaisher)
    assert close(_raw("pi"), mpmath.pi)
    assert close(euler_gamma(70), mpmath.euler)
    with pytest.raises(KeyError):
        literal("nope", 10)


def test_literal_mismatch_is_detected(monkeypatch):
    from eulerseries.oracles import constants

    monkeypatch.setitem(constants.LITERALS, "log2", "0.69314718155994530941723212145817656807550013436025")
    constants.validate_literal.cache_clear()
    try:
        with pytest.raises(LiteralMismatch):
            constants.validate_literal("log2")
    finally:
        constants.validate_literal.cache_clear()


def test_definition_sum_first_term():
    # n = 0 only: 1 - log 2 for any z
    v = definition_sum(SeriesParams(1, 1, 0, Fraction(1, 3)), N=1, precision=20)
    first = 1 - mpmath.log(2)
    second = (mpmath.mpf(1) / 2 - mpmath.log(mpmath.mpf(3) / 2)) / 3
    assert abs(mp(v) - first - second) < 1e-3


@pytest.mark.parametrize("a,b,l,z", [(1, 1, 0, 1), (1, 1, 0, -1), (2, 1, 0, -1), (1, 2, 0, 1), (1, 1, 0, Fraction(1, 2)),
                                     (1, 1, 1, -1), (2, 1, 1, -1), (3, 2, 1, Fraction(-2, 3))])
def test_definition_sum_bounds(a, b, l, z):
    zf = mpmath.mpf(Fraction(z).numerator) / Fraction(z).denominator

    def term(n):
        x = a * n + b
        br = mpmath.mpf(1) / x - mpmath.log(mpmath.mpf(x + 1) / x)
        return br * zf**n if l == 0 else n * br * zf ** (n - 1)

    ref = mpmath.nsum(term, [0, mpmath.inf]) if z != 1 else None
    if z == 1:
        ref = (mpmath.loggamma(mpmath.mpf(b + 1) / a) - mpmath.loggamma(mpmath.mpf(b) / a)
               - mpmath.digamma(mpmath.mpf(b) / a) / a)
    for p in (12, 25):
        v = definition_sum(SeriesParams(a, b, l, z), precision=p)
        assert close(v, ref)
        assert v.error_bound < Fraction(1, 10 ** (p - 2))


def test_definition_sum_rejects_divergent_case():
    with pytest.raises(ValueError):
        definition_sum(SeriesParams(1, 1, 0, 1), N=0)


def test_gregory_coefficients():
    assert [gregory(n) for n in range(5)] == [1, Fraction(1, 2), Fraction(-1, 12), Fraction(1, 24), Fraction(-19, 720)]


def test_quadrature_examples():
    g = quadrature(QuadratureSpec(DEFINITION, SeriesParams(1, 1, 0, 1), 10))
    assert abs(mp(g) - mpmath.euler) < 1e-10
    g21 = quadrature(QuadratureSpec(DEFINITION, SeriesParams(2, 1, 0, -1), 10))
    ref = mpmath.pi / 4 - 2 * mpmath.loggamma(0.25) + mpmath.log(mpmath.sqrt(2 * mpmath.pi**3))
    assert close(g21, ref)
    c = quadrature(QuadratureSpec(CATALAN, SeriesParams(1, 1, 0, 1, 2), 10))
    assert abs(c.to_fraction() - g.to_fraction()) <= c.error_bound + g.error_bound


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(DEFINITION, SeriesParams(1, 1), 5)
    with pytest.raises(ValueError):
        QuadratureSpec("Simpson", SeriesParams(1, 1), 10)


def test_quadrature_level_cap():
    with pytest.raises(QuadratureError) as info:
        quadrature(QuadratureSpec(CATALAN, SeriesParams(1, 1, 0, -1, 2), 12, level_cap=1))
    assert info.value.estimate is not None


def test_representations_agree():
    for p in (SeriesParams(1, 1, 0, -1, 2), SeriesParams(2, 1, 1, -1, 3)):
        vals = [quadrature(QuadratureSpec(k, p, 8)) for k in (CATALAN, RAMANUJAN, AVERAGED)]
        for x in vals:
            for y in vals:
                assert abs(x.to_fraction() - y.to_fraction()) <= x.error_bound + y.error_bound


def test_closed_forms_against_mpmath():
    p = 25
    quarter = mpmath.mpf(3) / 4
    cases = [
        (closed_form("WordConstant", p, word="0"), mpmath.loggamma(0.5) + mpmath.euler / 2 - mpmath.log(2)),
        (closed_form("WordConstant", p, word=WordSpec.parse("11", 2)),
         -mpmath.loggamma(quarter) - mpmath.digamma(quarter) / 4),
        (closed_form("GammaAB1", p, a=1, b=1), mpmath.euler),
        (closed_form("SomosFromGamma", p, t=2), mpmath.nsum(lambda n: mpmath.log(n) / 2**n, [1, mpmath.inf])),
        (closed_form("GlaisherFromGammaPrime", p), mpmath.log(mpmath.glaisher)),
        (closed_form("CatalanCombination", p), mpmath.catalan / mpmath.pi),
        (closed_form("Zeta2Relation", p), mpmath.zeta(2, derivative=1) / mpmath.pi**2),
        (closed_form("Gamma21AtMinusOne", p), mpmath.pi / 4 - 2 * mpmath.loggamma(0.25)
         + mpmath.log(mpmath.sqrt(2 * mpmath.pi**3))),
    ]
    for v, ref in cases:
        assert close(v, ref)
    with pytest.raises(ValueError):
        closed_form("Nonexistent", 10)


def test_somos_direct_and_zeta_prime():
    s3 = somos_direct(3, 40)
    assert close(s3, mpmath.nsum(lambda n: mpmath.log(n) / mpmath.mpf(3) ** n, [1, mpmath.inf]))
    z = zeta_prime_2(40)
    assert close(z, mpmath.zeta(2, derivative=1))


def test_glaisher_literal_consistent_with_zeta_prime():
    rel = closed_form("Zeta2Relation", 30)
    direct = zeta_prime_2(35) / fixed_pi(35) / fixed_pi(35)
    assert abs(rel.to_fraction() - direct.to_fraction()) <= rel.error_bound + direct.error_bound
    assert abs(mp(log_rational(2, 30)) - mpmath.log(2)) < 1e-29
