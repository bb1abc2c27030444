from fractions import Fraction

import mpmath
import pytest

from eulerseries.engines import (
    Checkpoint,
    ConvergenceReport,
    SeriesFamily,
    estimate_tail,
    leading_integral,
    partial_complement_split,
    sum_addison,
    sum_complement,
    sum_epsilon_form,
    sum_vacca,
    weighted_sum,
)
from eulerseries.kernels import kernel_Q
from eulerseries.numerics import FixedReal
from eulerseries.sequences import ParamSequence, SeriesParams

mpmath.mp.dps = 40
GAMMA = SeriesParams(1, 1, 0, 1, 2)
LOG4PI = SeriesParams(1, 1, 0, -1, 2)


def err(x, ref):
    return abs(mpmath.mpf(x.mantissa) / mpmath.mpf(10) ** x.scale - ref)


def test_vacca_first_terms_exact():
    v, rep = sum_vacca(GAMMA, 1, 20)
    assert abs(v.to_fraction() - Fraction(1, 6)) <= v.error_bound
    seq = ParamSequence(GAMMA)
    exact = sum(seq.value(k) * kernel_Q(k, 2) for k in range(1, 51))
    v, _ = sum_vacca(GAMMA, 50, 25)
    assert abs(v.to_fraction() - exact) <= v.error_bound
    assert rep.final.terms == 1


def test_epsilon_groups_equal_vacca():
    p = SeriesParams(1, 1, 0, 1, 3)
    for blocks in (1, 7, 300):
        e, _ = sum_epsilon_form(p, 3 * blocks, 25)
        v, _ = sum_vacca(p, blocks, 25)
        assert abs(e.to_fraction() - v.to_fraction()) <= e.error_bound + v.error_bound


def test_epsilon_requires_whole_blocks():
    with pytest.raises(ValueError):
        sum_epsilon_form(SeriesParams(1, 1, 0, 1, 3), 10, 20)


def test_l0_only_families_reject_derivative():
    p = SeriesParams(2, 1, 1, -1, 2)
    for fn in (sum_vacca, sum_epsilon_form, sum_complement):
        with pytest.raises(ValueError):
            fn(p, 10, 20)


def test_argument_validation():
    with pytest.raises(ValueError):
        sum_vacca(GAMMA, 0, 20)
    with pytest.raises(ValueError):
        sum_vacca(GAMMA, 10, 0)


def test_split_identity():
    for p in (GAMMA, LOG4PI, SeriesParams(2, 1, 0, Fraction(1, 2), 3)):
        q, qt, s = partial_complement_split(p, 200)
        assert q + qt == s


def test_complement_leading_values():
    assert err(leading_integral(GAMMA, 25), 1) < 1e-24
    assert err(leading_integral(LOG4PI, 25), 2 * mpmath.log(2) - 1) < 1e-24
    for N in (1, 5, 40):
        c, _ = sum_complement(GAMMA, N, 25)
        q, qt, _ = partial_complement_split(GAMMA, N)
        assert abs(c.to_fraction() - (1 - qt)) <= c.error_bound + Fraction(1, 10**23)


def test_addison_leading_values():
    assert err(leading_integral(SeriesParams(1, 1, 1, -1, 2), 25), 3 * mpmath.log(2) - 2) < 1e-24
    i21 = leading_integral(SeriesParams(2, 1, 0, -1, 2), 25) * Fraction(1, 2)
    assert err(i21, mpmath.pi / 8 - mpmath.log(2) / 4) < 1e-24
    half = leading_integral(SeriesParams(1, 1, 0, Fraction(1, 2), 2), 25)
    ref = mpmath.quad(lambda x: (1 - x) / (1 - x / 2), [0, 1])
    assert err(half, ref) < 1e-20


def test_addison_rejects_divergent_derivative():
    with pytest.raises(ValueError):
        sum_addison(SeriesParams(1, 1, 1, 1, 2), 10, 20)


def test_addison_beats_vacca():
    N = 10**4
    a, _ = sum_addison(GAMMA, N, 25)
    v, _ = sum_vacca(GAMMA, N, 25)
    assert err(a, mpmath.euler) < err(v, mpmath.euler) / 100


@pytest.mark.parametrize("params,ref", [(GAMMA, mpmath.euler), (LOG4PI, mpmath.log(4 / mpmath.pi))])
def test_checkpoints_decrease_and_stay_below_tail(params, ref):
    for fn in (sum_vacca, sum_complement, sum_addison):
        _, rep = fn(params, 10**4, 25, checkpoints=[10, 100, 1000, 10**4])
        errors = [err(c.partial, ref) for c in rep.checkpoints]
        assert [c.terms for c in rep.checkpoints] == [10, 100, 1000, 10**4]
        assert errors[-1] < errors[0]
        for c, e in zip(rep.checkpoints[1:], errors[1:]):
            assert e <= mpmath.mpf(c.estimated_tail.to_fraction().numerator) / c.estimated_tail.to_fraction().denominator


def test_reference_error_recorded():
    ref = FixedReal.from_string("0.57721566490153286060651209008240243104")
    _, rep = sum_addison(GAMMA, 1000, 20, reference=ref)
    assert rep.final.reference_error is not None
    assert abs(float(rep.final.reference_error.to_fraction())) == pytest.approx(float(err(rep.final.partial, mpmath.euler)), rel=1e-6)


def test_parallel_is_bit_identical():
    a, ra = sum_addison(GAMMA, 200_000, 30, workers=1, chunk=1 << 12)
    b, rb = sum_addison(GAMMA, 200_000, 30, workers=2, chunk=1 << 12)
    c, _ = sum_addison(GAMMA, 200_000, 30)
    assert (a.mantissa, a.error) == (b.mantissa, b.error) == (c.mantissa, c.error)
    assert [x.partial.mantissa for x in ra.checkpoints] == [x.partial.mantissa for x in rb.checkpoints]


def test_estimate_tail_magnitudes():
    v = float(estimate_tail(SeriesFamily.VACCA, GAMMA, 10**4).to_fraction())
    a = float(estimate_tail("addison", GAMMA, 10**4).to_fraction())
    assert 1e-5 < v < 1e-2
    assert 1e-9 < a < 1e-6
    assert float(estimate_tail("vacca", GAMMA, 10**5).to_fraction()) < v


def test_report_validation():
    x = FixedReal(0, 5, 0)
    with pytest.raises(ValueError):
        ConvergenceReport(SeriesFamily.VACCA, [Checkpoint(10, x, x), Checkpoint(10, x, x)])
    rep = ConvergenceReport("vacca", [Checkpoint(1, x, x), Checkpoint(5, x, x)])
    assert rep.final.terms == 5


def test_weighted_sum_factor_and_leading():
    src = ParamSequence(GAMMA)
    base, _ = weighted_sum(src, "vacca", 100, 20)
    scaled, _ = weighted_sum(src, "vacca", 100, 20, leading=FixedReal.from_string("1"), factor=Fraction(-1, 3))
    assert abs(scaled.to_fraction() - (1 - base.to_fraction() / 3)) <= scaled.error_bound + base.error_bound
