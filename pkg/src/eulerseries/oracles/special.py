"""log Gamma and digamma at positive rationals, with certified bounds.

Both lift the argument to X >= max(10, working digits) using the
recurrences, then sum the Stirling asymptotic series until a term drops
below one ulp.  For real X > 0 the truncation error is bounded by the first
omitted term.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..numerics import FixedReal, _round_div, fix_log, fixed_pi, log_rational

_BERNOULLI = [Fraction(1), Fraction(-1, 2)]


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        if m % 2 and m > 1:
            _BERNOULLI.append(Fraction(0))
            continue
        acc = sum((math.comb(m + 1, k) * _BERNOULLI[k] for k in range(m)), Fraction(0))
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


def _lift(x: Fraction, work: int) -> tuple[Fraction, int]:
    target = max(10, work)
    shift = max(0, math.ceil(target - x))
    return x + shift, shift


def _stirling_terms(X: Fraction, work: int, power: int, denom) -> tuple[int, int]:
    """sum_j B_2j / (denom(j) X^(2j - power)) scaled to 10**work; returns (sum, ulps)."""
    unit = 10**work
    total, j, err = 0, 1, 0
    while True:
        b = bernoulli(2 * j)
        t = b / (denom(j) * X ** (2 * j - power))
        scaled = t.numerator * unit
        if 2 * abs(scaled) < t.denominator:  # |term| < ulp/2: first omitted term
            return total, err + 2
        total += _round_div(scaled, t.denominator)
        err += 1
        j += 1


@lru_cache(maxsize=256)
def _log_gamma_cached(x: Fraction, precision: int) -> FixedReal:
    work = precision + 10
    X, shift = _lift(x, work)
    series, e_series = _stirling_terms(X, work, 1, lambda j: 2 * j * (2 * j - 1))
    unit = 10**work
    logX = log_rational(X, work)
    half_log_2pi = (fix_log(fixed_pi(work + 2) * 2) * Fraction(1, 2)).rescale(work)
    # (X - 1/2) log X - X + log(2 pi)/2 + series
    main = logX * (X - Fraction(1, 2))
    value = main - FixedReal(_round_div(X.numerator * unit, X.denominator), work, 1)
    value = value + half_log_2pi + FixedReal(series, work, e_series)
    if shift:
        prod = Fraction(1)
        for j in range(shift):
            prod *= x + j
        value = value - log_rational(prod, work)
    return value.rescale(precision)


def log_gamma(x, precision: int) -> FixedReal:
    """log Gamma(x) for rational x > 0 to ``precision`` decimals."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("log_gamma needs x > 0")
    return _log_gamma_cached(x, precision)


@lru_cache(maxsize=256)
def _digamma_cached(x: Fraction, precision: int) -> FixedReal:
    work = precision + 10
    X, shift = _lift(x, work)
    series, e_series = _stirling_terms(X, work, 0, lambda j: 2 * j)
    # psi(X) = log X - 1/(2X) - sum B_2j / (2j X^2j)
    value = log_rational(X, work) - Fraction(1, 2) / X - FixedReal(series, work, e_series)
    if shift:
        value = value - sum((1 / (x + j) for j in range(shift)), Fraction(0))
    return value.rescale(precision)


def digamma(x, precision: int) -> FixedReal:
    """psi(x) = d/dx log Gamma(x) for rational x > 0."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("digamma needs x > 0")
    return _digamma_cached(x, precision)
