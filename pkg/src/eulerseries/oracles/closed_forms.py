"""Closed forms built from log Gamma, digamma and the constant literals.

The γ / γ' values that enter the Somos, Glaisher and Catalan relations come
from :func:`definition_sum` unless the caller passes them in, so every
route here is independent of the digit-series engines.
"""
from __future__ import annotations

import math
from fractions import Fraction

from ..digits import WordSpec
from ..numerics import FixedReal, _ceil_div, _round_div, fix_log, fixed_pi, log_rational
from ..sequences import SeriesParams
from .constants import euler_gamma, literal
from .definition import definition_sum
from .special import bernoulli, digamma, log_gamma

NAMES = (
    "WordConstant",
    "GammaAB1",
    "SomosFromGamma",
    "GlaisherFromGammaPrime",
    "CatalanCombination",
    "Zeta2Relation",
    "Gamma21AtMinusOne",
)


def _log_pi(scale: int) -> FixedReal:
    return fix_log(fixed_pi(scale + 5)).rescale(scale)


def gamma_ab1(a: int, b: int, precision: int) -> FixedReal:
    """γ_{a,b}(1) = log Γ((b+1)/a) − log Γ(b/a) − ψ(b/a)/a."""
    w = precision + 5
    x = Fraction(b, a)
    v = log_gamma(x + Fraction(1, a), w) - log_gamma(x, w) - digamma(x, w) * Fraction(1, a)
    return v.rescale(precision)


def word_constant(word: WordSpec, precision: int) -> FixedReal:
    """Limit of sum N_ω(k) Q(k, B); the all-zero words take the second branch."""
    w = precision + 5
    a = word.base ** word.length
    v = word.value
    if v == 0:
        out = log_gamma(Fraction(1, a), w) + euler_gamma(w) * Fraction(1, a) - log_rational(a, w)
        return out.rescale(precision)
    return gamma_ab1(a, v, precision)


def log_somos_from_gamma(t: int, precision: int, gamma_t: FixedReal | None = None) -> FixedReal:
    """log σ_t = (log t − log(t−1) − γ_{1,1}(1/t)/t) / (t−1)."""
    if not isinstance(t, int) or t < 2:
        raise ValueError("t must be an integer >= 2")
    w = precision + 5
    if gamma_t is None:
        gamma_t = definition_sum(SeriesParams(1, 1, 0, Fraction(1, t)), precision=w)
    v = (log_rational(Fraction(t, t - 1), w) - gamma_t * Fraction(1, t)) * Fraction(1, t - 1)
    return v.rescale(precision)


def somos_direct(t: int, precision: int, N: int | None = None) -> FixedReal:
    """log σ_t = sum_{n>=1} log n / t^n, with a bound on the dropped tail."""
    if t < 2:
        raise ValueError("t must be >= 2")
    w = precision + 10
    if N is None:
        N = 10
        while Fraction(N + 1, t ** (N + 1)) * Fraction(t * t, (t - 1) ** 2) > Fraction(1, 10 ** (precision + 2)):
            N *= 2
    total = FixedReal(0, w)
    for n in range(2, N + 1):
        total = total + log_rational(n, w) * Fraction(1, t**n)
    # log n <= n and sum_{n>N} n r^n <= (N+1) r^(N+1) / (1-r)^2
    r = Fraction(1, t)
    return total.with_error((N + 1) * r ** (N + 1) / (1 - r) ** 2).rescale(precision)


def log_glaisher_from_gamma_prime(precision: int, gamma_prime: FixedReal | None = None) -> FixedReal:
    """log A = (γ'_{1,1}(−1) − (11/6) log 2 + (3/2) log π + 1) / 6."""
    w = precision + 5
    if gamma_prime is None:
        gamma_prime = definition_sum(SeriesParams(1, 1, 1, -1), precision=w)
    v = gamma_prime - log_rational(2, w) * Fraction(11, 6) + _log_pi(w) * Fraction(3, 2) + 1
    return (v * Fraction(1, 6)).rescale(precision)


def gamma_21_minus1(precision: int) -> FixedReal:
    """γ_{2,1}(−1) = π/4 − 2 log Γ(1/4) + log sqrt(2 π^3)."""
    w = precision + 5
    v = fixed_pi(w) * Fraction(1, 4) - log_gamma(Fraction(1, 4), w) * 2
    v = v + log_rational(2, w) * Fraction(1, 2) + _log_pi(w) * Fraction(3, 2)
    return v.rescale(precision)


def catalan_combination(precision: int, gamma21: FixedReal | None = None,
                        gamma_prime21: FixedReal | None = None,
                        log_A: FixedReal | None = None) -> FixedReal:
    """G/π = γ'_{2,1}(−1) − γ_{2,1}(−1)/2 + log(4/π)/4 + 3 log A − (7/12) log 2."""
    w = precision + 5
    if gamma21 is None:
        gamma21 = definition_sum(SeriesParams(2, 1, 0, -1), precision=w)
    if gamma_prime21 is None:
        gamma_prime21 = definition_sum(SeriesParams(2, 1, 1, -1), precision=w)
    if log_A is None:
        log_A = fix_log(literal("glaisher", w + 2)).rescale(w)
    log2 = log_rational(2, w)
    v = gamma_prime21 - gamma21 * Fraction(1, 2) + (log2 * 2 - _log_pi(w)) * Fraction(1, 4)
    v = v + log_A * 3 - log2 * Fraction(7, 12)
    return v.rescale(precision)


def zeta2_relation(precision: int, log_A: FixedReal | None = None) -> FixedReal:
    """ζ'(2)/π² = 2 ((log 2π + γ)/12 − log A)."""
    w = precision + 5
    if log_A is None:
        log_A = fix_log(literal("glaisher", w + 2)).rescale(w)
    inner = (log_rational(2, w) + _log_pi(w) + euler_gamma(w)) * Fraction(1, 12) - log_A
    return (inner * 2).rescale(precision)


def _deriv_coeffs(k: int) -> tuple[int, int]:
    """f = log x / x^2: f^(k)(x) = (p + q log x) / x^(k+2)."""
    p, q = 0, 1
    for j in range(k):
        p, q = q - (j + 2) * p, -(j + 2) * q
    return p, q


def zeta_prime_2(precision: int) -> FixedReal:
    """ζ'(2) = −sum log n / n², head summed exactly, tail by Euler–Maclaurin."""
    w = precision + 10
    N = 2 * precision + 20
    target = Fraction(1, 10 ** (precision + 3))
    logN = log_rational(N, w)
    logN_hi = float(logN) + 1e-9

    def f_deriv(k: int) -> FixedReal:
        p, q = _deriv_coeffs(k)
        return (logN * q + p) * Fraction(1, N ** (k + 2))

    # sum_{n>=N} f = int_N^inf f + f(N)/2 - sum_m B_2m/(2m)! f^(2m-1)(N) + R
    tail = (logN + 1) * Fraction(1, N) + f_deriv(0) * Fraction(1, 2)
    m = 1
    while True:
        c = bernoulli(2 * m) / math.factorial(2 * m)
        tail = tail - f_deriv(2 * m - 1) * c
        p, q = _deriv_coeffs(2 * m)
        # f^(2m) keeps one sign beyond exp(-p/q); then int |f^(2m)| = |f^(2m-1)(N)|
        if -p / q < math.log(N):
            p1, q1 = _deriv_coeffs(2 * m - 1)
            size = Fraction(abs(p1) + abs(q1) * math.ceil(logN_hi), N ** (2 * m + 1))
            bound = 4 * size / Fraction(round(2 * math.pi * 10**6) - 1, 10**6) ** (2 * m)
            if bound < target:
                break
        m += 1
        if m > 4 * N:
            raise ArithmeticError("Euler-Maclaurin tail did not reach the target")
    head = FixedReal(0, w)
    for n in range(2, N):
        head = head + log_rational(n, w) * Fraction(1, n * n)
    return (-(head + tail)).with_error(bound).rescale(precision)


def closed_form(name: str, precision: int = 20, **args) -> FixedReal:
    """Evaluate one of :data:`NAMES` at ``precision`` decimals."""
    if name == "WordConstant":
        word = args["word"]
        if isinstance(word, str):
            word = WordSpec.parse(word, args.get("base", 2))
        return word_constant(word, precision)
    if name == "GammaAB1":
        return gamma_ab1(args["a"], args["b"], precision)
    if name == "SomosFromGamma":
        return log_somos_from_gamma(args["t"], precision, args.get("gamma_t"))
    if name == "GlaisherFromGammaPrime":
        return log_glaisher_from_gamma_prime(precision, args.get("gamma_prime"))
    if name == "CatalanCombination":
        return catalan_combination(precision, args.get("gamma21"), args.get("gamma_prime21"), args.get("log_A"))
    if name == "Zeta2Relation":
        return zeta2_relation(precision, args.get("log_A"))
    if name == "Gamma21AtMinusOne":
        return gamma_21_minus1(precision)
    raise ValueError(f"unknown closed form {name!r}; expected one of {', '.join(NAMES)}")
