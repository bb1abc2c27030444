"""Direct summation of the defining series of gamma_{a,b}(z) and its derivative.

The n-th term is ``w_n * phi(an + b)`` with ``phi(m) = 1/m - log(1 + 1/m)``
and ``w_n = z**n`` (l = 0) or ``n z**(n-1)`` (l = 1).  The remainder after
N terms is handled per case:

* ``|z| < 1``  geometric bound, since 0 < phi(m) <= 1/(2 m^2);
* ``z = -1``   Euler transform of the alternating tail, bound by the last
  difference used;
* ``z = 1``    Euler-Maclaurin with the f' and f''' corrections, bound by
  the f^(5) term.
"""
from __future__ import annotations

import math
from fractions import Fraction

from ..numerics import FixedReal, _ceil_div, _round_div
from ..sequences import SeriesParams


def _phi_scaled(m: int, unit: int) -> tuple[int, int]:
    """phi(m) * unit via log(1+1/m) = 2 atanh(1/(2m+1)); returns (value, ulps)."""
    q = 2 * m + 1
    q2 = q * q
    val = _round_div(unit, m * q)  # 1/m - 2/(2m+1)
    pw, i = q**3, 1
    while True:
        t = _round_div(2 * unit, pw * (2 * i + 1))
        if t == 0:
            break
        val -= t
        pw *= q2
        i += 1
    return val, i + 1


def _weight(params: SeriesParams, n: int) -> Fraction:
    z = params.z
    if params.l == 0:
        return z**n
    return n * z ** (n - 1) if n else Fraction(0)


def _auto_terms(params: SeriesParams, precision: int) -> int:
    z = abs(params.z)
    if z == 1:
        if params.z == 1:
            # Euler-Maclaurin remainder ~ M^-7
            return min(max(400, math.ceil(10 ** ((precision + 3) / 7) / params.a)), 200_000)
        return 200 + 4 * precision
    n = 1
    while _geometric_tail(params, n) > Fraction(1, 10 ** (precision + 2)):
        n *= 2
    return n


def _geometric_tail(params: SeriesParams, N: int) -> Fraction:
    r = abs(params.z)
    l = params.l
    if r == 0:
        return Fraction(0)
    m = params.a * (N + 1) + params.b
    return Fraction((N + 1) ** l) * r ** (N + 1 - l) / ((1 - r) ** (l + 1) * 2 * m * m)


def definition_sum(params: SeriesParams, N: int | None = None, precision: int = 20) -> FixedReal:
    """Sum n = 0..N of the defining series plus its remainder treatment.

    The returned error bound covers rounding and the remainder.
    """
    if params.z == 1 and params.l == 1:
        raise ValueError("the derivative series diverges at z = 1")
    if N is None:
        N = _auto_terms(params, precision)
    if N < 1:
        raise ValueError("N must be >= 1")
    work = precision + 10
    unit = 10**work
    a, b, z = params.a, params.b, params.z
    total, err = 0, 0
    for n in range(N + 1):
        w = _weight(params, n)
        if w == 0:
            continue
        v, e = _phi_scaled(a * n + b, unit)
        total += _round_div(v * w.numerator, w.denominator)
        err += _ceil_div(e * abs(w.numerator), w.denominator) + 1
    tail = Fraction(0)
    if abs(z) < 1:
        tail = _geometric_tail(params, N)
    elif z == -1:
        t, e, bound = _alternating_tail(params, N, work)
        total += t
        err += e
        tail = bound
    else:
        t, e, bound = _euler_maclaurin_tail(params, N, work)
        total += t
        err += e
        tail = bound
    out = FixedReal(total, work, err).with_error(tail)
    return out.rescale(precision)


def _alternating_tail(params: SeriesParams, N: int, work: int, depth: int = 40):
    """Euler transform of sum_{n > N}; returns (value, ulps, bound)."""
    unit = 10**work
    u, err = [], 0
    for n in range(N + 1, N + depth + 2):
        w = abs(_weight(params, n))
        v, e = _phi_scaled(params.a * n + params.b, unit)
        u.append(_round_div(v * w.numerator, w.denominator))
        err = max(err, e * w.numerator // w.denominator + 1)
    sign = 1 if _weight(params, N + 1) > 0 else -1
    total, row = 0, u
    for j in range(depth):
        total += _round_div(row[0], 2 ** (j + 1))
        row = [row[i] - row[i + 1] for i in range(len(row) - 1)]
        # rounding noise in the j-th difference is at most 2^j * err ulps
        if abs(row[0]) < 2 ** (j + 2) * (err + 1) or len(row) < 2:
            break
    bound = Fraction(abs(row[0]) + 2 ** (j + 1) * err, unit * 2 ** (j + 1))
    return sign * total, (j + 1) * (err + 1), bound


def _euler_maclaurin_tail(params: SeriesParams, N: int, work: int):
    a, b = params.a, params.b
    M = a * N + b
    extra = len(str(M)) + 2
    hi = 10 ** (work + extra)
    phi_hi, e_hi = _phi_scaled(M, hi)
    # integral of phi(ax+b) over [N, inf) = (1/M - (M+1) phi(M)) / a
    integral = Fraction(hi, M) - (M + 1) * phi_hi
    corr = (
        integral / a
        - Fraction(phi_hi, 2)
        + Fraction(a * hi, 12 * M * M * (M + 1))
        - Fraction(a**3 * hi * (6 * M * M + 8 * M + 3), 360 * M**4 * (M + 1) ** 3)
    )
    shift = 10**extra
    value = _round_div(corr.numerator, corr.denominator * shift)
    ulps = _ceil_div((M + 2) * e_hi + 4, shift) + 1
    bound = Fraction(a**5 * 24 * (15 * M**4 + 40 * M**3 + 45 * M**2 + 24 * M + 5), 30240 * M**6 * (M + 1) ** 5)
    return value, ulps, 2 * bound
