"""Exact rationals and decimal fixed-point reals with error accounting.

Rationals are plain :class:`fractions.Fraction` objects.  :class:`FixedReal`
stores ``mantissa * 10**-scale`` together with an error bound counted in
units of the last place (ulps).  Every operation widens the bound by the
rounding it performs plus the error propagated from its operands.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

ExactRational = Fraction
Number = Union[int, Fraction, "FixedReal"]

GUARD_DIGITS = 15


def rat_arith(x: Fraction, y: Fraction, op: str) -> Fraction:
    """Exact ``x op y`` for ``op`` in add, sub, mul, div."""
    x, y = Fraction(x), Fraction(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise ZeroDivisionError("rational division by zero")
        return x / y
    raise ValueError(f"unknown rational operation {op!r}")


def _round_div(n: int, d: int) -> int:
    """Nearest integer to n/d (ties away from -inf), d != 0."""
    if d < 0:
        n, d = -n, -d
    return (2 * n + d) // (2 * d)


def _ceil_div(n: int, d: int) -> int:
    return -((-n) // d)


@dataclass(frozen=True)
class FixedReal:
    """Decimal fixed-point value ``mantissa / 10**scale`` +- ``error`` ulps."""

    mantissa: int
    scale: int
    error: int = 0

    def __post_init__(self):
        if self.scale < 0:
            raise ValueError("scale must be non-negative")
        if self.error < 0:
            raise ValueError("error bound must be non-negative")

    # -- conversions -------------------------------------------------
    @classmethod
    def from_rational(cls, x, scale: int) -> "FixedReal":
        return fix_from_rational(x, scale)

    @classmethod
    def from_string(cls, text: str, scale: int | None = None, error: int = 0) -> "FixedReal":
        """Parse a plain decimal literal such as ``"-0.5772"``."""
        text = text.strip()
        sign = -1 if text.startswith("-") else 1
        body = text.lstrip("+-")
        whole, _, frac = body.partition(".")
        digits = len(frac)
        value = cls(sign * int((whole or "0") + frac), digits, error)
        if scale is not None and scale != digits:
            value = value.rescale(scale)
        return value

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 10**self.scale)

    def __float__(self) -> float:
        return self.mantissa / 10**self.scale

    @property
    def ulp(self) -> Fraction:
        return Fraction(1, 10**self.scale)

    @property
    def error_bound(self) -> Fraction:
        """Absolute error bound as an exact rational."""
        return Fraction(self.error, 10**self.scale)

    def rescale(self, scale: int) -> "FixedReal":
        """Round (or exactly extend) to a different number of decimals."""
        if scale == self.scale:
            return self
        if scale > self.scale:
            f = 10 ** (scale - self.scale)
            return FixedReal(self.mantissa * f, scale, self.error * f)
        f = 10 ** (self.scale - scale)
        m = _round_div(self.mantissa, f)
        exact = self.mantissa % f == 0
        return FixedReal(m, scale, _ceil_div(self.error, f) + (0 if exact else 1))

    def with_error(self, extra: Fraction) -> "FixedReal":
        """Widen the bound by an absolute amount ``extra`` (>= 0)."""
        extra = Fraction(extra)
        if extra < 0:
            raise ValueError("extra error must be non-negative")
        ulps = _ceil_div(extra.numerator * 10**self.scale, extra.denominator)
        return FixedReal(self.mantissa, self.scale, self.error + ulps)

    def format(self, digits: int | None = None) -> str:
        """Plain decimal string with ``digits`` decimals (no exponent)."""
        v = self if digits is None else self.rescale(digits)
        sign = "-" if v.mantissa < 0 else ""
        s = str(abs(v.mantissa)).rjust(v.scale + 1, "0")
        if v.scale == 0:
            return sign + s
        return f"{sign}{s[:-v.scale]}.{s[-v.scale:]}"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"FixedReal({self.format()} +- {self.error} ulp)"

    # -- arithmetic --------------------------------------------------
    def _coerce(self, other) -> "FixedReal":
        if isinstance(other, FixedReal):
            return other
        if isinstance(other, (int, Fraction)):
            return fix_from_rational(other, self.scale)
        return NotImplemented

    def _aligned(self, other: "FixedReal"):
        s = max(self.scale, other.scale)
        return self.rescale(s), other.rescale(s), s

    def __neg__(self) -> "FixedReal":
        return FixedReal(-self.mantissa, self.scale, self.error)

    def __abs__(self) -> "FixedReal":
        return FixedReal(abs(self.mantissa), self.scale, self.error)

    def __add__(self, other) -> "FixedReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        x, y, s = self._aligned(other)
        return FixedReal(x.mantissa + y.mantissa, s, x.error + y.error)

    __radd__ = __add__

    def __sub__(self, other) -> "FixedReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "FixedReal":
        return (-self) + other

    def __mul__(self, other) -> "FixedReal":
        if isinstance(other, int):
            return FixedReal(self.mantissa * other, self.scale, self.error * abs(other))
        if isinstance(other, Fraction):
            num = self.mantissa * other.numerator
            m = _round_div(num, other.denominator)
            inexact = num % other.denominator != 0
            err = _ceil_div(self.error * abs(other.numerator), other.denominator)
            return FixedReal(m, self.scale, err + (1 if inexact else 0))
        if not isinstance(other, FixedReal):
            return NotImplemented
        x, y, s = self._aligned(other)
        unit = 10**s
        prod = x.mantissa * y.mantissa
        m = _round_div(prod, unit)
        prop = abs(x.mantissa) * y.error + abs(y.mantissa) * x.error + x.error * y.error
        err = _ceil_div(prop, unit) + (0 if prod % unit == 0 else 1)
        return FixedReal(m, s, err)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FixedReal":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("fixed-point division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, FixedReal):
            return NotImplemented
        x, y, s = self._aligned(other)
        if abs(y.mantissa) <= y.error:
            raise ZeroDivisionError("divisor interval contains zero")
        unit = 10**s
        num = x.mantissa * unit
        m = _round_div(num, y.mantissa)
        ay = abs(y.mantissa)
        # |x/y - X/Y| <= (ex*|Y| + |X|*ey) / (|Y| (|Y| - ey)), in ulps
        prop = _ceil_div((x.error * ay + abs(x.mantissa) * y.error) * unit, ay * (ay - y.error))
        err = prop + (0 if num % y.mantissa == 0 else 1)
        return FixedReal(m, s, err)

    def __rtruediv__(self, other) -> "FixedReal":
        return self._coerce(other) / self

    def __eq__(self, other) -> bool:
        if isinstance(other, FixedReal):
            return (self.mantissa, self.scale, self.error) == (other.mantissa, other.scale, other.error)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.mantissa, self.scale, self.error))

    def contains(self, x) -> bool:
        """True if the exact rational ``x`` lies inside value +- bound."""
        return abs(Fraction(x) - self.to_fraction()) <= self.error_bound

    def lower(self) -> Fraction:
        return self.to_fraction() - self.error_bound

    def upper(self) -> Fraction:
        return self.to_fraction() + self.error_bound


def fix_from_rational(x, scale: int) -> FixedReal:
    """Round an exact rational to ``scale`` decimals (error <= 1 ulp)."""
    if scale < 1:
        raise ValueError("scale must be >= 1")
    x = Fraction(x)
    num = x.numerator * 10**scale
    m = _round_div(num, x.denominator)
    return FixedReal(m, scale, 0 if num % x.denominator == 0 else 1)


# -- elementary functions ------------------------------------------------

def _atanh_inv(q: int, unit: int) -> tuple[int, int]:
    """atanh(1/q) * unit for integer |q| >= 2; returns (value, error ulps)."""
    q2 = q * q
    power = unit // q  # floor, error < 1
    total, j, err = 0, 1, 1
    while power:
        total += power // j
        power //= q2
        j += 2
        err += 2
    return total, err


@lru_cache(maxsize=64)
def _log2_scaled(work: int) -> tuple[int, int]:
    # log 2 = 2 atanh(1/3)
    v, e = _atanh_inv(3, 10**work)
    return 2 * v, 2 * e


@lru_cache(maxsize=64)
def pi_scaled(work: int) -> tuple[int, int]:
    """Machin: pi = 16 atan(1/5) - 4 atan(1/239); returns (pi*10^work, err)."""
    unit = 10**work

    def atan_inv(q: int) -> tuple[int, int]:
        q2 = q * q
        power = unit // q
        total, j, sign, err = 0, 1, 1, 1
        while power:
            total += sign * (power // j)
            power //= q2
            j += 2
            sign = -sign
            err += 2
        return total, err

    a, ea = atan_inv(5)
    b, eb = atan_inv(239)
    return 16 * a - 4 * b, 16 * ea + 4 * eb


def fixed_pi(scale: int) -> FixedReal:
    work = scale + 10
    v, e = pi_scaled(work)
    return FixedReal(v, work, e).rescale(scale)


def fixed_log2(scale: int) -> FixedReal:
    work = scale + 10
    v, e = _log2_scaled(work)
    return FixedReal(v, work, e).rescale(scale)


def _log_positive_rational(x: Fraction, work: int) -> tuple[int, int]:
    """log(x) * 10**work for exact x > 0, with its error in ulps."""
    unit = 10**work
    # x = 2**k * r with r in [2/3, 4/3]
    k = x.numerator.bit_length() - x.denominator.bit_length()
    r = x / (Fraction(2) ** k)
    while r > Fraction(4, 3):
        r /= 2
        k += 1
    while r < Fraction(2, 3):
        r *= 2
        k -= 1
    # log r = 2 atanh(s), s = (r-1)/(r+1), |s| <= 1/7
    s = (r - 1) / (r + 1)
    total, err = 0, 0
    if s != 0:
        p = _round_div(s.numerator * unit, s.denominator)
        s2 = _round_div(s.numerator**2 * unit, s.denominator**2)
        j = 1
        while p:
            total += _round_div(p, j)
            p = _round_div(p * s2, unit)
            j += 2
            err += 3
        total *= 2
        err *= 2
    l2, e2 = _log2_scaled(work)
    return total + k * l2, err + abs(k) * e2


def _exp_rational(x: Fraction, work: int) -> tuple[int, int]:
    """exp(x) * 10**work for exact x, relative to ``work`` ulps of the result."""
    unit = 10**work
    l2, _ = _log2_scaled(work + 10)
    n = _round_div(x.numerator * 10 ** (work + 10), x.denominator * l2) if x else 0
    # r = x - n log 2, evaluated at extra precision
    inner = work + 10 + len(str(abs(n)))
    l2i, e2i = _log2_scaled(inner)
    ui = 10**inner
    r_m = _round_div(x.numerator * ui, x.denominator) - n * l2i
    r_err = 1 + abs(n) * e2i
    halvings = 10
    r_m = _round_div(r_m, 2**halvings)
    term, total, j, err = ui, ui, 1, 2
    while term:
        term = _round_div(term * r_m, ui * j)
        total += term
        j += 1
        err += 1
    for _ in range(halvings):
        total = _round_div(total * total, ui)
        err = 2 * err + 1
    # propagate the reduction error: relative error ~ r_err ulps
    err += 2 * r_err
    if n >= 0:
        value = total << n
        err <<= n
    else:
        value = _round_div(total, 1 << -n)
        err = _ceil_div(err, 1 << -n) + 1
    shift = 10 ** (inner - work)
    return _round_div(value, shift), _ceil_div(err, shift) + 1


def fix_log(x: FixedReal) -> FixedReal:
    if x.mantissa - x.error <= 0:
        raise ValueError("log of a value whose interval is not strictly positive")
    s = x.scale
    work = s + 10
    v, e = _log_positive_rational(x.to_fraction(), work)
    out = FixedReal(v, work, e).rescale(s)
    # |log(y+d) - log y| <= |d| / (y - |d|)
    prop = _ceil_div(x.error * 10**s, x.mantissa - x.error)
    return FixedReal(out.mantissa, s, out.error + prop)


def fix_exp(x: FixedReal) -> FixedReal:
    s = x.scale
    approx = float(x)
    if approx > 1e5:
        raise OverflowError("exp argument too large for fixed-point output")
    extra = max(0, math.ceil(approx / math.log(10))) + 2
    work = s + 10 + extra
    v, e = _exp_rational(x.to_fraction(), work)
    out = FixedReal(v, work, e).rescale(s)
    # |exp(y+d) - exp(y)| <= exp(y) * (exp(|d|) - 1)
    d = Fraction(x.error, 10**s)
    if d:
        growth = Fraction(math.expm1(float(d)) * (1 + 1e-9)).limit_denominator(10**12) + Fraction(1, 10**12)
        hi = abs(out.mantissa) + out.error + 1
        prop = _ceil_div(hi * growth.numerator, growth.denominator)
    else:
        prop = 0
    return FixedReal(out.mantissa, s, out.error + prop)


def fix_pow_rational(x: FixedReal, exponent) -> FixedReal:
    """x**exponent for x > 0 via exp(exponent * log x)."""
    exponent = Fraction(exponent)
    if exponent == 0:
        return FixedReal(10**x.scale, x.scale, 0)
    guard = x.rescale(x.scale + 10 + len(str(abs(exponent.numerator))))
    y = fix_exp(fix_log(guard) * exponent)
    return y.rescale(x.scale)


def fix_elementary(x: FixedReal, f: str, exponent=None) -> FixedReal:
    """Dispatch ``log``, ``exp`` or ``pow_rational`` on a FixedReal."""
    if f == "log":
        return fix_log(x)
    if f == "exp":
        return fix_exp(x)
    if f == "pow_rational":
        if exponent is None:
            raise ValueError("pow_rational needs an exponent")
        return fix_pow_rational(x, exponent)
    raise ValueError(f"unknown elementary function {f!r}")


def log_rational(x, scale: int) -> FixedReal:
    """log of an exact positive rational, correct to the returned bound."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("log of non-positive value")
    work = scale + 10
    v, e = _log_positive_rational(x, work)
    return FixedReal(v, work, e).rescale(scale)


def working_scale(precision: int) -> int:
    return precision + GUARD_DIGITS
