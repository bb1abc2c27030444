"""Double-exponential (tanh-sinh) quadrature of the integral representations.

Nodes are placed at x = 1 / (1 + exp(-pi sinh t)), so both x and 1 - x are
available without cancellation; log x is taken as -log1p(exp(-pi sinh t)).
Node arithmetic runs on mpmath floats at ``target + 15`` digits.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..numerics import FixedReal, fix_from_rational
from ..sequences import SeriesParams

DEFINITION = "DefinitionSingle"
CATALAN = "CatalanType"
RAMANUJAN = "RamanujanType"
AVERAGED = "Averaged"
KINDS = (DEFINITION, CATALAN, RAMANUJAN, AVERAGED)
F_TERMS_CAP = 64


class QuadratureError(ArithmeticError):
    """Level cap reached before the estimates settled."""

    def __init__(self, message: str, estimate=None):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class QuadratureSpec:
    kind: str
    params: SeriesParams
    target_precision: int = 10
    level_cap: int = 10

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown integrand kind {self.kind!r}")
        if self.target_precision < 6:
            raise ValueError("target precision must be >= 6")


_GREGORY = [Fraction(1)]


def gregory(n: int) -> Fraction:
    """Gregory coefficients: u / log(1+u) = sum G_n u^n."""
    while len(_GREGORY) <= n:
        m = len(_GREGORY)
        _GREGORY.append(-sum((Fraction((-1) ** j, j + 1) * _GREGORY[m - j] for j in range(1, m + 1)), Fraction(0)))
    return _GREGORY[n]


class _Integrand:
    def __init__(self, spec: QuadratureSpec, dps: int):
        p = spec.params
        self.kind = spec.kind
        self.a, self.l, self.B = p.a, p.l, p.B
        self.c = p.b + p.a * p.l
        self.z = mpmath.mpf(p.z.numerator) / p.z.denominator
        self.z_is_one = p.z == 1
        self.cut = (dps + 5) * mpmath.log(10)
        self.small_y = mpmath.mpf("1e-3")
        n_greg = dps // 3 + 3
        self.greg = [mpmath.mpf(abs(g.numerator)) / g.denominator for g in map(gregory, range(1, n_greg + 1))]

    def _one_minus_pow(self, e, lx):
        return -mpmath.expm1(e * lx)

    def _den(self, e, lx):
        """(1 - z x^e)^(l+1)."""
        base = self._one_minus_pow(e, lx) if self.z_is_one else 1 - self.z * mpmath.exp(e * lx)
        return base ** (self.l + 1)

    def _bracket(self, y, lx):
        """1/(1-x) + 1/log x."""
        if y < self.small_y:
            total, p = mpmath.mpf(0), mpmath.mpf(1)
            for g in self.greg:
                total += g * p
                p *= y
            return total
        return 1 / y + 1 / lx

    def _plain(self, x, y, lx):
        """x^(c-1) (1-x) / (1 - z x^a)^(l+1)."""
        return mpmath.exp((self.c - 1) * lx) * y / self._den(self.a, lx)

    def _F(self, lx):
        total = mpmath.mpf(0)
        Bk = self.B
        for _ in range(F_TERMS_CAP):
            e = self.c * Bk - 1
            if -e * lx > self.cut:
                break
            total += mpmath.exp(e * lx) * self._one_minus_pow(Bk, lx) / self._den(self.a * Bk, lx)
            Bk *= self.B
        return total

    def _w_catalan(self, lx):
        """B/(1-x^B) - 1/(1-x) = sum_{j<B} (1 - x^j) / (1 - x^B)."""
        den = self._one_minus_pow(self.B, lx)
        return sum(self._one_minus_pow(j, lx) for j in range(1, self.B)) / den

    def __call__(self, x, y, lx):
        if self.kind == DEFINITION:
            return self._plain(x, y, lx) * self._bracket(y, lx)
        F = self._F(lx)
        if self.kind == CATALAN:
            return self._w_catalan(lx) * F
        w = self._w_catalan(lx)
        if self.kind == RAMANUJAN:
            return self._plain(x, y, lx) + (w - (self.B - 1)) * F
        return (self._plain(x, y, lx) + (2 * w - (self.B - 1)) * F) / 2


def quadrature(spec: QuadratureSpec) -> FixedReal:
    """Integrate the chosen representation of gamma^{(l)}_{a,b}(z) over (0, 1)."""
    p = spec.params
    if p.z == 1 and p.l == 1:
        raise ValueError("z = 1 with l = 1 is not integrable")
    target = spec.target_precision
    dps = target + 15
    with mpmath.workdps(dps):
        f = _Integrand(spec, dps)
        pi = mpmath.pi
        t_max = mpmath.asinh(f.cut / pi)

        def node(t):
            s = pi * mpmath.sinh(t)
            e = mpmath.exp(-s)
            x = 1 / (1 + e)
            y = e / (1 + e)
            lx = -mpmath.log1p(e)
            w = pi * mpmath.cosh(t) * x * y
            return w * f(x, y, lx)

        h = mpmath.mpf(1)
        n_max = int(mpmath.floor(t_max / h))
        total = node(mpmath.mpf(0)) + sum(node(k * h) + node(-k * h) for k in range(1, n_max + 1))
        prev = h * total
        tol = mpmath.mpf(10) ** -(target + 3)
        estimate, diff = prev, None
        for level in range(1, spec.level_cap + 1):
            h /= 2
            n_max = int(mpmath.floor(t_max / h))
            total += sum(node(k * h) + node(-k * h) for k in range(1, n_max + 1, 2))
            estimate = h * total
            diff = abs(estimate - prev)
            if level >= 3 and diff < tol:
                break
            prev = estimate
        else:
            raise QuadratureError(f"no convergence by level {spec.level_cap} (last change {mpmath.nstr(diff, 3)})",
                                  estimate)
        scale = target + 5
        value = fix_from_rational(Fraction(mpmath.nstr(estimate, dps + 5, strip_zeros=False)), scale)
        # level difference + node truncation + node arithmetic
        bound = Fraction(mpmath.nstr(diff, 5)) + Fraction(1, 10 ** (dps - 5))
        bound += _truncation_bound(p, dps)
        return value.with_error(bound)


def _truncation_bound(p: SeriesParams, dps: int) -> Fraction:
    """Mass lost by the cut at 1-x < 10^-(dps+5) and by capping F at 64 terms."""
    eps = Fraction(1, 10 ** (dps + 5))
    zfac = 1 / (1 - abs(p.z)) ** (p.l + 1) if abs(p.z) < 1 else Fraction(1)
    # F has at most F_TERMS_CAP + log_B(1/eps) terms of size <= zfac near x = 1
    cap_y = Fraction(dps * 3, p.B**F_TERMS_CAP)
    return (eps + cap_y) * p.B * zfac * (F_TERMS_CAP + 4 * dps)
