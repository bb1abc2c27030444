"""Coefficient sequences a_{k,l} and the composite sequences of the catalog.

Every sequence here (except the plain length quotients) is *digit
additive*: ``s_0 = 0`` and ``s_k = s_{k // B} + f(k)``.  A value can
therefore be read off from the base-B prefixes of k without a table, and a
dense block ``[lo, hi)`` only needs the block ``[lo // B, ...)`` above it.

Blocks are returned scaled by an integer ``unit`` (``round(s_k * unit)``)
together with a bound, in units of ``1/unit``, on the rounding error of any
entry.  Integer-valued sequences are exact at every unit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .digits import WordSpec, length_B
from .numerics import _round_div


@dataclass(frozen=True)
class SeriesParams:
    """(a, b, l, z, B) selecting one instance of the series families."""

    a: int
    b: int
    l: int = 0
    z: Fraction = Fraction(1)
    B: int = 2

    def __post_init__(self):
        object.__setattr__(self, "z", Fraction(self.z))
        if self.a < 1 or self.b < 1:
            raise ValueError("a and b must be positive integers")
        if self.l not in (0, 1):
            raise ValueError("l must be 0 or 1")
        if self.B < 2:
            raise ValueError("base B must be >= 2")
        if abs(self.z) > 1:
            raise ValueError("|z| must be <= 1")
        if self.z == 1 and self.l == 1:
            raise ValueError("(z, l) = (1, 1) is excluded: the series need (z-1)^2 + (l-1)^2 != 0")

    def with_base(self, B: int) -> "SeriesParams":
        return SeriesParams(self.a, self.b, self.l, self.z, B)


class CoefficientSource:
    """Interface shared by everything the summation engines can consume."""

    B: int
    degree: int = 0  # growth class k**degree * log k

    def value(self, k: int) -> Fraction:
        raise NotImplementedError

    def block(self, lo: int, hi: int, unit: int) -> tuple[list[int], int]:
        raise NotImplementedError


class DigitSequence(CoefficientSource):
    """s_0 = 0, s_k = s_{k//B} + increment(k)."""

    exact = True  # increment(k) * unit is an integer for the units we use

    def increment(self, k: int) -> Fraction:
        raise NotImplementedError

    def scaled_increments(self, lo: int, hi: int, unit: int) -> list[int]:
        inc = self.increment
        out = []
        for k in range(lo, hi):
            f = inc(k)
            out.append(_round_div(f.numerator * unit, f.denominator) if f else 0)
        return out

    def value(self, k: int) -> Fraction:
        total = Fraction(0)
        while k > 0:
            total += self.increment(k)
            k //= self.B
        return total

    def value_recursive(self, k: int, _memo=None) -> Fraction:
        memo = {0: Fraction(0)} if _memo is None else _memo
        if k not in memo:
            memo[k] = self.value_recursive(k // self.B, memo) + self.increment(k)
        return memo[k]

    def block(self, lo: int, hi: int, unit: int) -> tuple[list[int], int]:
        if hi <= lo:
            return [], 0
        B = self.B
        err = 0 if self.exact else (length_B(max(hi - 1, 1), B) + 1) // 2 + 1
        incs = self.scaled_increments(lo, hi, unit)
        if lo == 0:
            vals = [0] * hi
            for k in range(1, hi):
                vals[k] = vals[k // B] + incs[k]
            return vals, err
        plo = lo // B
        parent, _ = self.block(plo, (hi - 1) // B + 1, unit)
        return [parent[k // B - plo] + incs[k - lo] for k in range(lo, hi)], err


class ParamSequence(DigitSequence):
    """a_{k,l} generated by G_l(z, x) for the given SeriesParams."""

    def __init__(self, params: SeriesParams):
        self.params = params
        self.B = params.B
        self.degree = params.l
        self.exact = params.z.denominator == 1
        self._tables: dict[int, list[int]] = {}

    def increment(self, k: int) -> Fraction:
        p = self.params
        if k < p.a * p.l + p.b or (k - p.b) % p.a:
            return Fraction(0)
        m = (k - p.b) // p.a
        return comb(m, p.l) * p.z ** (m - p.l)

    def _rounded_table(self, unit: int) -> list[int]:
        """round(binom(m, l) z^(m-l) * unit) until it stays below 1/2."""
        if unit not in self._tables:
            p = self.params
            az = abs(p.z)
            peak = p.l + 1 if az == 0 else max(p.l + 1, math.ceil(p.l / -math.log(float(az))) + 1)
            table, m = [], 0
            while True:
                c = comb(m, p.l) * p.z ** (m - p.l) if m >= p.l else Fraction(0)
                r = _round_div(c.numerator * unit, c.denominator)
                table.append(r)
                if m > peak and 2 * abs(c) * unit < 1:
                    break
                m += 1
            self._tables[unit] = table
        return self._tables[unit]

    def scaled_increments(self, lo: int, hi: int, unit: int) -> list[int]:
        p = self.params
        a, b, l, z = p.a, p.b, p.l, p.z
        start = max(lo, a * l + b)
        out = [0] * (hi - lo)
        first = start + (-(start - b)) % a
        if first >= hi:
            return out
        if self.exact:
            zi = int(z)
            for k in range(first, hi, a):
                m = (k - b) // a
                c = comb(m, l) if l else 1
                if zi != 1:
                    c *= zi ** (m - l)
                out[k - lo] = c * unit
        else:
            table = self._rounded_table(unit)
            for k in range(first, hi, a):
                m = (k - b) // a
                if m >= len(table):
                    break
                out[k - lo] = table[m]
        return out


def coefficient(params: SeriesParams, k: int) -> Fraction:
    """a_{k,l}, summed over the base-B prefixes of k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return ParamSequence(params).value(k)


def coefficient_recursive(params: SeriesParams, k: int) -> Fraction:
    return ParamSequence(params).value_recursive(k)


@dataclass
class CoefficientTable:
    """Dense a_{k,l} for 0 <= k <= N, filled by the two-branch recursion."""

    params: SeriesParams
    N: int
    values: list[Fraction] = field(default_factory=list)

    def __post_init__(self):
        seq = ParamSequence(self.params)
        vals = [Fraction(0)] * (self.N + 1)
        for k in range(1, self.N + 1):
            vals[k] = vals[k // self.params.B] + seq.increment(k)
        self.values = vals

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]


def word_params(word: WordSpec) -> SeriesParams:
    """Parameters whose coefficients count occurrences of ``word``."""
    a = word.base ** word.length
    b = word.value if word.value else a
    return SeriesParams(a, b, 0, Fraction(1), word.base)


# -- composite sequences ----------------------------------------------------

class _IntIncrement(DigitSequence):
    def __init__(self, B: int):
        self.B = B

    def f(self, k: int) -> int:
        raise NotImplementedError

    def increment(self, k: int) -> Fraction:
        return Fraction(self.f(k))

    def scaled_increments(self, lo, hi, unit):
        f = self.f
        return [f(k) * unit for k in range(lo, hi)]


class GlaisherSequence(_IntIncrement):
    """b_k = b_{k//B} + (-1)^(k-1) (6k + 3)."""

    degree = 1

    def f(self, k):
        if k == 0:
            return 0
        return 6 * k + 3 if k % 2 else -(6 * k + 3)


class Zeta2Sequence(_IntIncrement):
    """c_k = c_{k//B} + (-1)^(k-1) 6k."""

    degree = 1

    def f(self, k):
        return 6 * k if k % 2 else -6 * k


class CatalanSequence(_IntIncrement):
    """c_{2j} = c_{.} + j,  c_{2j+1} = c_{.} + ((-1)^(j-1) - 1)/2 (2j+1)."""

    degree = 1

    def f(self, k):
        if k == 0:
            return 0
        j, odd = divmod(k, 2)
        if not odd:
            return j
        return -k if j % 2 == 0 else 0


class ZeroDigitSequence(_IntIncrement):
    """N_{0,B}(k): zeros in the shortest expansion of k."""

    def f(self, k):
        return 1 if k and k % self.B == 0 else 0


class ParityDifferenceSequence(_IntIncrement):
    """N_odd(k) - N_even(k) over the digits of k; B must be even."""

    def __init__(self, B: int):
        if B % 2:
            raise ValueError("parity digit counts need an even base")
        super().__init__(B)

    def f(self, k):
        if k == 0:
            return 0
        return 1 if (k % self.B) % 2 else -1


class LengthSequence(_IntIncrement):
    """L_B(k)."""

    def f(self, k):
        return 1 if k else 0


class FoldedSequence(DigitSequence):
    """A digit-additive sequence whose first term is replaced by ``seed``."""

    def __init__(self, inner: DigitSequence, seed: Fraction):
        self.inner = inner
        self.seed = Fraction(seed)
        self.B = inner.B
        self.degree = inner.degree
        self.exact = inner.exact and self.seed.denominator == 1

    def increment(self, k):
        return self.seed if k == 1 else self.inner.increment(k)

    def scaled_increments(self, lo, hi, unit):
        out = self.inner.scaled_increments(lo, hi, unit)
        if lo <= 1 < hi:
            out[1 - lo] = _round_div(self.seed.numerator * unit, self.seed.denominator)
        return out


class LengthQuotient(CoefficientSource):
    """L_B(k // q), with L_B(0) = 0."""

    def __init__(self, q: int, B: int):
        if q < 1:
            raise ValueError("q must be >= 1")
        self.q, self.B = q, B

    def value(self, k: int) -> Fraction:
        j = k // self.q
        return Fraction(length_B(j, self.B) if j else 0)

    def block(self, lo, hi, unit):
        if hi <= lo:
            return [], 0
        q, B = self.q, self.B
        out = []
        j = lo // q
        length = length_B(j, B) if j else 0
        nxt = B**length  # smallest j with one more digit
        for k in range(lo, hi):
            j = k // q
            while j >= nxt:
                length += 1
                nxt *= B
            out.append(length * unit)
        return out, 0


class Constant(CoefficientSource):
    def __init__(self, c, B: int):
        self.c, self.B = Fraction(c), B

    def value(self, k):
        return self.c

    def block(self, lo, hi, unit):
        v = _round_div(self.c.numerator * unit, self.c.denominator)
        return [v] * max(hi - lo, 0), 0 if (self.c.numerator * unit) % self.c.denominator == 0 else 1


class Combination(CoefficientSource):
    """sum_i c_i * source_i(k) with exact rational weights c_i."""

    def __init__(self, terms: Sequence[tuple[Fraction, CoefficientSource]]):
        self.terms = [(Fraction(c), s) for c, s in terms]
        self.B = self.terms[0][1].B
        if any(s.B != self.B for _, s in self.terms):
            raise ValueError("all sources in a combination need the same base")
        self.degree = max(getattr(s, "degree", 0) for _, s in self.terms)

    def value(self, k):
        return sum((c * s.value(k) for c, s in self.terms), Fraction(0))

    def block(self, lo, hi, unit):
        den = math.lcm(*(c.denominator for c, _ in self.terms))
        acc = [0] * max(hi - lo, 0)
        err = 0
        for c, s in self.terms:
            vals, e = s.block(lo, hi, unit)
            w = c.numerator * (den // c.denominator)
            err += abs(w) * e
            if w == 1:
                acc = [x + y for x, y in zip(acc, vals)]
            else:
                acc = [x + w * y for x, y in zip(acc, vals)]
        if den == 1:
            return acc, err
        return [_round_div(x, den) for x in acc], -(-err // den) + 1


@dataclass(frozen=True)
class CompositeRecipe:
    """Named digit-defined sequence used by one of the catalog corollaries."""

    kind: str
    B: int = 2
    t: int | None = None
    b: int | None = None

    KINDS = ("length_difference", "somos", "glaisher", "zeta2", "catalan",
             "somos_folded", "somos_addison_folded", "glaisher_folded", "catalan_folded")

    def source(self) -> CoefficientSource:
        k = self.kind
        if k == "length_difference":
            if self.b is None or self.b < 1:
                raise ValueError("length_difference needs b >= 1")
            return Combination([(1, LengthQuotient(self.b, self.B)), (-1, LengthQuotient(1, self.B))])
        if k in ("somos", "somos_folded", "somos_addison_folded"):
            t = self.t
            if not isinstance(t, int) or t < 2:
                raise ValueError("Somos sequences are implemented for integer t >= 2 only")
            seq = ParamSequence(SeriesParams(1, 1, 0, Fraction(1, t), self.B))
            if k == "somos":
                return seq
            self._need_base2()
            return FoldedSequence(seq, 3 if k == "somos_folded" else 4)
        if k == "glaisher":
            return GlaisherSequence(self.B)
        if k == "zeta2":
            return Zeta2Sequence(self.B)
        if k == "catalan":
            return CatalanSequence(self.B)
        if k == "glaisher_folded":
            self._need_base2()
            return FoldedSequence(GlaisherSequence(2), 16)
        if k == "catalan_folded":
            self._need_base2()
            return FoldedSequence(CatalanSequence(2), Fraction(-9, 8))
        raise ValueError(f"unknown composite recipe {k!r}")

    def _need_base2(self):
        if self.B != 2 or (self.t not in (None, 2)):
            raise ValueError(f"{self.kind} is the B = 2 specialization only")


def composite_sequence(recipe: CompositeRecipe, k: int) -> Fraction:
    if k < 1:
        raise ValueError("k must be >= 1")
    return recipe.source().value(k)


def verify_functional_equation(params: SeriesParams, degree: int) -> bool:
    """Compare both sides of the functional equation of G_l up to x**degree."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    B, a, b, l, z = params.B, params.a, params.b, params.l, params.z
    coeffs = CoefficientTable(params, degree).values
    for n in range(degree + 1):
        lhs = coeffs[n]
        for j in range(B):
            if n - j >= 0 and (n - j) % B == 0:
                lhs -= coeffs[(n - j) // B]
        rhs = Fraction(0)
        if n >= b and (n - b) % a == 0:
            k = (n - b) // a
            if k >= l:
                rhs = comb(k, l) * z ** (k - l)
        if lhs != rhs:
            return False
    return True
