"""Summation of the Vacca, complement, Addison and epsilon-form series.

Every term is rounded once to an integer multiple of ``10**-W`` and the
terms are added as Python integers, so a chunked (or parallel) run adds
exactly the same integers as a sequential one and the result is
bit-identical.  The returned partial sums carry the rounding error only;
the truncation error is reported separately as an estimate.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .kernels import RATIOS
from .numerics import FixedReal, _ceil_div, fix_from_rational
from .sequences import CoefficientSource, ParamSequence, SeriesParams

CHUNK = 1 << 15


class SeriesFamily(str, Enum):
    VACCA = "vacca"
    COMPLEMENT = "complement"
    ADDISON = "addison"
    EPSILON = "epsilon"


@dataclass(frozen=True)
class Checkpoint:
    terms: int
    partial: FixedReal
    estimated_tail: FixedReal
    reference_error: FixedReal | None = None


@dataclass
class ConvergenceReport:
    family: SeriesFamily
    checkpoints: list[Checkpoint] = field(default_factory=list)

    def __post_init__(self):
        terms = [c.terms for c in self.checkpoints]
        if any(b <= a for a, b in zip(terms, terms[1:])):
            raise ValueError("checkpoints must be strictly increasing")

    @property
    def final(self) -> Checkpoint:
        return self.checkpoints[-1]


# -- leading integrals --------------------------------------------------------

def leading_integral(params: SeriesParams, precision: int) -> FixedReal:
    """I_l = int_0^1 x^(b+al-1) (1-x) / (1 - z x^a)^(l+1) dx.

    Termwise this is sum_m binom(m+l, l) z^m (1/(am+c) - 1/(am+c+1)) with
    c = b + a l.  On |z| = 1 the sum is taken in closed form through
    digamma; inside the disc it is truncated with a geometric bound.
    """
    from .oracles.special import digamma

    a, l, z = params.a, params.l, params.z
    c = params.b + a * l
    w = precision + 5
    if z == 1:
        if l:
            raise ValueError("I_1 diverges at z = 1")
        if a == 1:
            return fix_from_rational(Fraction(1, c), precision)
        v = (digamma(Fraction(c + 1, a), w) - digamma(Fraction(c, a), w)) * Fraction(1, a)
        return v.rescale(precision)
    if z == -1:
        def S(d):  # sum_m (-1)^m / (a m + d)
            return (digamma(Fraction(d + a, 2 * a), w) - digamma(Fraction(d, 2 * a), w)) * Fraction(1, 2 * a)

        if l == 0:
            v = S(c) - S(c + 1)
        else:
            v = (S(c) * (a - c) - S(c + 1) * (a - c - 1)) * Fraction(1, a)
        return v.rescale(precision)
    r = abs(z)
    target = Fraction(1, 10 ** (precision + 2))
    total, m = Fraction(0), 0
    while True:
        total += math.comb(m + l, l) * z**m * Fraction(1, (a * m + c) * (a * m + c + 1))
        M = m
        bound = Fraction((M + 2) ** l) * r ** (M + 1) / (1 - r) ** (l + 1) if r else Fraction(0)
        if bound < target:
            break
        m += 1
    return fix_from_rational(total, precision + 2).with_error(bound).rescale(precision)


# -- chunked integer summation ------------------------------------------------

def _chunk(task):
    """Sum one range of terms; returns (scaled sum, error in ulps)."""
    source, family, lo, hi, unit = task
    B = source.B
    total = 0
    nz = 0
    if family is SeriesFamily.EPSILON:
        jlo = lo // B
        vals, e = source.block(jlo, (hi - 1) // B + 1, unit)
        for k in range(lo, hi):
            v = vals[k // B - jlo]
            if v:
                nz += 1
                num = v * (B - 1) if k % B == 0 else -v
                total += (2 * num + k) // (2 * k)
        harmonic = math.log(hi / lo) + 1 / lo if lo else 1
        return total, (nz + 1) // 2 + math.ceil(e * harmonic) + (1 if e else 0)
    vals, e = source.block(lo, hi, unit)
    ratio = RATIOS[family.value]
    for i, v in enumerate(vals):
        if v:
            nz += 1
            num, den = ratio(lo + i, B)
            total += (2 * v * num + den) // (2 * den)
    return total, (nz + 1) // 2 + e


def _boundaries(first: int, last: int, marks: list[int], chunk: int) -> list[int]:
    pts = set(range(first, last, chunk)) | {m for m in marks if first < m < last} | {first, last}
    return sorted(pts)


def _guard(N: int) -> int:
    return max(15, len(str(N)) + 3)


def _default_checkpoints(N: int, step: int = 1) -> list[int]:
    out, p = [], 10
    while p < N:
        if p % step == 0 and p >= step:
            out.append(p)
        p *= 10
    return out + [N]


def weighted_sum(source: CoefficientSource, family: SeriesFamily, N: int, precision: int,
                 checkpoints=None, workers: int = 1, leading=None, factor=Fraction(1),
                 reference: FixedReal | None = None, chunk: int = CHUNK):
    """leading + factor * sum of the first N terms of the chosen family.

    For the epsilon form, N counts epsilon terms and must be a multiple of
    B; the terms run over k = B, ..., B + N - 1, i.e. N / B complete blocks.
    """
    family = SeriesFamily(family)
    B = source.B
    if N < 1:
        raise ValueError("N must be >= 1")
    if precision < 1:
        raise ValueError("precision must be >= 1")
    step = B if family is SeriesFamily.EPSILON else 1
    if N % step:
        raise ValueError(f"epsilon-form truncation must be a multiple of B = {B} (got N = {N})")
    marks = sorted(set(checkpoints)) if checkpoints else _default_checkpoints(N, step)
    marks = [m for m in marks if 0 < m <= N]
    if marks[-1] != N:
        marks.append(N)
    if any(m % step for m in marks):
        raise ValueError(f"epsilon-form checkpoints must be multiples of B = {B}")
    W = precision + _guard(N)
    unit = 10**W
    first = B if family is SeriesFamily.EPSILON else 1
    bounds = _boundaries(first, first + N, [first + m for m in marks], chunk)
    tasks = [(source, family, lo, hi, unit) for lo, hi in zip(bounds, bounds[1:])]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chunk, tasks))
    else:
        results = [_chunk(t) for t in tasks]
    if leading is None:
        leading = FixedReal(0, precision)
    elif not isinstance(leading, FixedReal):
        leading = fix_from_rational(Fraction(leading), precision + 5)
    factor = Fraction(factor)
    report = ConvergenceReport(family)
    acc, err, ri = 0, 0, 0
    for m in marks:
        end = first + m
        while ri < len(tasks) and tasks[ri][3] <= end:
            s, e = results[ri]
            acc += s
            err += e
            ri += 1
        partial = (leading + FixedReal(acc, W, err) * factor).rescale(precision)
        tail = estimate_tail(family, source, m) * abs(factor)
        ref_err = None
        if reference is not None:
            diff = partial.to_fraction() - reference.to_fraction()
            ref_err = fix_from_rational(abs(diff), precision)
        report.checkpoints.append(Checkpoint(m, partial, tail.rescale(precision), ref_err))
    return report.final.partial, report


# -- tail estimates -----------------------------------------------------------

def _growth_ratio(source: CoefficientSource, lo: int, hi: int, samples: int = 257) -> float:
    """max |a_k| / (k^deg (log_B k + 1)) over sampled k in (lo, hi]."""
    B, deg = source.B, getattr(source, "degree", 0)
    lo = max(lo, 1)
    if hi - lo <= samples:
        ks = range(lo + 1, hi + 1)
    else:
        ks = sorted({lo + 1 + (hi - lo - 1) * i // (samples - 1) for i in range(samples)})
    # rounded blocks avoid exact z^m fractions with huge denominators
    unit = 10**12
    best = 0.0
    for k in ks:
        v = abs(source.block(k, k + 1, unit)[0][0]) / unit
        best = max(best, v / (k**deg * (math.log(k, B) + 1)))
    return best


def estimate_tail(family, params, N: int) -> FixedReal:
    """Empirical bound for the truncation error after N terms.

    Calibrated from the growth classes a_k = O(k^l log k) and the kernel
    sizes: the Vacca-type kernels behave like (B-1)/(2Bk^2), the Addison
    weight like (B^2-1)/(6B^2k^3).  Both constants below carry a factor
    of two of slack.
    """
    family = SeriesFamily(family)
    source = ParamSequence(params) if isinstance(params, SeriesParams) else params
    B, deg = source.B, getattr(source, "degree", 0)
    if family is SeriesFamily.EPSILON:
        N = max(N // B, 1)
    Nf = float(max(N, 1))
    r = _growth_ratio(source, N // 2, max(N, 1))
    logN = math.log(Nf, B) + 1
    if family is SeriesFamily.ADDISON:
        est = r * (B * B - 1) / (3 * B * B) * (logN + 1 / math.log(B)) * Nf ** (deg - 2) / (2 - deg)
    else:
        if deg:
            raise ValueError("Vacca-type series need l = 0 coefficients")
        est = (B - 1) * r * logN / Nf
    return FixedReal.from_rational(Fraction(est * (1 + 1e-9)).limit_denominator(10**30) + Fraction(1, 10**40), 40)


# -- the four families on parameter sets ----------------------------------------

def _need_l0(params: SeriesParams, what: str):
    if params.l != 0:
        raise ValueError(f"{what} needs l = 0 (got l = {params.l})")


def sum_vacca(params: SeriesParams, N: int, precision: int, **kw):
    """sum_{k<=N} a_k Q(k, B)."""
    _need_l0(params, "the Vacca series")
    return weighted_sum(ParamSequence(params), SeriesFamily.VACCA, N, precision, **kw)


def sum_epsilon_form(params: SeriesParams, N: int, precision: int, **kw):
    """sum a_{k//B} eps(k)/k over N / B complete blocks of B terms."""
    _need_l0(params, "the epsilon form")
    return weighted_sum(ParamSequence(params), SeriesFamily.EPSILON, N, precision, **kw)


def sum_complement(params: SeriesParams, N: int, precision: int, **kw):
    """I_0 - sum_{k<=N} a_k Q~(k, B)."""
    _need_l0(params, "the complement series")
    lead = leading_integral(params, precision + 5)
    return weighted_sum(ParamSequence(params), SeriesFamily.COMPLEMENT, N, precision,
                        leading=lead, factor=-1, **kw)


def sum_addison(params: SeriesParams, N: int, precision: int, **kw):
    """I_l / 2 + sum_{k<=N} a_{k,l} P_B(k) / (Bk (Bk+1) ... (Bk+B))."""
    if params.z == 1 and params.l == 1:
        raise ValueError("Addison series excludes z = 1 with l = 1")
    lead = leading_integral(params, precision + 5) * Fraction(1, 2)
    return weighted_sum(ParamSequence(params), SeriesFamily.ADDISON, N, precision, leading=lead, **kw)


def partial_complement_split(params: SeriesParams, N: int) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (sum a_k Q, sum a_k Q~, sum a_k (B-1)/(Bk(k+1))) over k <= N."""
    from .kernels import kernel_Q, kernel_Qtilde

    seq = ParamSequence(params)
    B = params.B
    q = qt = s = Fraction(0)
    for k in range(1, N + 1):
        a = seq.value(k)
        if a:
            q += a * kernel_Q(k, B)
            qt += a * kernel_Qtilde(k, B)
            s += a * Fraction(B - 1, B * k * (k + 1))
    return q, qt, s
