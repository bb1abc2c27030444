"""Registry of named constants, their rational series and their references.

Each entry knows, per summation method, which coefficient source and kernel
to use, the exact leading term, and the factor multiplying the sum.  The
reference value for the convergence report always comes from the oracles
package, never from the series themselves.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .digits import WordSpec
from .engines import Checkpoint, ConvergenceReport, SeriesFamily, leading_integral, weighted_sum
from .numerics import FixedReal, fix_log, fixed_log2, fixed_pi, log_rational
from .oracles import closed_forms as cf
from .oracles.constants import literal
from .oracles.definition import definition_sum
from .oracles.quadrature import CATALAN, QuadratureSpec, quadrature
from .oracles.special import log_gamma
from .sequences import (
    CatalanSequence,
    Combination,
    Constant,
    FoldedSequence,
    GlaisherSequence,
    LengthQuotient,
    LengthSequence,
    ParamSequence,
    ParityDifferenceSequence,
    SeriesParams,
    ZeroDigitSequence,
    Zeta2Sequence,
    word_params,
)

METHODS = ("vacca", "epsilon", "complement", "addison", "integral", "definition")
CLASSES = ("logN_over_N", "logN_over_N2", "one_over_N")


@dataclass(frozen=True)
class Leading:
    """Exact combination sum c_i * symbol_i with symbols 1, pi, log2."""

    terms: tuple[tuple[Fraction, str], ...] = ()

    @classmethod
    def of(cls, **coeffs) -> "Leading":
        return cls(tuple((Fraction(v), k) for k, v in coeffs.items() if v))

    def evaluate(self, scale: int) -> FixedReal:
        out = FixedReal(0, scale)
        for c, sym in self.terms:
            if sym == "one":
                base = FixedReal(10**scale, scale)
            elif sym == "pi":
                base = fixed_pi(scale)
            elif sym == "log2":
                base = fixed_log2(scale)
            else:
                raise ValueError(f"unknown symbol {sym!r}")
            out = out + base * c
        return out.rescale(scale)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, sym in self.terms:
            parts.append(str(c) if sym == "one" else f"{c}*{sym}")
        return " + ".join(parts)


@dataclass(frozen=True)
class Recipe:
    family: SeriesFamily
    source: object
    leading: Leading | None  # None: the engine's own leading integral of ``params``
    factor: Fraction = Fraction(1)
    params: SeriesParams | None = None


@dataclass(frozen=True)
class ConstantEntry:
    name: str
    description: str
    extras: tuple[str, ...]
    convergence_class: str
    oracle: str
    default_method: str
    methods: tuple[str, ...]
    recipe: Callable  # (method, B, **extra) -> Recipe
    reference: Callable  # (B, precision, **extra) -> FixedReal
    oracle_route: Callable | None = None  # (gamma_getter, B, precision, **extra) -> FixedReal


def _harmonic(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def _one(c) -> Leading:
    return Leading.of(one=c)


def _log_pi(scale: int) -> FixedReal:
    return fix_log(fixed_pi(scale + 5)).rescale(scale)


def _param_recipe(params_fn, addison_leading=None):
    """Recipes for entries that are a single gamma^{(l)}_{a,b}(z)."""

    def build(method, B, **extra):
        p = params_fn(B, **extra)
        src = ParamSequence(p)
        if method == "vacca":
            return Recipe(SeriesFamily.VACCA, src, Leading(), params=p)
        if method == "epsilon":
            return Recipe(SeriesFamily.EPSILON, src, Leading(), params=p)
        if method == "complement":
            return Recipe(SeriesFamily.COMPLEMENT, src, None, Fraction(-1), params=p)
        if method == "addison":
            return Recipe(SeriesFamily.ADDISON, src, addison_leading, params=p)
        raise ValueError(f"method {method!r} not available")

    return build


def _param_route(params_fn):
    def route(gamma, B, precision, **extra):
        return gamma(params_fn(B, **extra), precision)

    return route


# -- entries ----------------------------------------------------------------------

def _gamma_params(B, **_):
    return SeriesParams(1, 1, 0, 1, B)


def _log4pi_params(B, **_):
    return SeriesParams(1, 1, 0, -1, B)


def _log4pi_recipe(method, B, **extra):
    p = _log4pi_params(B)
    if method in ("vacca", "epsilon"):
        src = ParityDifferenceSequence(B) if B % 2 == 0 else ParamSequence(p)
        fam = SeriesFamily.VACCA if method == "vacca" else SeriesFamily.EPSILON
        return Recipe(fam, src, Leading(), params=p)
    if method == "complement":
        return Recipe(SeriesFamily.COMPLEMENT, ParamSequence(p), None, Fraction(-1), params=p)
    if method == "addison":
        src = Combination([(1, LengthQuotient(2, B)), (-1, LengthQuotient(1, B)), (1, ParamSequence(p))])
        return Recipe(SeriesFamily.ADDISON, src, _one(Fraction(1, 4)))
    raise ValueError(f"method {method!r} not available")


def _check_b(b):
    if not isinstance(b, int) or b < 2:
        raise ValueError("log_b needs an integer b >= 2")


def _log_b_recipe(method, B, b=None, **_):
    _check_b(b)
    src = Combination([(1, LengthQuotient(b, B)), (-1, LengthQuotient(1, B))])
    H = _harmonic(b - 1)
    if method == "vacca":
        return Recipe(SeriesFamily.VACCA, src, _one(H))
    if method == "epsilon":
        return Recipe(SeriesFamily.EPSILON, src, _one(H))
    if method == "complement":
        return Recipe(SeriesFamily.COMPLEMENT, src, _one(H + Fraction(1, b) - 1), Fraction(-1))
    if method == "addison":
        return Recipe(SeriesFamily.ADDISON, src, _one(H - Fraction(b - 1, 2 * b)))
    raise ValueError(f"method {method!r} not available")


def _log_b_route(gamma, B, precision, b=None, **_):
    _check_b(b)
    # log b = gamma_{1,b}(1) - gamma_{1,1}(1) + H_{b-1}
    w = precision + 3
    v = gamma(SeriesParams(1, b, 0, 1, B), w) - gamma(SeriesParams(1, 1, 0, 1, B), w) + _harmonic(b - 1)
    return v.rescale(precision)


def _lg1b_recipe(method, B, **_):
    src = Combination([(1, ZeroDigitSequence(B)), (Fraction(-1, B), LengthSequence(B)), (-1, Constant(1, B))])
    lead = _one(_harmonic(B - 1))
    if method == "vacca":
        return Recipe(SeriesFamily.VACCA, src, lead)
    if method == "epsilon":
        return Recipe(SeriesFamily.EPSILON, src, lead)
    raise ValueError(f"method {method!r} not available")


def _lg1b_route(gamma, B, precision, **_):
    # N_0 series -> gamma_{B,B}(1); L_B series -> gamma; sum_k Q(k, B) = H_{B-1} - log B
    w = precision + 3
    v = gamma(SeriesParams(B, B, 0, 1, B), w) - gamma(SeriesParams(1, 1, 0, 1, B), w) * Fraction(1, B)
    return (v + log_rational(B, w)).rescale(precision)


def _check_t(t):
    if not isinstance(t, int) or isinstance(t, bool) or t < 2:
        raise ValueError("somos_t needs an integer t >= 2")


def _somos_recipe(method, B, t=None, folded=False, **_):
    _check_t(t)
    if folded:
        if B != 2 or t != 2:
            raise ValueError("the folded Somos forms exist for B = t = 2 only")
        inner = ParamSequence(SeriesParams(1, 1, 0, Fraction(1, 2), 2))
        if method == "vacca":
            return Recipe(SeriesFamily.VACCA, FoldedSequence(inner, 3), _one(1), Fraction(-1, 2))
        if method == "addison":
            return Recipe(SeriesFamily.ADDISON, FoldedSequence(inner, 4), _one(Fraction(5, 8)), Fraction(-1, 2))
        raise ValueError(f"method {method!r} has no folded form")
    a = ParamSequence(SeriesParams(1, 1, 0, Fraction(1, t), B))
    if method in ("vacca", "epsilon"):
        src = Combination([(1, LengthQuotient(t, B)), (-1, LengthQuotient(t - 1, B)), (Fraction(-1, t), a)])
        fam = SeriesFamily.VACCA if method == "vacca" else SeriesFamily.EPSILON
        return Recipe(fam, src, _one(Fraction(1, (t - 1) ** 2)), Fraction(1, t - 1))
    if method == "addison":
        src = Combination([(1, LengthQuotient(t, B)), (-1, LengthQuotient(t - 1, B)),
                           (Fraction(-2, t * (t + 1)), a)])
        return Recipe(SeriesFamily.ADDISON, src, _one(Fraction(3 * t - 1, 4 * t * (t - 1) ** 2)),
                      Fraction(t + 1, 2 * (t - 1)))
    raise ValueError(f"method {method!r} not available")


def _somos_route(gamma, B, precision, t=None, **_):
    _check_t(t)
    g = gamma(SeriesParams(1, 1, 0, Fraction(1, t), B), precision + 3)
    return cf.log_somos_from_gamma(t, precision, g)


def _glaisher_recipe(method, B, folded=False, **_):
    if method != "addison":
        raise ValueError(f"method {method!r} not available")
    if folded:
        if B != 2:
            raise ValueError("the folded Glaisher form exists for B = 2 only")
        return Recipe(SeriesFamily.ADDISON, FoldedSequence(GlaisherSequence(2), 16), _one(Fraction(13, 48)),
                      Fraction(-1, 36))
    src = Combination([(7, LengthQuotient(1, B)), (-7, LengthQuotient(2, B)), (1, GlaisherSequence(B))])
    return Recipe(SeriesFamily.ADDISON, src, _one(Fraction(13, 48)), Fraction(-1, 36))


def _glaisher_route(gamma, B, precision, **_):
    return cf.log_glaisher_from_gamma_prime(precision, gamma(SeriesParams(1, 1, 1, -1, B), precision + 3))


def _zeta_recipe(method, B, **_):
    if method != "addison":
        raise ValueError(f"method {method!r} not available")
    src = Combination([(4, LengthQuotient(1, B)), (-1, LengthQuotient(2, B)), (1, Zeta2Sequence(B))])
    # twice the published combination: that one sums to zeta'(2) / (2 pi^2)
    return Recipe(SeriesFamily.ADDISON, src, _one(Fraction(-1, 8)), Fraction(1, 18))


def _zeta_reference(B, precision, **_):
    w = precision + 5
    return (cf.zeta_prime_2(w) / fixed_pi(w) / fixed_pi(w)).rescale(precision)


def _zeta_route(gamma, B, precision, **_):
    log_A = _glaisher_route(gamma, B, precision + 3)
    return cf.zeta2_relation(precision, log_A)


def _catalan_recipe(method, B, folded=False, **_):
    if method != "addison":
        raise ValueError(f"method {method!r} not available")
    if folded:
        if B != 2:
            raise ValueError("the folded Catalan form exists for B = 2 only")
        return Recipe(SeriesFamily.ADDISON, FoldedSequence(CatalanSequence(2), Fraction(-9, 8)),
                      _one(Fraction(11, 32)))
    src = Combination([(Fraction(1, 8), LengthQuotient(2, B)), (Fraction(-1, 8), LengthQuotient(1, B)),
                       (1, CatalanSequence(B))])
    return Recipe(SeriesFamily.ADDISON, src, _one(Fraction(11, 32)))


def _catalan_reference(B, precision, **_):
    w = precision + 5
    return (literal("catalan", w) / fixed_pi(w)).rescale(precision)


def _catalan_route(gamma, B, precision, **_):
    w = precision + 3
    log_A = _glaisher_route(gamma, B, w)
    return cf.catalan_combination(precision, gamma(SeriesParams(2, 1, 0, -1, B), w),
                                  gamma(SeriesParams(2, 1, 1, -1, B), w), log_A)


def _word(B, word=None, **_) -> WordSpec:
    if word is None:
        raise ValueError("word_constant needs a word")
    w = word if isinstance(word, WordSpec) else WordSpec.parse(str(word), B)
    if w.base != B:
        raise ValueError(f"word base {w.base} differs from B = {B}")
    return w


def _word_params(B, **extra):
    return word_params(_word(B, **extra))


def _gp11_reference(B, precision, **_):
    # gamma'_{1,1}(-1) = log(2^(11/6) A^6 / (pi^(3/2) e))
    w = precision + 5
    v = log_rational(2, w) * Fraction(11, 6) + fix_log(literal("glaisher", w + 2)).rescale(w) * 6
    return (v - _log_pi(w) * Fraction(3, 2) - 1).rescale(precision)


_P21 = lambda B, **_: SeriesParams(2, 1, 0, -1, B)  # noqa: E731
_P21d = lambda B, **_: SeriesParams(2, 1, 1, -1, B)  # noqa: E731
_P11d = lambda B, **_: SeriesParams(1, 1, 1, -1, B)  # noqa: E731

_ALL_SERIES = ("vacca", "epsilon", "complement", "addison")
_ORACLES = ("integral", "definition")

_ENTRIES = [
    ConstantEntry("gamma", "Euler's constant", (), "logN_over_N2", "literal euler_gamma", "addison",
                  _ALL_SERIES + _ORACLES, _param_recipe(_gamma_params, _one(Fraction(1, 2))),
                  lambda B, precision, **_: literal("euler_gamma", precision), _param_route(_gamma_params)),
    ConstantEntry("log4_over_pi", "log(4/pi) = gamma_{1,1}(-1)", (), "logN_over_N2", "log 4 - log pi",
                  "addison", _ALL_SERIES + _ORACLES, _log4pi_recipe,
                  lambda B, precision, **_: (log_rational(4, precision + 3) - _log_pi(precision + 3)).rescale(precision),
                  _param_route(_log4pi_params)),
    ConstantEntry("log_b", "log b for an integer b >= 2", ("b",), "logN_over_N2", "log of the rational b",
                  "addison", _ALL_SERIES + _ORACLES, _log_b_recipe,
                  lambda B, precision, b=None, **_: (_check_b(b), log_rational(b, precision))[1], _log_b_route),
    ConstantEntry("log_gamma_1_over_B", "log Gamma(1/B)", (), "logN_over_N", "log_gamma(1/B)", "vacca",
                  ("vacca", "epsilon") + _ORACLES, _lg1b_recipe,
                  lambda B, precision, **_: log_gamma(Fraction(1, B), precision), _lg1b_route),
    ConstantEntry("somos_t", "log of the generalized Somos constant sigma_t", ("t",), "logN_over_N",
                  "direct sum of log n / t^n", "vacca", ("vacca", "epsilon", "addison") + _ORACLES,
                  _somos_recipe, lambda B, precision, t=None, **_: (_check_t(t), cf.somos_direct(t, precision))[1],
                  _somos_route),
    ConstantEntry("glaisher_logA", "log of the Glaisher-Kinkelin constant A", (), "logN_over_N",
                  "log of literal glaisher", "addison", ("addison",) + _ORACLES, _glaisher_recipe,
                  lambda B, precision, **_: fix_log(literal("glaisher", precision + 2)).rescale(precision),
                  _glaisher_route),
    ConstantEntry("zeta_prime_2_over_pi2", "zeta'(2) / pi^2", (), "logN_over_N",
                  "Euler-Maclaurin zeta'(2) over pi^2", "addison", ("addison",) + _ORACLES, _zeta_recipe,
                  _zeta_reference, _zeta_route),
    ConstantEntry("catalan_over_pi", "Catalan's constant over pi", (), "logN_over_N", "literal catalan / pi",
                  "addison", ("addison",) + _ORACLES, _catalan_recipe, _catalan_reference, _catalan_route),
    ConstantEntry("word_constant", "sum of N_w(k) Q(k, B) for a base-B word w", ("word",), "logN_over_N",
                  "WordConstant closed form", "vacca", _ALL_SERIES + _ORACLES, _param_recipe(_word_params),
                  lambda B, precision, **extra: cf.word_constant(_word(B, **extra), precision),
                  _param_route(_word_params)),
    ConstantEntry("gamma_21_minus1", "gamma_{2,1}(-1)", (), "logN_over_N2", "Gamma21AtMinusOne closed form",
                  "addison", _ALL_SERIES + _ORACLES, _param_recipe(_P21, Leading.of(pi=Fraction(1, 8), log2=Fraction(-1, 4))),
                  lambda B, precision, **_: cf.gamma_21_minus1(precision), _param_route(_P21)),
    ConstantEntry("gamma_prime_21_minus1", "gamma'_{2,1}(-1)", (), "logN_over_N", "definition sum",
                  "addison", ("addison",) + _ORACLES,
                  _param_recipe(_P21d, Leading.of(pi=Fraction(1, 16), log2=Fraction(-1, 4))),
                  lambda B, precision, **_: definition_sum(SeriesParams(2, 1, 1, -1), precision=precision),
                  _param_route(_P21d)),
    ConstantEntry("gamma_prime_11_minus1", "gamma'_{1,1}(-1)", (), "logN_over_N", "Glaisher relation",
                  "addison", ("addison",) + _ORACLES,
                  _param_recipe(_P11d, Leading.of(log2=Fraction(3, 2), one=-1)),
                  _gp11_reference, _param_route(_P11d)),
]
REGISTRY = {e.name: e for e in _ENTRIES}


def list_constants() -> list[tuple[str, str, tuple[str, ...], str]]:
    """(name, description, required extra arguments, convergence class), in registry order."""
    return [(e.name, e.description, e.extras, e.convergence_class) for e in _ENTRIES]


def get_entry(name: str) -> ConstantEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown constant {name!r}; known: {', '.join(REGISTRY)}") from None


def build_recipe(name: str, method: str | None = None, B: int = 2, **extra) -> Recipe:
    e = get_entry(name)
    method = method or e.default_method
    if method not in e.methods or method in _ORACLES:
        raise ValueError(f"{name} has no series for method {method!r}; available: {', '.join(e.methods)}")
    return e.recipe(method, B, **extra)


def reference_value(name: str, B: int = 2, precision: int = 20, **extra) -> FixedReal:
    e = get_entry(name)
    extra.pop("folded", None)
    return e.reference(B, precision, **extra)


def _definition_gamma(params: SeriesParams, precision: int) -> FixedReal:
    return definition_sum(params, precision=precision)


def _integral_gamma(params: SeriesParams, precision: int) -> FixedReal:
    return quadrature(QuadratureSpec(CATALAN, params, max(precision, 6), level_cap=12))


def evaluate_constant(name: str, B: int = 2, N: int = 10**4, precision: int = 20, method: str | None = None,
                      checkpoints=None, workers: int = 1, reference: bool = True, **extra):
    """Evaluate a registered constant; returns (value, ConvergenceReport).

    ``extra`` carries b (log_b), t (somos_t), word (word_constant) and
    ``folded=True`` for the B = 2 special forms.
    """
    e = get_entry(name)
    if B < 2:
        raise ValueError("base B must be >= 2")
    for req in e.extras:
        if extra.get(req) is None:
            raise ValueError(f"{name} needs the extra argument {req!r}")
    method = method or e.default_method
    if method not in e.methods:
        raise ValueError(f"{name} has no method {method!r}; available: {', '.join(e.methods)}")
    ref = None
    if reference:
        ref = reference_value(name, B, precision + 2, **extra)
    if method in _ORACLES:
        extra.pop("folded", None)
        gamma = _definition_gamma if method == "definition" else _integral_gamma
        value = e.oracle_route(gamma, B, precision + 2, **extra).rescale(precision)
        ref_err = None
        if ref is not None:
            ref_err = FixedReal.from_rational(abs(value.to_fraction() - ref.to_fraction()), precision)
        tail = FixedReal.from_rational(value.error_bound, precision)
        return value, ConvergenceReport(method, [Checkpoint(0, value, tail, ref_err)])
    r = e.recipe(method, B, **extra)
    if r.leading is None:
        lead = leading_integral(r.params, precision + 5)
        if r.family is SeriesFamily.ADDISON:
            lead = lead * Fraction(1, 2)
    else:
        lead = r.leading.evaluate(precision + 5)
    return weighted_sum(r.source, r.family, N, precision, checkpoints=checkpoints, workers=workers,
                        leading=lead, factor=r.factor, reference=ref)
