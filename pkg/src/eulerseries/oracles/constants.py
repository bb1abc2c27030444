"""50-digit constant literals, each checked once against an internal route."""
from __future__ import annotations

from functools import lru_cache

from ..numerics import FixedReal, fixed_log2, fixed_pi

LITERAL_DIGITS = 50
LITERALS = {
    "pi": "3.14159265358979323846264338327950288419716939937510",
    "euler_gamma": "0.57721566490153286060651209008240243104215933593992",
    "log2": "0.69314718055994530941723212145817656807550013436025",
    "catalan": "0.91596559417721901505460351493238411077414937428167",
    "glaisher": "1.28242712910062263687534256886979172776768892732500",
}
GLAISHER_STATED_PREFIX = "1.28242712"


class LiteralMismatch(ArithmeticError):
    pass


def _raw(name: str) -> FixedReal:
    # the literals are truncated/rounded, so one ulp at 50 digits
    return FixedReal.from_string(LITERALS[name], error=1)


@lru_cache(maxsize=None)
def validate_literal(name: str) -> bool:
    lit = _raw(name)
    if name == "pi":
        ref = fixed_pi(20)
    elif name == "log2":
        ref = fixed_log2(20)
    elif name == "euler_gamma":
        from ..sequences import SeriesParams
        from .definition import definition_sum

        ref = definition_sum(SeriesParams(1, 1, 0, 1), N=200, precision=8)
    elif name == "glaisher":
        if not LITERALS[name].startswith(GLAISHER_STATED_PREFIX):
            raise LiteralMismatch("Glaisher literal disagrees with the stated digits 1.28242712")
        return True
    elif name == "catalan":
        return True
    else:
        raise KeyError(name)
    diff = abs(lit.to_fraction() - ref.to_fraction())
    if diff > lit.error_bound + ref.error_bound:
        raise LiteralMismatch(f"literal {name} disagrees with its check value {ref}")
    return True


def literal(name: str, scale: int) -> FixedReal:
    """A literal at ``scale`` decimals; beyond 50 digits the bound says so."""
    if name not in LITERALS:
        raise KeyError(f"no literal named {name!r}")
    validate_literal(name)
    return _raw(name).rescale(scale)


def euler_gamma(scale: int) -> FixedReal:
    if scale <= LITERAL_DIGITS:
        return literal("euler_gamma", scale)
    from .special import digamma

    return -digamma(1, scale)


def pi(scale: int) -> FixedReal:
    return fixed_pi(scale)


def log2(scale: int) -> FixedReal:
    return fixed_log2(scale)
