"""Exact identity suites shared by the ``verify`` command and the tests."""
from __future__ import annotations

from fractions import Fraction

from .digits import WordSpec, count_occurrences, parity_counts
from .kernels import addison_weight, kernel_P, kernel_Q, kernel_Qtilde
from .sequences import CoefficientTable, ParamSequence, SeriesParams, verify_functional_equation, word_params

FUNCTIONAL_SETS = [
    SeriesParams(1, 1, 0, 1, 2),
    SeriesParams(1, 2, 1, -1, 3),
    SeriesParams(2, 1, 0, -1, 2),
    SeriesParams(2, 3, 1, Fraction(1, 2), 2),
    SeriesParams(4, 1, 0, Fraction(1, 2), 3),
    SeriesParams(4, 3, 1, -1, 2),
    SeriesParams(1, 3, 0, -1, 3),
    SeriesParams(2, 2, 1, Fraction(1, 2), 3),
    SeriesParams(4, 2, 0, 1, 2),
    SeriesParams(1, 1, 1, Fraction(1, 2), 2),
]
WORDS = [("0", 2), ("1", 2), ("01", 2), ("10", 2), ("11", 2), ("0", 3), ("2", 3), ("12", 3)]


def suite_kernels(bases=range(2, 13), ks=range(1, 201)) -> tuple[bool, str]:
    for B in bases:
        for k in ks:
            # each call checks its own closed-form identity and raises on mismatch
            w = addison_weight(k, B)
            kernel_Qtilde(k, B)
            if w != kernel_Q(k, B) - Fraction(B - 1, 2 * B * k * (k + 1)):
                return False, f"Addison weight at k={k}, B={B}"
            if B == 2 and kernel_P(k, 2) != 1:
                return False, f"P_2({k}) != 1"
    return True, f"{len(bases) * len(ks)} (k, B) pairs"


def suite_functional(degree: int = 500) -> tuple[bool, str]:
    for p in FUNCTIONAL_SETS:
        if not verify_functional_equation(p, degree):
            return False, f"functional equation fails for {p}"
    return True, f"{len(FUNCTIONAL_SETS)} parameter sets to degree {degree}"


def suite_digits(kmax: int = 10**4) -> tuple[bool, str]:
    for text, B in WORDS:
        w = WordSpec.parse(text, B)
        vals, _ = ParamSequence(word_params(w)).block(0, kmax + 1, 1)
        for k in range(1, kmax + 1):
            if vals[k] != count_occurrences(w, k):
                return False, f"word {text} base {B} at k={k}"
    for B in (2, 4):
        vals, _ = ParamSequence(SeriesParams(1, 1, 0, -1, B)).block(0, kmax + 1, 1)
        for k in range(1, kmax + 1):
            odd, even = parity_counts(k, B)
            if vals[k] != odd - even:
                return False, f"parity base {B} at k={k}"
    return True, f"{len(WORDS)} words and 2 parity bases up to k={kmax}"


def suite_blocks(kmax: int = 1000) -> tuple[bool, str]:
    """Epsilon-form blocks equal Vacca terms; Q + Q~ split matches exactly."""
    for p in (SeriesParams(1, 1, 0, 1, 2), SeriesParams(1, 1, 0, -1, 3), SeriesParams(2, 1, 0, Fraction(1, 2), 4)):
        B = p.B
        table = CoefficientTable(p, kmax)
        for k in range(1, kmax + 1):
            a = table[k]
            block = sum((a * Fraction(B - 1 if n % B == 0 else -1, n) for n in range(k * B, k * B + B)), Fraction(0))
            if block != a * kernel_Q(k, B):
                return False, f"block identity at k={k} for {p}"
            if a * (kernel_Q(k, B) + kernel_Qtilde(k, B)) != a * Fraction(B - 1, B * k * (k + 1)):
                return False, f"split identity at k={k} for {p}"
    return True, f"3 parameter sets, k <= {kmax}"


SUITES = {
    "kernels": suite_kernels,
    "functional": suite_functional,
    "digits": suite_digits,
    "blocks": suite_blocks,
}
