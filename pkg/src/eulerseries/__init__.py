"""Rational series for generalized Euler constants, with independent oracles."""
from .catalog import evaluate_constant, list_constants
from .digits import WordSpec, count_occurrences, epsilon, expand, length_B, parity_counts
from .engines import (
    ConvergenceReport,
    SeriesFamily,
    estimate_tail,
    sum_addison,
    sum_complement,
    sum_epsilon_form,
    sum_vacca,
)
from .kernels import addison_weight, kernel_P, kernel_Q, kernel_Qtilde
from .numerics import FixedReal, fix_elementary, rat_arith
from .sequences import CompositeRecipe, SeriesParams, coefficient, composite_sequence, word_params

__all__ = [
    "evaluate_constant", "list_constants", "WordSpec", "count_occurrences", "epsilon", "expand", "length_B",
    "parity_counts", "ConvergenceReport", "SeriesFamily", "estimate_tail", "sum_addison", "sum_complement",
    "sum_epsilon_form", "sum_vacca", "addison_weight", "kernel_P", "kernel_Q", "kernel_Qtilde", "FixedReal",
    "fix_elementary", "rat_arith", "CompositeRecipe", "SeriesParams", "coefficient", "composite_sequence",
    "word_params",
]
