"""Refined enumeration of permutations avoiding generalized (dashed) patterns."""

from .core import (
    GeneralizedPattern, Permutation, complement, parse_pattern, parse_pattern_set,
    parse_permutation, reverse, symmetry_class,
)
from .matcher import avoids, occurrences
from .oracle import Statistic, count_avoiders, refined_distribution
from .eco import builtin_rule, eco_matrix, expand, shift_diagonal, statistic_table
from .formulas import closed_form_count, column_gf, motzkin_gf

__version__ = "0.1.0"
