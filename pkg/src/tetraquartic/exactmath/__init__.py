"""Exact scalar, polynomial and matrix arithmetic over the rationals."""

from .rational import Rational, parse_rational, format_rational, rational_sqrt, is_square
from .multipoly import MultiPoly, symbols, linear_form
from .unipoly import (
    UniPoly,
    poly_gcd,
    resultant,
    resultant_in,
    sylvester_matrix,
    discriminant_univariate,
    squarefree_part,
    count_distinct_roots,
    real_root_count,
    rational_roots,
)
from .binaryform import BinaryForm, SquareRoot, is_perfect_square, distinct_root_count
from .groebner import groebner_basis, solve_zero_dim, ZeroDimSolution
from . import matrix

__all__ = [
    "Rational", "parse_rational", "format_rational", "rational_sqrt", "is_square",
    "MultiPoly", "symbols", "linear_form",
    "UniPoly", "poly_gcd", "resultant", "resultant_in", "sylvester_matrix",
    "discriminant_univariate", "squarefree_part", "count_distinct_roots",
    "real_root_count", "rational_roots",
    "BinaryForm", "SquareRoot", "is_perfect_square", "distinct_root_count",
    "groebner_basis", "solve_zero_dim", "ZeroDimSolution", "matrix",
]
