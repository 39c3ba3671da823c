"""Exact arithmetic substrate: fields, polynomials, parsing and kernels."""

from .field import QQ, FieldElement, FieldSpec, is_prime
from .linalg import (
    Echelon,
    ExactMatrix,
    LaurentMatrix,
    laurent_det,
    rank,
    rank_by_elimination,
    row_reduce,
    solve_kernel,
)
from .mpoly import MPoly
from .parse import parse_poly, parse_univariate, tokenize
from .poly1 import LaurentPoly, Poly1, RatFunc, gcd, squarefree_coprime_check, xgcd

__all__ = [
    "QQ", "FieldElement", "FieldSpec", "is_prime",
    "Echelon", "ExactMatrix", "LaurentMatrix", "laurent_det", "rank",
    "rank_by_elimination", "row_reduce", "solve_kernel",
    "MPoly", "parse_poly", "parse_univariate", "tokenize",
    "LaurentPoly", "Poly1", "RatFunc", "gcd", "squarefree_coprime_check", "xgcd",
]
