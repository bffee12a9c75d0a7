"""Exact arithmetic: cyclotomic scalars, matrices, polynomials, Jordan data."""

from .scalar import NotRepresentable, Scalar, parse_scalar, format_scalar
from .matrix import Matrix, commutant_basis, extend_basis, in_span, span_rank
from .polynomial import Polynomial
from .jordan import NotNilpotent, jordan_blocks, jordan_chains, jordan_data, nilpotent_rank_profile


def char_poly(m: Matrix) -> Polynomial:
    return m.char_poly()


def rank(m: Matrix) -> int:
    return m.rank()


__all__ = [
    "Matrix",
    "NotNilpotent",
    "NotRepresentable",
    "Polynomial",
    "Scalar",
    "char_poly",
    "commutant_basis",
    "extend_basis",
    "format_scalar",
    "in_span",
    "jordan_blocks",
    "jordan_chains",
    "jordan_data",
    "nilpotent_rank_profile",
    "parse_scalar",
    "rank",
    "span_rank",
]
