"""Exact scalars: rationals, cyclotomic numbers, Laurent polynomials,
rational functions and a formal square-root extension."""

from __future__ import annotations

from .cyclotomic import Cyclotomic, Rational, cyc_inv, cyclotomic_polynomial, is_rational_scalar, phi_degree
from .parse import ParseError, parse_scalar
from .poly import (
    PARAMS,
    LaurentPoly,
    RatFun,
    as_ratfun,
    framing_symbol,
    is_scalar,
    ratfun_eq,
    substitute,
    sym,
    symbol_index,
)
from .sqrtext import RadicandMismatch, SqrtExt, sqrtext_mul, sqrtext_pow

__all__ = [
    "PARAMS",
    "Cyclotomic",
    "LaurentPoly",
    "ParseError",
    "RadicandMismatch",
    "RatFun",
    "Rational",
    "SqrtExt",
    "as_ratfun",
    "cyc_inv",
    "cyclotomic_polynomial",
    "framing_symbol",
    "is_rational_scalar",
    "is_scalar",
    "parse_scalar",
    "phi_degree",
    "ratfun_eq",
    "sqrtext_mul",
    "sqrtext_pow",
    "substitute",
    "sym",
    "symbol_index",
]
