"""Exact arithmetic foundation: rationals, cyclotomic fields, finite
fields, sparse multivariate polynomials, and matrices over any of
these."""

from .cyclotomic import Cyc, CycField, cyc_field, gauss_sum_i7, zeta
from .finitefield import FFElem, FiniteField
from .matrix import Mat
from .multipoly import MultiPoly

__all__ = [
    "Cyc",
    "CycField",
    "cyc_field",
    "zeta",
    "gauss_sum_i7",
    "FiniteField",
    "FFElem",
    "Mat",
    "MultiPoly",
]
