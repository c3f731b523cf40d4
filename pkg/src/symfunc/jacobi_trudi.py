"""Schur functions as Jacobi–Trudi determinants in the complete symmetric functions."""

from fractions import Fraction
from typing import Dict, List

import sympy

from src.combinatorics import Partition
from src.symfunc.symfunc import SymFunc
from src.utils.constants import JACOBI_TRUDI_MAX_DEGREE
from src.utils.errors import TooLarge


def jacobi_trudi(lam: Partition) -> SymFunc:
    """
    s_lam = det(h_{lam_i - i + j}) expanded in the h basis.

    Raises:
        TooLarge: From degree JACOBI_TRUDI_MAX_DEGREE on.
    """
    lam = Partition(lam)
    if lam.weight >= JACOBI_TRUDI_MAX_DEGREE:
        raise TooLarge(f"Jacobi-Trudi expansion is limited to degree < {JACOBI_TRUDI_MAX_DEGREE}")
    if not lam:
        return SymFunc.single("h", ())
    symbols: List[sympy.Symbol] = list(sympy.symbols(f"h1:{lam.weight + 1}"))

    def h(k: int) -> sympy.Expr:
        if k < 0:
            return sympy.Integer(0)
        if k == 0:
            return sympy.Integer(1)
        return symbols[k - 1]

    size = len(lam)
    matrix = sympy.Matrix(size, size, lambda i, j: h(lam[i] - i + j))
    poly = sympy.Poly(sympy.expand(matrix.det()), *symbols)
    coeffs: Dict[Partition, Fraction] = {}
    for exponents, coeff in poly.terms():
        parts = []
        for k in range(len(exponents), 0, -1):
            parts.extend([k] * exponents[k - 1])
        rational = sympy.Rational(coeff)
        coeffs[Partition(parts)] = Fraction(int(rational.p), int(rational.q))
    return SymFunc("h", coeffs)
