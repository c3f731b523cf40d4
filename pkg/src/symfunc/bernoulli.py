"""Bernoulli numbers and the tanh series they produce."""

import logging
from fractions import Fraction
from math import factorial
from typing import List

import sympy

from src.utils.errors import InvalidArgument

logger = logging.getLogger(__name__)


def _to_fraction(value: sympy.Expr) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


class BernoulliCache:
    """
    B_0, B_1, ... as exact rationals, with the convention B_1 = -1/2.

    Attributes:
        values: The numbers computed so far, indexed by k.
    """

    def __init__(self) -> None:
        self.values: List[Fraction] = [Fraction(1), Fraction(-1, 2)]

    def get(self, k: int) -> Fraction:
        if k < 0:
            raise InvalidArgument(f"Bernoulli index must be >= 0, got {k}")
        while len(self.values) <= k:
            index = len(self.values)
            self.values.append(_to_fraction(sympy.bernoulli(index)))
        return self.values[k]


BERNOULLI = BernoulliCache()


def bernoulli(k: int) -> Fraction:
    return BERNOULLI.get(k)


def tanh_coefficients(max_r: int) -> List[Fraction]:
    """Coefficients of x^{2r-1}, r = 1..max_r, of sum 2^{2r}(2^{2r}-1) B_{2r} x^{2r-1}/(2r)!."""
    return [
        Fraction(2 ** (2 * r) * (2 ** (2 * r) - 1)) * bernoulli(2 * r) / factorial(2 * r)
        for r in range(1, max_r + 1)
    ]


def tanh_check(max_r: int = 3) -> bool:
    """
    Compare the Bernoulli series against the Taylor expansion of tanh.

    Returns:
        bool: True when all coefficients up to x^{2 max_r - 1} agree.
    """
    if max_r < 1:
        raise InvalidArgument(f"tanh check needs max_r >= 1, got {max_r}")
    x = sympy.Symbol("x")
    series = sympy.series(sympy.tanh(x), x, 0, 2 * max_r).removeO()
    expected = [_to_fraction(series.coeff(x, 2 * r - 1)) for r in range(1, max_r + 1)]
    computed = tanh_coefficients(max_r)
    if computed != expected:
        logger.error(f"tanh series mismatch: {computed} vs {expected}")
    return computed == expected
