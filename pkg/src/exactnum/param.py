"""Rational functions in the formal parameters d and D."""

from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

import sympy
from sympy import Poly, QQ

from src.exactnum.cyclo import CycloScalar, DivisionByZero, Scalar

d_sym, D_sym = sympy.symbols("d D")
GENS = (d_sym, D_sym)

Monomial = Tuple[int, int]
PolyDict = Dict[Monomial, Fraction]


class EvaluationPole(ArithmeticError):
    """Raised when a parameter specialization hits a zero of the denominator."""

    pass


def _poly(data: Union[PolyDict, Fraction, int, sympy.Expr]) -> Poly:
    if isinstance(data, dict):
        expr = sum(
            (
                sympy.Rational(c.numerator, c.denominator) * d_sym**i * D_sym**j
                for (i, j), c in data.items()
            ),
            sympy.Integer(0),
        )
        return Poly(expr, *GENS, domain=QQ)
    if isinstance(data, Fraction):
        return Poly(sympy.Rational(data.numerator, data.denominator), *GENS, domain=QQ)
    return Poly(data, *GENS, domain=QQ)


def _to_fraction(coeff: sympy.Rational) -> Fraction:
    rational = sympy.Rational(coeff)
    return Fraction(int(rational.p), int(rational.q))


def _monomial_key(monomial: Monomial) -> Tuple[int, int]:
    # degree-lex with d before D
    return (-(monomial[0] + monomial[1]), -monomial[0])


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_poly(terms: PolyDict) -> str:
    if not terms:
        return "0"
    pieces = []
    for monomial in sorted(terms, key=_monomial_key):
        coeff = terms[monomial]
        i, j = monomial
        factors = []
        if i:
            factors.append("d" if i == 1 else f"d^{i}")
        if j:
            factors.append("D" if j == 1 else f"D^{j}")
        magnitude = abs(coeff)
        if not factors:
            body = _format_fraction(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_fraction(magnitude)] + factors)
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


class ParamScalar:
    """
    Reduced fraction num/den of polynomials in d, D over Q.

    Constants skip sympy entirely; polynomials are normalized by gcd and by making the
    grlex-leading coefficient of the denominator equal to 1.
    """

    __slots__ = ("_const", "_num", "_den")

    def __init__(
        self,
        value: Union[Fraction, int, None] = None,
        num: Optional[Poly] = None,
        den: Optional[Poly] = None,
    ) -> None:
        self._const: Optional[Fraction] = None
        self._num: Optional[Poly] = None
        self._den: Optional[Poly] = None
        if num is None:
            self._const = Fraction(0 if value is None else value)
            return
        if den is None:
            den = _poly(1)
        if den.is_zero:
            raise EvaluationPole("ParamScalar with identically zero denominator")
        self._set_reduced(num, den)

    def _set_reduced(self, num: Poly, den: Poly) -> None:
        if num.is_zero:
            self._const = Fraction(0)
            return
        g = num.gcd(den)
        if not g.is_one:
            num = num.exquo(g)
            den = den.exquo(g)
        lead = den.LC(order="grlex")
        if lead != 1:
            scale = _poly(1 / sympy.Rational(lead))
            num = num * scale
            den = den * scale
        if num.is_ground and den.is_ground:
            self._const = _to_fraction(num.LC()) / _to_fraction(den.LC())
            return
        self._num = num
        self._den = den

    @classmethod
    def of(cls, value: Union["ParamScalar", Fraction, int]) -> "ParamScalar":
        if isinstance(value, ParamScalar):
            return value
        return cls(value)

    @classmethod
    def from_terms(cls, terms: PolyDict) -> "ParamScalar":
        """Build a polynomial from a {(deg_d, deg_D): coefficient} dictionary."""
        nonzero = {m: Fraction(c) for m, c in terms.items() if c}
        if not nonzero:
            return cls(0)
        if set(nonzero) == {(0, 0)}:
            return cls(nonzero[(0, 0)])
        return cls(num=_poly(nonzero))

    @property
    def is_constant(self) -> bool:
        return self._const is not None

    def constant(self) -> Fraction:
        if self._const is None:
            raise ValueError(f"{self} is not constant")
        return self._const

    def is_zero(self) -> bool:
        return self._const is not None and self._const == 0

    def _parts(self) -> Tuple[Poly, Poly]:
        if self._const is not None:
            return _poly(self._const), _poly(1)
        return self._num, self._den

    def numerator_terms(self) -> PolyDict:
        num, _ = self._parts()
        return {m: _to_fraction(c) for m, c in num.terms()}

    def denominator_terms(self) -> PolyDict:
        _, den = self._parts()
        return {m: _to_fraction(c) for m, c in den.terms()}

    def __add__(self, other: Union["ParamScalar", Fraction, int]) -> "ParamScalar":
        o = ParamScalar.of(other)
        if self._const is not None and o._const is not None:
            return ParamScalar(self._const + o._const)
        a_num, a_den = self._parts()
        b_num, b_den = o._parts()
        if a_den == b_den:
            return ParamScalar(num=a_num + b_num, den=a_den)
        return ParamScalar(num=a_num * b_den + b_num * a_den, den=a_den * b_den)

    __radd__ = __add__

    def __neg__(self) -> "ParamScalar":
        if self._const is not None:
            return ParamScalar(-self._const)
        return ParamScalar(num=-self._num, den=self._den)

    def __sub__(self, other: Union["ParamScalar", Fraction, int]) -> "ParamScalar":
        return self + (-ParamScalar.of(other))

    def __rsub__(self, other: Union["ParamScalar", Fraction, int]) -> "ParamScalar":
        return ParamScalar.of(other) - self

    def __mul__(self, other: Union["ParamScalar", Fraction, int]) -> "ParamScalar":
        o = ParamScalar.of(other)
        if self._const is not None and o._const is not None:
            return ParamScalar(self._const * o._const)
        if o._const is not None:
            if o._const == 0:
                return ParamScalar(0)
            return ParamScalar(num=self._num * _poly(o._const), den=self._den)
        if self._const is not None:
            return o * self
        return ParamScalar(num=self._num * o._num, den=self._den * o._den)

    __rmul__ = __mul__

    def inv(self) -> "ParamScalar":
        if self.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        if self._const is not None:
            return ParamScalar(1 / self._const)
        return ParamScalar(num=self._den, den=self._num)

    def __truediv__(self, other: Union["ParamScalar", Fraction, int]) -> "ParamScalar":
        return self * ParamScalar.of(other).inv()

    def __rtruediv__(self, other: Union["ParamScalar", Fraction, int]) -> "ParamScalar":
        return ParamScalar.of(other) * self.inv()

    def __pow__(self, exponent: int) -> "ParamScalar":
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = ParamScalar(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._const is not None and self._const == other
        if not isinstance(other, ParamScalar):
            return NotImplemented
        if self._const is not None or other._const is not None:
            return self._const == other._const
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self._const is not None:
            return hash(self._const)
        return hash(str(self))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def evaluate(self, d0: Scalar, D0: Scalar) -> CycloScalar:
        """
        Specialize d and D.

        Args:
            d0: Value substituted for d.
            D0: Value substituted for D.

        Returns:
            CycloScalar: The specialized value.

        Raises:
            EvaluationPole: When the denominator vanishes at (d0, D0).
        """
        if self._const is not None:
            return CycloScalar.of(self._const)
        d_val = CycloScalar.of(d0)
        D_val = CycloScalar.of(D0)
        den = _evaluate_terms(self.denominator_terms(), d_val, D_val)
        if den.is_zero():
            raise EvaluationPole(f"denominator of {self} vanishes at d={d_val}, D={D_val}")
        return _evaluate_terms(self.numerator_terms(), d_val, D_val) / den

    def __str__(self) -> str:
        if self._const is not None:
            return _format_fraction(self._const)
        num = _format_poly(self.numerator_terms())
        den_terms = self.denominator_terms()
        if den_terms == {(0, 0): Fraction(1)}:
            return num
        den = _format_poly(den_terms)
        if len(self._num.terms()) > 1:
            num = f"({num})"
        if len(den_terms) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"ParamScalar({self})"


def _evaluate_terms(terms: PolyDict, d_val: CycloScalar, D_val: CycloScalar) -> CycloScalar:
    total = CycloScalar.of(0)
    for (i, j), coeff in terms.items():
        total = total + (d_val**i) * (D_val**j) * coeff
    return total


def param_arith(
    a: ParamScalar, b: Union[ParamScalar, Fraction, int], op: str
) -> ParamScalar:
    """
    Dispatch a named operation on rational functions.

    Args:
        a: Left operand.
        b: Right operand.
        op: One of add, sub, mul, div.

    Returns:
        ParamScalar: The reduced result.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown parameter operation: {op}")


def param_eval(a: ParamScalar, d0: Scalar, D0: Scalar) -> CycloScalar:
    """Specialize a ParamScalar at (d0, D0)."""
    return a.evaluate(d0, D0)


D_PARAM = ParamScalar.from_terms({(0, 1): Fraction(1)})
d_PARAM = ParamScalar.from_terms({(1, 0): Fraction(1)})
