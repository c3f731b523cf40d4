"""Exact arithmetic in the cyclotomic field Q(zeta_8)."""

import re
from fractions import Fraction
from typing import Iterable, Tuple, Union

Rational = Fraction
Scalar = Union["CycloScalar", Fraction, int]

# Galois automorphisms of Q(zeta_8) act by zeta -> zeta^k for odd k.
_GALOIS_EXPONENTS = (3, 5, 7)

_TERM_PATTERN = re.compile(
    r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(?:\*?\s*(z)(?:\^([123]))?)?\s*"
)


class DivisionByZero(ZeroDivisionError):
    """Raised when inverting the zero element of an exact field."""

    pass


def _power_of_zeta(exponent: int) -> Tuple[int, int]:
    """Reduce zeta^exponent to (sign, index) with index in 0..3."""
    exponent %= 8
    if exponent >= 4:
        return -1, exponent - 4
    return 1, exponent


class CycloScalar:
    """
    Element a0 + a1*z + a2*z^2 + a3*z^3 of Q(z) with z^4 = -1.

    The representation over the power basis is unique, so equality and hashing
    compare coefficient tuples. Values with a1 = a2 = a3 = 0 hash like the
    corresponding Fraction, which keeps them interchangeable with plain rationals
    as dictionary keys.
    """

    __slots__ = ("coeffs", "_rational")

    def __init__(self, coeffs: Iterable[Union[Fraction, int]] = (0, 0, 0, 0)) -> None:
        values = tuple(Fraction(c) for c in coeffs)
        if len(values) != 4:
            raise ValueError(f"CycloScalar needs 4 coefficients, got {len(values)}")
        self.coeffs: Tuple[Fraction, Fraction, Fraction, Fraction] = values
        self._rational: bool = not (values[1] or values[2] or values[3])

    @classmethod
    def of(cls, value: Scalar) -> "CycloScalar":
        """Coerce an int, Fraction or CycloScalar."""
        if isinstance(value, CycloScalar):
            return value
        return cls((value, 0, 0, 0))

    @classmethod
    def parse(cls, text: str) -> "CycloScalar":
        """Parse the textual form produced by __str__."""
        text = text.strip()
        if not text:
            raise ValueError("empty cyclotomic literal")
        coeffs = [Fraction(0)] * 4
        pos = 0
        while pos < len(text):
            match = _TERM_PATTERN.match(text, pos)
            if match is None or match.end() == pos:
                raise ValueError(f"cannot parse cyclotomic literal: {text!r}")
            sign, number, zeta, power = match.groups()
            if number is None and zeta is None:
                raise ValueError(f"cannot parse cyclotomic literal: {text!r}")
            value = Fraction(number) if number is not None else Fraction(1)
            if sign == "-":
                value = -value
            index = 0 if zeta is None else int(power or 1)
            coeffs[index] += value
            pos = match.end()
        return cls(coeffs)

    @property
    def is_rational(self) -> bool:
        return self._rational

    def is_zero(self) -> bool:
        return self._rational and not self.coeffs[0]

    def to_fraction(self) -> Fraction:
        """Return the rational value; raises ValueError if irrational."""
        if not self._rational:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __add__(self, other: Scalar) -> "CycloScalar":
        o = CycloScalar.of(other)
        if self._rational and o._rational:
            return CycloScalar((self.coeffs[0] + o.coeffs[0], 0, 0, 0))
        return CycloScalar(a + b for a, b in zip(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "CycloScalar":
        return CycloScalar(-a for a in self.coeffs)

    def __sub__(self, other: Scalar) -> "CycloScalar":
        return self + (-CycloScalar.of(other))

    def __rsub__(self, other: Scalar) -> "CycloScalar":
        return CycloScalar.of(other) - self

    def __mul__(self, other: Scalar) -> "CycloScalar":
        o = CycloScalar.of(other)
        if o._rational:
            c = o.coeffs[0]
            return CycloScalar(a * c for a in self.coeffs)
        if self._rational:
            c = self.coeffs[0]
            return CycloScalar(c * b for b in o.coeffs)
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if not b:
                    continue
                k = i + j
                if k >= 4:
                    out[k - 4] -= a * b
                else:
                    out[k] += a * b
        return CycloScalar(out)

    __rmul__ = __mul__

    def galois(self, exponent: int) -> "CycloScalar":
        """Apply the automorphism z -> z^exponent (exponent odd)."""
        if exponent % 2 == 0:
            raise ValueError("Galois exponent must be odd")
        out = [Fraction(0)] * 4
        for j, a in enumerate(self.coeffs):
            sign, index = _power_of_zeta(j * exponent)
            out[index] += sign * a
        return CycloScalar(out)

    def conj(self) -> "CycloScalar":
        """Complex conjugation, the automorphism z -> z^-1."""
        return self.galois(7)

    def inv(self) -> "CycloScalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(zeta_8)")
        if self._rational:
            return CycloScalar((1 / self.coeffs[0], 0, 0, 0))
        conjugates = self.galois(_GALOIS_EXPONENTS[0])
        for k in _GALOIS_EXPONENTS[1:]:
            conjugates = conjugates * self.galois(k)
        norm = self * conjugates
        # the field norm is rational
        return conjugates * (1 / norm.coeffs[0])

    def __truediv__(self, other: Scalar) -> "CycloScalar":
        return self * CycloScalar.of(other).inv()

    def __rtruediv__(self, other: Scalar) -> "CycloScalar":
        return CycloScalar.of(other) * self.inv()

    def __pow__(self, exponent: int) -> "CycloScalar":
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloScalar):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self._rational and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._rational:
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        parts = []
        for index, value in enumerate(self.coeffs):
            if not value:
                continue
            magnitude = abs(value)
            if index == 0:
                body = str(magnitude)
            else:
                zeta = "z" if index == 1 else f"z^{index}"
                body = zeta if magnitude == 1 else f"{magnitude}*{zeta}"
            sign = "-" if value < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"CycloScalar({self})"


ZERO = CycloScalar()
ONE = CycloScalar((1, 0, 0, 0))
ZETA = CycloScalar((0, 1, 0, 0))
I = CycloScalar((0, 0, 1, 0))
SQRT2 = CycloScalar((0, 1, 0, -1))
INV_SQRT2 = CycloScalar((0, Fraction(1, 2), 0, Fraction(-1, 2)))


def cyclo_arith(a: CycloScalar, b: CycloScalar, op: str) -> CycloScalar:
    """
    Dispatch a named field operation.

    Args:
        a: Left operand.
        b: Right operand (ignored by the unary ops inv and conj).
        op: One of add, mul, inv, conj.

    Returns:
        CycloScalar: The result.

    Raises:
        DivisionByZero: When inverting zero.
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "conj":
        return a.conj()
    raise ValueError(f"unknown cyclotomic operation: {op}")
