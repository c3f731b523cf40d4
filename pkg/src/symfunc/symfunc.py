"""Symmetric functions over Q in the m, h, p and s bases."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Union

from src.combinatorics import Partition, partitions_of, z_of
from src.symfunc.tables import (
    Coeffs,
    add_scaled,
    h_power,
    kostka,
    m_power,
    power_product,
    s_power,
)
from src.utils.constants import MAX_SYMFUNC_DEGREE
from src.utils.errors import InvalidArgument, TooLarge

logger = logging.getLogger(__name__)

BASES = ("m", "h", "p", "s")


def fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class SymFunc:
    """
    Finite linear combination of basis functions indexed by partitions.

    Attributes:
        basis: One of "m", "h", "p", "s".
        coeffs: Nonzero rational coefficient per partition.
    """

    basis: str
    coeffs: Dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.basis not in BASES:
            raise InvalidArgument(f"unknown basis {self.basis!r}; expected one of {BASES}")
        cleaned = {Partition(k): Fraction(v) for k, v in self.coeffs.items() if v}
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def single(cls, basis: str, parts: Iterable[int], coeff: Union[Fraction, int] = 1) -> "SymFunc":
        return cls(basis, {Partition(parts): Fraction(coeff)})

    @property
    def degree(self) -> int:
        return max((lam.weight for lam in self.coeffs), default=0)

    @property
    def is_homogeneous(self) -> bool:
        return len({lam.weight for lam in self.coeffs}) <= 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "SymFunc") -> "SymFunc":
        other = convert(other, self.basis)
        out = dict(self.coeffs)
        add_scaled(out, other.coeffs, Fraction(1))
        return SymFunc(self.basis, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, factor: Union[Fraction, int]) -> "SymFunc":
        return SymFunc(self.basis, {k: v * factor for k, v in self.coeffs.items()})

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        product = power_product(to_power(self), to_power(other))
        return convert(SymFunc("p", product), self.basis)

    def __pow__(self, exponent: int) -> "SymFunc":
        result = SymFunc.single(self.basis, ())
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = convert(other, self.basis)
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.basis, tuple(sorted(self.coeffs.items()))))

    def terms(self) -> List[Partition]:
        """Partitions in display order: by weight, then reverse lexicographic."""
        return sorted(self.coeffs, key=lambda lam: (lam.weight, [-p for p in lam]))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for lam in self.terms():
            coeff = self.coeffs[lam]
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            body = f"{self.basis}{lam}" if magnitude == 1 else f"{fraction_text(magnitude)}*{self.basis}{lam}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_dict(self) -> Dict[str, Any]:
        return {
            "basis": self.basis,
            "coeffs": {str(lam): fraction_text(self.coeffs[lam]) for lam in self.terms()},
        }


def _guard(f: SymFunc) -> None:
    if f.degree > MAX_SYMFUNC_DEGREE:
        raise TooLarge(f"degree {f.degree} exceeds the bound {MAX_SYMFUNC_DEGREE}")


def to_power(f: SymFunc) -> Coeffs:
    """Coefficients of f in the power-sum basis."""
    if f.basis == "p":
        return dict(f.coeffs)
    table = {"h": h_power, "m": m_power, "s": s_power}[f.basis]
    out: Coeffs = {}
    for lam, coeff in f.coeffs.items():
        add_scaled(out, table(lam), coeff)
    return out


def _pair_power(a: Coeffs, b: Coeffs) -> Fraction:
    return sum((x * b[lam] * z_of(lam) for lam, x in a.items() if lam in b), Fraction(0))


def _weights(f: SymFunc) -> List[int]:
    return sorted({lam.weight for lam in f.coeffs})


def _inverse_kostka(monomial: Coeffs, weight: int) -> Coeffs:
    """Schur coefficients from monomial ones by the unitriangular Kostka solve."""
    out: Coeffs = {}
    for lam in reversed(partitions_of(weight)):
        value = monomial.get(lam, Fraction(0))
        for nu, c in out.items():
            value -= c * kostka(nu, lam)
        if value:
            out[lam] = value
    return out


def convert(f: SymFunc, target: str) -> SymFunc:
    """
    Re-express f in the target basis.

    Dual bases read off coefficients through the Hall pairing: the h-coefficients of f
    are its pairings with m, the m-coefficients its pairings with h.

    Raises:
        InvalidArgument: For an unknown basis.
        TooLarge: Above the degree bound.
    """
    if target not in BASES:
        raise InvalidArgument(f"unknown basis {target!r}; expected one of {BASES}")
    _guard(f)
    if f.basis == target:
        return f
    if target == "p":
        return SymFunc("p", to_power(f))
    if target == "m" and f.basis == "s":
        out: Coeffs = {}
        for lam, coeff in f.coeffs.items():
            for mu in partitions_of(lam.weight):
                count = kostka(lam, mu)
                if count:
                    add_scaled(out, {mu: Fraction(count)}, coeff)
        return SymFunc("m", out)
    power = to_power(f)
    if target == "s":
        monomial = convert(f, "m").coeffs
        out = {}
        for weight in _weights(f):
            piece = {lam: c for lam, c in monomial.items() if lam.weight == weight}
            out.update(_inverse_kostka(piece, weight))
        return SymFunc("s", out)
    dual = h_power if target == "m" else m_power
    out = {}
    for weight in _weights(f):
        for mu in partitions_of(weight):
            value = _pair_power(power, dual(mu))
            if value:
                out[mu] = value
    return SymFunc(target, out)


def hall_pair(f: SymFunc, g: SymFunc) -> Fraction:
    """
    Hall inner product, computed in the power-sum basis with <p_λ, p_μ> = δ z_λ.

    Raises:
        InvalidArgument: When f and g are not homogeneous of the same degree.
    """
    if not (f.is_homogeneous and g.is_homogeneous):
        raise InvalidArgument("the Hall pairing needs homogeneous arguments")
    if f.coeffs and g.coeffs and f.degree != g.degree:
        raise InvalidArgument(f"degree mismatch in Hall pairing: {f.degree} vs {g.degree}")
    _guard(f)
    _guard(g)
    return _pair_power(to_power(f), to_power(g))


def power_sum(r: int) -> SymFunc:
    return SymFunc.single("p", (r,))
