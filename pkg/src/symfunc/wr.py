"""
The symmetric functions W_r, their pairing with power sums, Schur positivity, and
the degreewise check that W_1, W_2, ... generate the ring.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Dict, List, Optional

import sympy
from sympy.utilities.iterables import multiset_permutations

from src.combinatorics import Partition, multinomial, partitions_of
from src.symfunc.bernoulli import bernoulli
from src.symfunc.symfunc import SymFunc, convert, fraction_text, hall_pair, power_sum, to_power
from src.utils.constants import MAX_SYMFUNC_DEGREE
from src.utils.errors import InvalidArgument, TooLarge

logger = logging.getLogger(__name__)


def _check_degree(r: int) -> None:
    if r < 0:
        raise InvalidArgument(f"degree must be >= 0, got {r}")
    if r > MAX_SYMFUNC_DEGREE:
        raise TooLarge(f"degree {r} exceeds the bound {MAX_SYMFUNC_DEGREE}")


def w_r(r: int) -> SymFunc:
    """W_r = sum over partitions π of r of binom(2r; 2π) m_π."""
    _check_degree(r)
    return SymFunc(
        "m", {lam: multinomial(2 * r, [2 * p for p in lam]) for lam in partitions_of(r)}
    )


def _monomial_polynomial(lam: Partition, variables: List[sympy.Symbol]) -> sympy.Expr:
    exponents = list(lam) + [0] * (len(variables) - len(lam))
    return sympy.Add(
        *(
            sympy.Mul(*(v**e for v, e in zip(variables, perm)))
            for perm in multiset_permutations(exponents)
        )
    )


def w_r_oracle(r: int, variables: int) -> bool:
    """
    Compare w_r(r) in finitely many variables with 2^{-n} Σ_ς (Σ ς_i √x_i)^{2r}.

    Both sides are expanded with x_i = y_i² so the square roots become plain variables.
    """
    ys = list(sympy.symbols(f"y1:{variables + 1}"))
    expansions = [
        sympy.expand(sum(s * y for s, y in zip(signs, ys)) ** (2 * r))
        for signs in product((1, -1), repeat=variables)
    ]
    direct = sympy.Add(*expansions) / 2**variables
    squares = [y**2 for y in ys]
    from_monomials = sympy.Add(
        *(
            sympy.Rational(c.numerator, c.denominator) * _monomial_polynomial(lam, squares)
            for lam, c in w_r(r).coeffs.items()
            if len(lam) <= variables
        )
    )
    return sympy.expand(direct - from_monomials) == 0


@dataclass(frozen=True)
class PairingRecord:
    """
    <W_r, p_r> next to the closed-form magnitude 2^{2r-1}(2^{2r}-1)|B_{2r}|.

    ``sign_agrees`` compares against -2^{2r-1}(2^{2r}-1)B_{2r}; it is recorded, not asserted.
    """

    r: int
    computed: Fraction
    magnitude: Fraction
    sign_agrees: bool

    @property
    def passed(self) -> bool:
        return self.computed != 0 and abs(self.computed) == self.magnitude

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "computed": fraction_text(self.computed),
            "magnitude": fraction_text(self.magnitude),
            "signAgrees": self.sign_agrees,
            "passed": self.passed,
        }


def pairing_check(r: int) -> PairingRecord:
    if r < 1:
        raise InvalidArgument(f"pairing check needs r >= 1, got {r}")
    computed = hall_pair(w_r(r), power_sum(r))
    closed_form = -Fraction(2 ** (2 * r - 1) * (2 ** (2 * r) - 1)) * bernoulli(2 * r)
    record = PairingRecord(r, computed, abs(closed_form), computed == closed_form)
    if not record.passed:
        logger.error(f"<W_{r}, p_{r}> = {computed} but expected magnitude {record.magnitude}")
    return record


@dataclass(frozen=True)
class PositivityRow:
    r: int
    schur: SymFunc
    all_nonnegative: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "schur": self.schur.to_dict()["coeffs"],
            "allNonnegative": self.all_nonnegative,
        }


def schur_positivity_scan(max_r: int) -> List[PositivityRow]:
    """Schur expansions of W_1..W_max_r, flagging any negative coefficient."""
    _check_degree(max_r)
    rows = []
    for r in range(1, max_r + 1):
        schur = convert(w_r(r), "s")
        nonnegative = all(c >= 0 for c in schur.coeffs.values())
        if not nonnegative:
            logger.warning(f"W_{r} has a negative Schur coefficient: {schur}")
        rows.append(PositivityRow(r, schur, nonnegative))
    return rows


@dataclass(frozen=True)
class GenerationStep:
    """p_r written as a polynomial in W_1..W_r, one coefficient per product W_λ."""

    r: int
    solution: Optional[Dict[Partition, Fraction]]

    @property
    def solved(self) -> bool:
        return self.solution is not None

    def expression(self) -> str:
        if self.solution is None:
            return "singular"
        pieces = []
        for lam in sorted(self.solution, key=lambda k: [-p for p in k]):
            coeff = self.solution[lam]
            factors = "*".join(
                f"W{part}" if count == 1 else f"W{part}^{count}"
                for part, count in sorted(lam.multiplicities().items(), reverse=True)
            )
            magnitude = abs(coeff)
            body = factors if magnitude == 1 else f"{fraction_text(magnitude)}*{factors}"
            pieces.append(("-" if coeff < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_dict(self) -> Dict[str, Any]:
        return {"r": self.r, "solved": self.solved, "p_r": self.expression()}


def generation_solver(max_r: int) -> List[GenerationStep]:
    """
    Solve p_r = Σ_λ c_λ W_λ over partitions λ of r, for each r up to max_r.

    A unique solution in every degree certifies that the W_r generate degreewise.
    """
    _check_degree(max_r)
    w_power = {r: to_power(w_r(r)) for r in range(1, max_r + 1)}
    steps = []
    for r in range(1, max_r + 1):
        shapes = partitions_of(r)
        index = {lam: k for k, lam in enumerate(shapes)}
        columns = []
        for lam in shapes:
            term = SymFunc.single("p", ())
            for part in lam:
                term = term * SymFunc("p", w_power[part])
            columns.append(term.coeffs)
        matrix = sympy.zeros(len(shapes), len(shapes))
        for j, column in enumerate(columns):
            for mu, value in column.items():
                matrix[index[mu], j] = sympy.Rational(value.numerator, value.denominator)
        target = sympy.zeros(len(shapes), 1)
        target[index[Partition((r,))], 0] = 1
        if matrix.rank() < len(shapes):
            logger.error(f"W products of degree {r} are linearly dependent")
            steps.append(GenerationStep(r, None))
            continue
        solved = matrix.LUsolve(target)
        solution = {}
        for lam, value in zip(shapes, solved):
            rational = sympy.Rational(value)
            if rational != 0:
                solution[lam] = Fraction(int(rational.p), int(rational.q))
        steps.append(GenerationStep(r, solution))
    return steps
