"""
Tests for exactnum: the cyclotomic field and rational functions in d and D.
"""

import random
from fractions import Fraction

import pytest

from src.exactnum import (
    D_PARAM,
    I,
    INV_SQRT2,
    ONE,
    SQRT2,
    ZETA,
    CycloScalar,
    DivisionByZero,
    EvaluationPole,
    ParamScalar,
    cyclo_arith,
    d_PARAM,
    param_arith,
    param_eval,
)


def _random_cyclo(rng: random.Random) -> CycloScalar:
    return CycloScalar(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4))


class TestCycloScalar:
    """Test suite for CycloScalar."""

    def test_sqrt2_squares_to_two(self):
        """Test that sqrt(2)^2 is exactly 2."""
        assert SQRT2 * SQRT2 == 2

    def test_i_squares_to_minus_one(self):
        """Test that zeta^2 squared is -1."""
        assert I * I == -1
        assert cyclo_arith(I, I, "mul") == CycloScalar.of(-1)

    def test_inverse_of_zeta(self):
        """Test inv(zeta) = -zeta^3."""
        assert cyclo_arith(ZETA, ZETA, "inv") == CycloScalar((0, 0, 0, -1))

    def test_inverse_sqrt2(self):
        """Test the stored 1/sqrt(2) constant."""
        assert INV_SQRT2 * SQRT2 == ONE

    def test_inverse_of_zero_raises(self):
        """Test that inverting zero raises DivisionByZero."""
        with pytest.raises(DivisionByZero):
            CycloScalar().inv()
        with pytest.raises(ZeroDivisionError):
            ONE / 0

    def test_conj_is_inverse_on_roots_of_unity(self):
        """Test that conj(zeta) = zeta^-1."""
        assert ZETA.conj() * ZETA == ONE
        assert cyclo_arith(I, I, "conj") == -I

    def test_random_field_axioms(self):
        """Test associativity, inverses and conjugation on random elements."""
        rng = random.Random(8)
        for _ in range(200):
            a, b, c = (_random_cyclo(rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a.conj().conj() == a
            if not a.is_zero():
                assert a * a.inv() == ONE

    def test_text_form(self):
        """Test the printable power-basis form and parsing it back."""
        value = CycloScalar((Fraction(1, 2), -1, 0, 3))
        assert str(value) == "1/2 - z + 3*z^3"
        assert CycloScalar.parse(str(value)) == value
        assert str(CycloScalar()) == "0"

    def test_rational_values_hash_like_fractions(self):
        """Test that rational scalars are interchangeable with Fractions as keys."""
        table = {Fraction(3, 2): "x"}
        assert table[CycloScalar.of(Fraction(3, 2))] == "x"
        assert CycloScalar.of(Fraction(3, 2)).to_fraction() == Fraction(3, 2)

    def test_unknown_operation(self):
        """Test that an unknown operation name is rejected."""
        with pytest.raises(ValueError):
            cyclo_arith(ONE, ONE, "pow")


class TestParamScalar:
    """Test suite for ParamScalar."""

    def test_falling_factorial_evaluates(self):
        """Test eval(d(d-1)) at d=4."""
        value = d_PARAM * (d_PARAM - 1)
        assert param_eval(value, 4, 0) == 12

    def test_gcd_normalization(self):
        """Test (d^2 - d)/(d - 1) reduces to d."""
        value = param_arith(d_PARAM * d_PARAM - d_PARAM, d_PARAM - 1, "div")
        assert value == d_PARAM
        assert str(value) == "d"

    def test_pole(self):
        """Test that 1/(d-3) has a pole at d=3."""
        value = ParamScalar(1) / (d_PARAM - 3)
        with pytest.raises(EvaluationPole):
            value.evaluate(3, 1)
        assert value.evaluate(5, 1) == Fraction(1, 2)

    def test_print_order(self):
        """Test degree-lex printing with d before D."""
        value = d_PARAM**3 - 3 * d_PARAM**2 + 2 * d_PARAM
        assert str(value) == "d^3 - 3*d^2 + 2*d"
        assert str(D_PARAM * d_PARAM + D_PARAM) == "d*D + D"

    def test_evaluation_is_a_homomorphism(self):
        """Test that evaluation commutes with arithmetic away from poles."""
        rng = random.Random(3)
        for _ in range(25):
            monomial = (rng.randint(0, 2), rng.randint(0, 2))
            a = ParamScalar.from_terms({monomial: rng.randint(-4, 4)}) + 1
            b = d_PARAM + rng.randint(-3, 3) * D_PARAM + 7
            d0, D0 = rng.randint(-3, 3), rng.randint(-3, 3)
            try:
                b_value = b.evaluate(d0, D0)
            except EvaluationPole:
                continue
            a_value = a.evaluate(d0, D0)
            expected = {"add": a_value + b_value, "sub": a_value - b_value, "mul": a_value * b_value}
            for op, value in expected.items():
                assert param_arith(a, b, op).evaluate(d0, D0) == value

    def test_constants_compare_with_ints(self):
        """Test that constant functions equal plain integers."""
        assert ParamScalar(2) == 2
        assert (D_PARAM - D_PARAM).is_zero()
        assert ParamScalar.from_terms({}) == 0

    def test_inverse_of_zero_function_raises(self):
        """Test that inverting or dividing by the zero function raises DivisionByZero."""
        with pytest.raises(DivisionByZero):
            ParamScalar(0).inv()
        with pytest.raises(DivisionByZero):
            d_PARAM / (D_PARAM - D_PARAM)
        with pytest.raises(DivisionByZero):
            (d_PARAM - d_PARAM) ** -1

    def test_constants_hash_like_ints(self):
        """Test that constant functions are interchangeable with ints and Fractions as keys."""
        assert hash(ParamScalar(1)) == hash(1)
        assert hash(ParamScalar(Fraction(3, 2))) == hash(Fraction(3, 2))
        table = {1: "one", Fraction(1, 2): "half"}
        assert table[ParamScalar(1)] == "one"
        assert table[ParamScalar(Fraction(1, 2))] == "half"
        assert len({d_PARAM - 1, d_PARAM - 1, ParamScalar(2)}) == 2
