"""
Tests for the Clifford substrate: spin module, forms, so(V), quadratic operators and P.
"""

from fractions import Fraction

import pytest

from src.clifford import (
    ModuleWord,
    SoElement,
    SpinVec,
    VecV,
    casimir_value,
    clifford_act,
    dual_basis,
    e_operator,
    kappa,
    p_matrix,
    p_word,
    phi_S,
    phi_V,
    quadratic_ops,
    rho,
    root_basis,
    sigma,
    sign_lemma_check,
    so_act,
    so_basis,
    spin_generator,
    spin_rank,
    weyl_dimension,
)
from src.clifford.weights import spin_weight, vector_weight
from src.exactnum import ONE, CycloScalar
from src.linalg import LinearMap
from src.utils.errors import InvalidArgument, ShapeError


def _spin_basis(N):
    return [SpinVec(N, {mask: 1}) for mask in range(2 ** spin_rank(N))]


def _epsilons(N):
    return (1, -1) if N % 2 else (1,)


class TestCliffordAction:
    """Test suite for clifford_act and the fermionic generators."""

    def test_psi_dag_raises_empty_subset(self):
        """Test psi_1^dagger x_{} = x_{1} at N=2."""
        result = clifford_act(VecV.psi_dag(2, 1), SpinVec.basis(2))
        assert result == SpinVec.basis(2, [1])

    def test_odd_extra_vector(self):
        """Test e_3 x_{1} = -x_{1} at N=3, epsilon=+1."""
        result = clifford_act(VecV.basis(3, 3), SpinVec.basis(3, [1]), 1)
        assert result == SpinVec.basis(3, [1]).scale(-1)

    @pytest.mark.parametrize("N", [2, 3, 4, 5])
    def test_basis_vectors_square_to_one(self, N):
        """Test e_a e_a x = x on every basis spinor."""
        for epsilon in _epsilons(N):
            for a in range(1, N + 1):
                e = VecV.basis(N, a)
                for x in _spin_basis(N):
                    assert clifford_act(e, clifford_act(e, x, epsilon), epsilon) == x

    @pytest.mark.parametrize("N", [2, 4, 6, 7])
    def test_fermion_anticommutators(self, N):
        """Test psi_i psi_j^dagger + psi_j^dagger psi_i = delta_ij."""
        n = spin_rank(N)
        size = 2**n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                psi = spin_generator(N, 1, "psi", i)
                dag = spin_generator(N, 1, "psi_dag", j)
                expected = LinearMap.identity(size) if i == j else LinearMap.zero(size, size)
                assert psi @ dag + dag @ psi == expected

    def test_odd_generator_squares_to_one(self):
        """Test e_N^2 = 1 for odd N."""
        e0 = spin_generator(5, -1, "e0")
        assert e0 @ e0 == LinearMap.identity(4)
        with pytest.raises(InvalidArgument):
            spin_generator(4, 1, "e0")

    def test_dimension_mismatch(self):
        """Test that mixing N raises ShapeError."""
        with pytest.raises(ShapeError):
            clifford_act(VecV.basis(3, 1), SpinVec.basis(2))

    def test_spinor_text(self):
        """Test the printable spinor form."""
        assert str(SpinVec.basis(4, [1, 2]).scale(3)) == "x{1,2} coefficient 3"


class TestForms:
    """Test suite for phi_S, phi_V and dual bases."""

    def test_phi_s_examples(self):
        """Test the basis values of phi_S."""
        assert phi_S(SpinVec.basis(2), SpinVec.basis(2, [1])) == 1
        assert phi_S(SpinVec.basis(3, [1]), SpinVec.basis(3)) == -1
        assert phi_S(SpinVec.basis(3), SpinVec.basis(3)) == 0

    def test_phi_v_is_dot_product(self):
        """Test phi_V in the orthonormal basis."""
        assert phi_V(VecV(3, [1, 2, 3]), VecV(3, [4, 5, 6])) == 32
        assert phi_V(VecV.psi(2, 1), VecV.psi_dag(2, 1)) == Fraction(1, 2)

    @pytest.mark.parametrize("N", range(2, 8))
    def test_symmetry_sign(self, N):
        """Test phi_S(x, y) = sigma_N phi_S(y, x) on all basis pairs."""
        basis = _spin_basis(N)
        for x in basis:
            for y in basis:
                assert phi_S(x, y) == phi_S(y, x) * sigma(N)

    @pytest.mark.parametrize("N", range(2, 7))
    def test_clifford_adjoint(self, N):
        """Test phi_S(v x, y) = kappa_N phi_S(x, v y) for basis triples."""
        basis = _spin_basis(N)
        for epsilon in _epsilons(N):
            for a in range(1, N + 1):
                v = VecV.basis(N, a)
                for x in basis:
                    for y in basis:
                        lhs = phi_S(clifford_act(v, x, epsilon), y)
                        rhs = phi_S(x, clifford_act(v, y, epsilon))
                        assert lhs == rhs * kappa(N)

    @pytest.mark.parametrize("N", range(2, 7))
    def test_so_invariance(self, N):
        """Test phi_S(X x, y) = -phi_S(x, X y) for the so(V) basis."""
        basis = _spin_basis(N)
        for X in so_basis(N):
            op = X.spin_rep(1)
            for x in basis:
                Xx = SpinVec(N, op.apply(x.coeffs))
                for y in basis:
                    Xy = SpinVec(N, op.apply(y.coeffs))
                    assert phi_S(Xx, y) == -phi_S(x, Xy)

    def test_left_dual_example(self):
        """Test the left dual of x_{} at N=2."""
        assert dual_basis("left", 2)[0] == SpinVec.basis(2, [1])

    @pytest.mark.parametrize("N", range(2, 7))
    def test_dual_pairings(self, N):
        """Test the defining pairings of both dual bases."""
        basis = _spin_basis(N)
        left = dual_basis("left", N)
        right = dual_basis("right", N)
        for i in range(len(basis)):
            for j, y in enumerate(basis):
                expected = 1 if i == j else 0
                assert phi_S(left[i], y) == expected
                assert phi_S(y, right[i]) == expected

    @pytest.mark.parametrize("N", range(2, 7))
    def test_double_dual_sign(self, N):
        """Test (x^v)^v = sigma_N x."""
        left = dual_basis("left", N)
        full = 2 ** spin_rank(N) - 1
        for mask, dual in enumerate(left):
            (partner, coeff), = dual.coeffs.items()
            assert partner == full ^ mask
            twice = left[partner].scale(coeff)
            assert twice == SpinVec(N, {mask: 1}).scale(sigma(N))

    def test_invalid_side(self):
        """Test that an unknown dual side is rejected."""
        with pytest.raises(InvalidArgument):
            dual_basis("middle", 3)


class TestSoAction:
    """Test suite for so(V) and the quadratic operators."""

    def test_basis_size(self):
        """Test |so_basis(4)| = 6 and the N < 2 guard."""
        assert len(so_basis(4)) == 6
        with pytest.raises(InvalidArgument):
            so_basis(1)

    def test_antisymmetry_enforced(self):
        """Test that a symmetric matrix is rejected."""
        with pytest.raises(ShapeError):
            SoElement(2, [[0, 1], [1, 0]])

    def test_cartan_on_vacuum(self):
        """Test psi_1 psi_1^dagger - 1/2 acts as 1/2 on x_{} at N=2."""
        psi = spin_generator(2, 1, "psi", 1)
        dag = spin_generator(2, 1, "psi_dag", 1)
        h = psi @ dag - LinearMap.identity(2).scale(Fraction(1, 2))
        assert h.apply({0: ONE}) == {0: CycloScalar.of(Fraction(1, 2))}

    @pytest.mark.parametrize("N", [2, 3, 4])
    def test_vector_action_antisymmetric(self, N):
        """Test so_act on V is antisymmetric."""
        word = ModuleWord("V", N)
        for X in so_basis(N):
            op = so_act(X, word)
            assert op.transpose() == -op

    def test_casimir_on_vector(self):
        """Test C = 4 on V at N=5."""
        assert quadratic_ops("casimir", ModuleWord("V", 5)) == LinearMap.identity(5).scale(4)

    def test_casimir_on_spinor(self):
        """Test C = 3/2 on S at N=4."""
        expected = LinearMap.identity(4).scale(Fraction(3, 2))
        assert quadratic_ops("casimir", ModuleWord("S", 4)) == expected

    def test_omega_against_trivial_word(self):
        """Test Omega on S (x) empty is zero."""
        assert quadratic_ops("omega", ModuleWord("S", 4), 1).is_zero()

    def test_dot_formula(self):
        """Test dot = 2 Omega + C (x) 1 on S (x) V."""
        word = ModuleWord("SV", 3)
        omega = quadratic_ops("omega", word, 1)
        casimir = quadratic_ops("casimir", ModuleWord("S", 3)).kron(LinearMap.identity(3))
        assert quadratic_ops("dot", word, 1) == omega.scale(2) + casimir

    def test_invalid_split(self):
        """Test that a split outside the word raises ShapeError."""
        with pytest.raises(ShapeError):
            quadratic_ops("omega", ModuleWord("SV", 3), 3)
        with pytest.raises(InvalidArgument):
            quadratic_ops("quartic", ModuleWord("S", 3))

    @pytest.mark.parametrize("N", [2, 3, 4, 5])
    def test_barbell_square(self, N):
        """Test beta^2 = N - 8 Omega on S (x) S with beta = sum e_i (x) e_i."""
        for epsilon in _epsilons(N):
            size = 2 ** spin_rank(N)
            beta = LinearMap.zero(size * size, size * size)
            for a in range(1, N + 1):
                e = e_operator(N, epsilon, a)
                beta = beta + e.kron(e)
            omega = quadratic_ops("omega", ModuleWord("SS", N, epsilon), 1)
            expected = LinearMap.identity(size * size).scale(N) - omega.scale(8)
            assert beta @ beta == expected

    def test_two_term_barbell(self):
        """Test e1(x)e1 + e2(x)e2 = 2(psi(x)psi^dagger + psi^dagger(x)psi) at N=2."""
        e1, e2 = e_operator(2, 1, 1), e_operator(2, 1, 2)
        psi = spin_generator(2, 1, "psi", 1)
        dag = spin_generator(2, 1, "psi_dag", 1)
        assert e1.kron(e1) + e2.kron(e2) == (psi.kron(dag) + dag.kron(psi)).scale(2)


class TestPin:
    """Test suite for the element P."""

    def test_vector_action_even(self):
        """Test P = diag(1, 1, 1, -1) on V at N=4."""
        expected = LinearMap.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]])
        assert p_matrix(4, "V") == expected

    def test_vector_action_odd_is_trivial(self):
        """Test P acts trivially on V at N=3."""
        assert p_matrix(3, "V", -1) == LinearMap.identity(3)

    def test_spin_square(self):
        """Test P^2 = 1 on S at N=2."""
        p = p_matrix(2, "S")
        assert p @ p == LinearMap.identity(2)

    def test_guards(self):
        """Test N=0 and unknown modules are rejected."""
        with pytest.raises(InvalidArgument):
            p_matrix(0, "S")
        with pytest.raises(InvalidArgument):
            p_matrix(3, "W")

    @pytest.mark.parametrize("N", [2, 3, 4, 5])
    def test_commutes_with_casimir(self, N):
        """Test [C, P] = 0 on S and V."""
        for letter in ("S", "V"):
            word = ModuleWord(letter, N)
            casimir = quadratic_ops("casimir", word)
            assert casimir.commutator(p_matrix(N, letter)).is_zero()

    def test_normalized_word_action_squares_to_one(self):
        """Test the normalized P on S (x) V squares to the identity."""
        word = ModuleWord("SV", 4)
        p = p_word(word)
        assert p @ p == LinearMap.identity(word.dimension)


class TestWeights:
    """Test suite for weight data."""

    def test_casimir_values(self):
        """Test <lambda, lambda + 2 rho> for the vector and spin weights."""
        assert casimir_value(vector_weight(5, 0), 5) == 4
        assert casimir_value(spin_weight(4, 0), 4) == Fraction(3, 2)
        assert rho(5) == (Fraction(3, 2), Fraction(1, 2))

    @pytest.mark.parametrize("N", [3, 4, 5, 6])
    def test_weyl_dimensions(self, N):
        """Test the Weyl dimension formula on V and S."""
        n = spin_rank(N)
        assert weyl_dimension(vector_weight(N, 0), N) == N
        expected = 2**n if N % 2 else 2 ** (n - 1)
        assert weyl_dimension(spin_weight(N, 0), N) == expected

    @pytest.mark.parametrize("N", [3, 4, 5])
    def test_positive_root_count(self, N):
        """Test that the positive roots fill half of so(V) outside the Cartan."""
        n = spin_rank(N)
        assert 2 * len(root_basis(N)) == N * (N - 1) // 2 - n


class TestSignLemma:
    """Test suite for the ordered fermion product check."""

    @pytest.mark.parametrize("epsilon", [1, -1])
    def test_n_one(self, epsilon):
        """Test all 6 orderings at n=1."""
        result = sign_lemma_check(1, epsilon)
        assert result.checked == 6
        assert result.passed

    @pytest.mark.parametrize("epsilon", [1, -1])
    def test_n_two(self, epsilon):
        """Test all 120 orderings at n=2."""
        result = sign_lemma_check(2, epsilon)
        assert result.checked == 120
        assert result.passed
        assert result.to_dict()["failures"] == []

    def test_guard(self):
        """Test that n < 1 is rejected."""
        with pytest.raises(InvalidArgument):
            sign_lemma_check(0)
