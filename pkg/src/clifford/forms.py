"""Invariant bilinear forms on S and V, their signs and dual bases."""

from math import comb
from typing import List

from src.exactnum import CycloScalar
from src.clifford.module_word import spin_rank
from src.clifford.spin import SpinVec, VecV
from src.utils.errors import InvalidArgument, ShapeError


def sigma(N: int) -> int:
    """sigma_N = (-1)^{binom(n,2) + nN}, the symmetry sign of Phi_S."""
    n = spin_rank(N)
    return -1 if (comb(n, 2) + n * N) % 2 else 1


def kappa(N: int) -> int:
    """kappa_N = (-1)^{nN}, the rotation sign."""
    return -1 if (spin_rank(N) * N) % 2 else 1


def super_dimension(N: int) -> int:
    """D = sigma_N 2^n, the categorical dimension of S."""
    return sigma(N) * 2 ** spin_rank(N)


def phi_s_sign(N: int, mask_i: int, mask_j: int) -> int:
    """
    Phi_S(x_I, x_J) for basis vectors.

    Zero unless J is the complement of I; otherwise
    (-1)^{binom(|I|,2) + nN|I| + #{(i, j) in I x I^c : i > j}}.
    """
    n = spin_rank(N)
    full = (1 << n) - 1
    if mask_j != full ^ mask_i:
        return 0
    size = bin(mask_i).count("1")
    inversions = 0
    for i in range(n):
        if mask_i >> i & 1:
            inversions += bin(mask_j & ((1 << i) - 1)).count("1")
    exponent = comb(size, 2) + n * N * size + inversions
    return -1 if exponent % 2 else 1


def phi_S(x: SpinVec, y: SpinVec) -> CycloScalar:
    """The invariant form on S."""
    if x.N != y.N:
        raise ShapeError(f"phi_S between N={x.N} and N={y.N}")
    full = (1 << x.n) - 1
    total = CycloScalar.of(0)
    for mask, value in x.coeffs.items():
        partner = y.coeffs.get(full ^ mask)
        if partner is not None:
            total = total + value * partner * phi_s_sign(x.N, mask, full ^ mask)
    return total


def phi_V(u: VecV, v: VecV) -> CycloScalar:
    """The orthonormal form on V: the plain dot product in the e-basis."""
    if u.N != v.N:
        raise ShapeError(f"phi_V between N={u.N} and N={v.N}")
    total = CycloScalar.of(0)
    for a, b in zip(u.coeffs, v.coeffs):
        total = total + a * b
    return total


def left_dual_coeff(N: int, mask: int) -> int:
    """x_I^v = c x_{I^c} with c = Phi_S(x_{I^c}, x_I), so Phi_S(x_I^v, x_J) = delta."""
    full = (1 << spin_rank(N)) - 1
    return phi_s_sign(N, full ^ mask, mask)


def right_dual_coeff(N: int, mask: int) -> int:
    """^v x_I = c x_{I^c} with c = Phi_S(x_I, x_{I^c}), so Phi_S(x_J, ^v x_I) = delta."""
    full = (1 << spin_rank(N)) - 1
    return phi_s_sign(N, mask, full ^ mask)


def dual_basis(side: str, N: int, epsilon: int = 1) -> List[SpinVec]:
    """
    Dual basis of S with respect to Phi_S, listed in bitmask order of the x_I.

    Args:
        side: "left" for x^v with Phi_S(x_I^v, x_J) = delta, "right" for
            ^v x with Phi_S(x_J, ^v x_I) = delta.
        N: Dimension of V.
        epsilon: Spin module choice; the forms do not depend on it.

    Returns:
        List[SpinVec]: The dual vectors.
    """
    if side not in ("left", "right"):
        raise InvalidArgument(f"dual basis side must be left or right, got {side!r}")
    full = (1 << spin_rank(N)) - 1
    coeff = left_dual_coeff if side == "left" else right_dual_coeff
    return [SpinVec(N, {full ^ mask: coeff(N, mask)}) for mask in range(full + 1)]
