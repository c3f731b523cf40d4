"""The spin module S and the Clifford action of V on it."""

from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.exactnum import I, CycloScalar, Scalar
from src.linalg import LinearMap
from src.clifford.module_word import spin_rank
from src.utils.errors import InvalidArgument, ShapeError


def _below(mask: int, j: int) -> int:
    """Number of elements of the subset mask smaller than j (1-based)."""
    return bin(mask & ((1 << (j - 1)) - 1)).count("1")


def psi_action(j: int, mask: int) -> Optional[Tuple[int, int]]:
    """psi_j x_I as (mask, sign), or None when j is not in I."""
    bit = 1 << (j - 1)
    if not mask & bit:
        return None
    return mask ^ bit, -1 if _below(mask, j) % 2 else 1


def psi_dag_action(j: int, mask: int) -> Optional[Tuple[int, int]]:
    """psi_j^dagger x_I = psi_j^dagger wedge x_I as (mask, sign)."""
    bit = 1 << (j - 1)
    if mask & bit:
        return None
    return mask | bit, -1 if _below(mask, j) % 2 else 1


def e_action(N: int, epsilon: int, a: int, mask: int) -> Tuple[int, CycloScalar]:
    """
    Action of the orthonormal basis vector e_a (1-based) on x_I.

    e_{2j-1} = psi_j + psi_j^dagger and e_{2j} = i(psi_j^dagger - psi_j); for odd N,
    e_N x_I = epsilon (-1)^{|I|} x_I. Each e_a maps a basis vector to one basis vector.
    """
    n = spin_rank(N)
    if a == N and N % 2 == 1:
        parity = -1 if bin(mask).count("1") % 2 else 1
        return mask, CycloScalar.of(epsilon * parity)
    j = (a + 1) // 2
    if not 1 <= j <= n:
        raise ShapeError(f"e_{a} is not a basis vector for N={N}")
    lowered = psi_action(j, mask)
    raised = psi_dag_action(j, mask)
    if a % 2 == 1:
        target, sign = lowered if lowered is not None else raised
        return target, CycloScalar.of(sign)
    if lowered is not None:
        target, sign = lowered
        return target, I * (-sign)
    target, sign = raised
    return target, I * sign


class SpinVec:
    """Vector in S with sparse coefficients over the x_I basis (I as bitmask)."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: Optional[Dict[int, Scalar]] = None) -> None:
        self.N: int = N
        self.coeffs: Dict[int, CycloScalar] = {}
        size = 2 ** spin_rank(N)
        for mask, value in (coeffs or {}).items():
            if not 0 <= mask < size:
                raise ShapeError(f"subset mask {mask} out of range for N={N}")
            value = CycloScalar.of(value)
            if not value.is_zero():
                self.coeffs[mask] = value

    @classmethod
    def basis(cls, N: int, subset: Sequence[int] = ()) -> "SpinVec":
        """x_I for I given as a collection of 1-based indices."""
        mask = 0
        for i in subset:
            mask |= 1 << (i - 1)
        return cls(N, {mask: 1})

    @property
    def n(self) -> int:
        return spin_rank(self.N)

    def items(self) -> Iterator[Tuple[int, CycloScalar]]:
        return iter(sorted(self.coeffs.items()))

    def __add__(self, other: "SpinVec") -> "SpinVec":
        if self.N != other.N:
            raise ShapeError(f"cannot add spin vectors for N={self.N} and N={other.N}")
        out = dict(self.coeffs)
        for mask, value in other.coeffs.items():
            out[mask] = out.get(mask, CycloScalar.of(0)) + value
        return SpinVec(self.N, out)

    def scale(self, factor: Scalar) -> "SpinVec":
        return SpinVec(self.N, {m: v * factor for m, v in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SpinVec) and self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.N, tuple(self.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for mask, value in self.items():
            members = [str(i + 1) for i in range(self.n) if mask >> i & 1]
            parts.append(f"x{{{','.join(members)}}} coefficient {value}")
        return "; ".join(parts)

    def __repr__(self) -> str:
        return f"SpinVec(N={self.N}, {self})"


class VecV:
    """Vector in V over the orthonormal basis e_1..e_N."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: Sequence[Scalar]) -> None:
        if len(coeffs) != N:
            raise ShapeError(f"VecV for N={N} needs {N} coordinates, got {len(coeffs)}")
        self.N: int = N
        self.coeffs: Tuple[CycloScalar, ...] = tuple(CycloScalar.of(c) for c in coeffs)

    @classmethod
    def basis(cls, N: int, a: int) -> "VecV":
        """e_a, 1-based."""
        return cls(N, [1 if k == a - 1 else 0 for k in range(N)])

    @classmethod
    def psi(cls, N: int, j: int) -> "VecV":
        """psi_j = (e_{2j-1} + i e_{2j}) / 2."""
        coeffs: List[Scalar] = [0] * N
        coeffs[2 * j - 2] = CycloScalar.of(1) / 2
        coeffs[2 * j - 1] = I / 2
        return cls(N, coeffs)

    @classmethod
    def psi_dag(cls, N: int, j: int) -> "VecV":
        """psi_j^dagger = (e_{2j-1} - i e_{2j}) / 2."""
        coeffs: List[Scalar] = [0] * N
        coeffs[2 * j - 2] = CycloScalar.of(1) / 2
        coeffs[2 * j - 1] = -I / 2
        return cls(N, coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VecV) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"VecV({', '.join(str(c) for c in self.coeffs)})"


def clifford_act(v: VecV, x: SpinVec, epsilon: int = 1) -> SpinVec:
    """
    Clifford multiplication v . x.

    Args:
        v: Vector in V.
        x: Vector in S.
        epsilon: Choice of spin module for odd N.

    Returns:
        SpinVec: The product.

    Raises:
        ShapeError: When v and x belong to different N.
    """
    if v.N != x.N:
        raise ShapeError(f"vector for N={v.N} cannot act on spinor for N={x.N}")
    out: Dict[int, CycloScalar] = {}
    for a, weight in enumerate(v.coeffs, start=1):
        if weight.is_zero():
            continue
        for mask, value in x.coeffs.items():
            target, coeff = e_action(v.N, epsilon, a, mask)
            out[target] = out.get(target, CycloScalar.of(0)) + weight * value * coeff
    return SpinVec(x.N, out)


def e_operator(N: int, epsilon: int, a: int) -> LinearMap:
    """Matrix of e_a on S."""
    size = 2 ** spin_rank(N)
    columns = {}
    for mask in range(size):
        target, coeff = e_action(N, epsilon, a, mask)
        columns[mask] = {target: coeff}
    return LinearMap(size, size, columns)


def clifford_product(N: int, epsilon: int, indices: Sequence[int]) -> LinearMap:
    """Matrix of e_{a_1} e_{a_2} ... e_{a_k} on S (the rightmost factor acts first)."""
    size = 2 ** spin_rank(N)
    result = LinearMap.identity(size)
    for a in indices:
        result = result @ e_operator(N, epsilon, a)
    return result


def spin_generator(N: int, epsilon: int, kind: str, j: int = 0) -> LinearMap:
    """
    Matrix on S of psi_j ("psi"), psi_j^dagger ("psi_dag") or e_N for odd N ("e0").

    Raises:
        InvalidArgument: For an unknown kind or index.
    """
    n = spin_rank(N)
    size = 2**n
    if kind == "e0":
        if N % 2 == 0:
            raise InvalidArgument("e0 exists only for odd N")
        return e_operator(N, epsilon, N)
    if not 1 <= j <= n:
        raise InvalidArgument(f"fermion index {j} out of range 1..{n}")
    if kind not in ("psi", "psi_dag"):
        raise InvalidArgument(f"unknown Clifford generator: {kind}")
    action = psi_action if kind == "psi" else psi_dag_action
    columns = {}
    for mask in range(size):
        hit = action(j, mask)
        if hit is not None:
            columns[mask] = {hit[0]: CycloScalar.of(hit[1])}
    return LinearMap(size, size, columns)
