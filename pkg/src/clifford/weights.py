"""Weight-adapted coordinates, root vectors and Weyl-group data for so(V)."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from src.exactnum import I, CycloScalar
from src.linalg import LinearMap
from src.clifford.module_word import ModuleWord, spin_rank
from src.clifford.so import leibniz
from src.clifford.spin import spin_generator

Weight = Tuple[Fraction, ...]

HALF = Fraction(1, 2)


def adapted_labels(N: int) -> List[str]:
    """Names of the weight basis of V: psi_1..psi_n, psi_1^+..psi_n^+, then e_N for odd N."""
    n = spin_rank(N)
    labels = [f"psi{j}" for j in range(1, n + 1)] + [f"psi{j}+" for j in range(1, n + 1)]
    if N % 2:
        labels.append(f"e{N}")
    return labels


def vector_weight(N: int, k: int) -> Weight:
    n = spin_rank(N)
    weight = [Fraction(0)] * n
    if k < n:
        weight[k] = Fraction(1)
    elif k < 2 * n:
        weight[k - n] = Fraction(-1)
    return tuple(weight)


def spin_weight(N: int, mask: int) -> Weight:
    """x_I has weight -1/2 on the coordinates in I and +1/2 elsewhere."""
    n = spin_rank(N)
    return tuple(-HALF if mask >> j & 1 else HALF for j in range(n))


def basis_weights(word: ModuleWord) -> List[Weight]:
    """Weight of every adapted basis vector of word, in flat index order."""
    n = word.n
    per_letter = {
        "S": [spin_weight(word.N, m) for m in range(2**n)],
        "V": [vector_weight(word.N, k) for k in range(word.N)],
    }
    weights: List[Weight] = []
    for flat in range(word.dimension):
        total = [Fraction(0)] * n
        for letter, part in zip(word.letters, word.unindex(flat)):
            for j, w in enumerate(per_letter[letter][part]):
                total[j] += w
        weights.append(tuple(total))
    return weights


def weight_spaces(word: ModuleWord) -> Dict[Weight, List[int]]:
    spaces: Dict[Weight, List[int]] = {}
    for flat, weight in enumerate(basis_weights(word)):
        spaces.setdefault(weight, []).append(flat)
    return spaces


@lru_cache(maxsize=None)
def adapted_change(N: int) -> Tuple[LinearMap, LinearMap]:
    """
    Change of basis on V between e-coordinates and weight coordinates.

    Returns:
        Tuple[LinearMap, LinearMap]: T with columns the weight vectors in e-coordinates,
        and its inverse.
    """
    n = spin_rank(N)
    half = CycloScalar.of(HALF)
    forward = []
    backward = []
    for j in range(n):
        odd, even = 2 * j, 2 * j + 1
        forward += [(odd, j, half), (even, j, I * HALF), (odd, n + j, half), (even, n + j, -I * HALF)]
        backward += [(j, odd, 1), (n + j, odd, 1), (j, even, -I), (n + j, even, I)]
    if N % 2:
        forward.append((N - 1, N - 1, 1))
        backward.append((N - 1, N - 1, 1))
    return LinearMap.from_entries(N, N, forward), LinearMap.from_entries(N, N, backward)


def word_change(word: ModuleWord) -> Tuple[LinearMap, LinearMap]:
    """Tensor products of adapted_change over V factors (identity on S factors)."""
    forward = LinearMap.identity(1)
    backward = LinearMap.identity(1)
    for letter in word.letters:
        if letter == "V":
            t, t_inv = adapted_change(word.N)
        else:
            t = t_inv = LinearMap.identity(2**word.n)
        forward = forward.kron(t)
        backward = backward.kron(t_inv)
    return forward, backward


def to_adapted(op: LinearMap, word: ModuleWord) -> LinearMap:
    """Express an endomorphism of word, given in e-coordinates, in weight coordinates."""
    if "V" not in word.letters:
        return op.with_words(word, word)
    forward, backward = word_change(word)
    return (backward @ op @ forward).with_words(word, word)


def adapted_form(N: int, k: int, l: int) -> Fraction:
    """Phi_V between weight basis vectors: Phi(psi_i, psi_j^+) = delta / 2, Phi(e_N, e_N) = 1."""
    n = spin_rank(N)
    if N % 2 and k == l == 2 * n:
        return Fraction(1)
    if k < n <= l < 2 * n and l - n == k:
        return HALF
    if l < n <= k < 2 * n and k - n == l:
        return HALF
    return Fraction(0)


def _spin_of(N: int, epsilon: int, k: int) -> LinearMap:
    n = spin_rank(N)
    if k < n:
        return spin_generator(N, epsilon, "psi", k + 1)
    if k < 2 * n:
        return spin_generator(N, epsilon, "psi_dag", k - n + 1)
    return spin_generator(N, epsilon, "e0")


@dataclass(frozen=True)
class RootVector:
    """
    M_{u,v} for weight basis vectors u, v of V; its weight is wt(u) + wt(v).
    """

    N: int
    u: int
    v: int

    @property
    def root(self) -> Weight:
        wu = vector_weight(self.N, self.u)
        wv = vector_weight(self.N, self.v)
        return tuple(a + b for a, b in zip(wu, wv))

    def vector_op(self) -> LinearMap:
        """w -> Phi(v, w) u - Phi(u, w) v in weight coordinates."""
        entries = []
        for w in range(self.N):
            a = adapted_form(self.N, self.v, w)
            b = adapted_form(self.N, self.u, w)
            if a:
                entries.append((self.u, w, a))
            if b:
                entries.append((self.v, w, -b))
        return LinearMap.from_entries(self.N, self.N, entries)

    def spin_op(self, epsilon: int = 1) -> LinearMap:
        """(uv - vu) / 4 acting on S."""
        u = _spin_of(self.N, epsilon, self.u)
        v = _spin_of(self.N, epsilon, self.v)
        return (u @ v - v @ u).scale(Fraction(1, 4))

    def word_op(self, word: ModuleWord) -> LinearMap:
        return leibniz(word, self.spin_op(word.epsilon), self.vector_op())

    def __str__(self) -> str:
        labels = adapted_labels(self.N)
        return f"M({labels[self.u]},{labels[self.v]})"


def root_basis(N: int) -> List[RootVector]:
    """
    Positive root vectors: M(psi_i, psi_j^+) and M(psi_i, psi_j) for i < j, plus
    M(psi_i, e_N) for odd N.
    """
    n = spin_rank(N)
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            roots.append(RootVector(N, i, n + j))
            roots.append(RootVector(N, i, j))
    if N % 2:
        for i in range(n):
            roots.append(RootVector(N, i, 2 * n))
    return roots


def negative_root_basis(N: int) -> List[RootVector]:
    n = spin_rank(N)
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            roots.append(RootVector(N, n + i, j))
            roots.append(RootVector(N, n + i, n + j))
    if N % 2:
        for i in range(n):
            roots.append(RootVector(N, n + i, 2 * n))
    return roots


def positive_roots(N: int) -> List[Weight]:
    return [rv.root for rv in root_basis(N)]


def simple_root_vectors(N: int, positive: bool = True) -> List[RootVector]:
    """Root vectors for the simple roots (or their negatives), which generate so(V) with the Cartan."""
    n = spin_rank(N)
    if n == 0:
        return []
    simple: List[Weight] = []
    for i in range(n - 1):
        simple.append(tuple(Fraction(1 if k == i else -1 if k == i + 1 else 0) for k in range(n)))
    if N % 2:
        simple.append(tuple(Fraction(1 if k == n - 1 else 0) for k in range(n)))
    elif n >= 2:
        simple.append(tuple(Fraction(1 if k >= n - 2 else 0) for k in range(n)))
    pool = root_basis(N) if positive else negative_root_basis(N)
    wanted = simple if positive else [tuple(-c for c in s) for s in simple]
    return [rv for rv in pool if rv.root in wanted]


def rho(N: int) -> Weight:
    """Half the sum of positive roots: (N - 2i) / 2 in coordinate i."""
    return tuple(Fraction(N - 2 * i, 2) for i in range(1, spin_rank(N) + 1))


def inner(a: Weight, b: Weight) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def casimir_value(weight: Weight, N: int) -> Fraction:
    """<lambda, lambda + 2 rho>, the Casimir eigenvalue on L(lambda)."""
    r = rho(N)
    return inner(weight, tuple(w + 2 * p for w, p in zip(weight, r)))


def weyl_dimension(weight: Weight, N: int) -> int:
    """Dimension of L(lambda) by the Weyl dimension formula."""
    r = rho(N)
    shifted = tuple(w + p for w, p in zip(weight, r))
    value = Fraction(1)
    for alpha in positive_roots(N):
        value *= inner(shifted, alpha) / inner(r, alpha)
    return int(value)


def is_dominant(weight: Weight, N: int) -> bool:
    n = spin_rank(N)
    if n == 0:
        return True
    for i in range(n - 1):
        if N % 2 == 0 and i == n - 2:
            if weight[i] < abs(weight[i + 1]):
                return False
        elif weight[i] < weight[i + 1]:
            return False
    if N % 2:
        return weight[n - 1] >= 0
    return True


def twist(weight: Weight) -> Weight:
    """Negate the last coordinate, the action of P on weights for even N."""
    if not weight:
        return weight
    return weight[:-1] + (-weight[-1],)
