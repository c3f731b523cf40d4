"""The orthogonal Lie algebra so(V) and its action on tensor words."""

from typing import Dict, List, Optional, Sequence

from src.exactnum import CycloScalar, Scalar
from src.linalg import Column, LinearMap, add_into
from src.clifford.module_word import ModuleWord, letter_dimension, spin_rank
from src.clifford.spin import clifford_product
from src.utils.errors import InvalidArgument, ShapeError


class SoElement:
    """
    Antisymmetric N x N matrix in the orthonormal e-basis.

    M_{u,v} w = Phi_V(v, w) u - Phi_V(u, w) v; for u = e_i, v = e_j the matrix has
    +1 at (i, j) and -1 at (j, i).
    """

    __slots__ = ("N", "matrix")

    def __init__(self, N: int, matrix: Sequence[Sequence[Scalar]]) -> None:
        rows = [tuple(CycloScalar.of(v) for v in row) for row in matrix]
        if len(rows) != N or any(len(row) != N for row in rows):
            raise ShapeError(f"so({N}) element needs an {N}x{N} matrix")
        for i in range(N):
            for j in range(N):
                if rows[i][j] != -rows[j][i]:
                    raise ShapeError("so(V) elements must be antisymmetric in the e-basis")
        self.N: int = N
        self.matrix = tuple(rows)

    @classmethod
    def elementary(cls, N: int, i: int, j: int) -> "SoElement":
        """M_{e_i, e_j} with 1-based indices."""
        matrix: List[List[Scalar]] = [[0] * N for _ in range(N)]
        matrix[i - 1][j - 1] = 1
        matrix[j - 1][i - 1] = -1
        return cls(N, matrix)

    def __add__(self, other: "SoElement") -> "SoElement":
        return SoElement(
            self.N,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.matrix, other.matrix)],
        )

    def scale(self, factor: Scalar) -> "SoElement":
        return SoElement(self.N, [[v * factor for v in row] for row in self.matrix])

    def vector_rep(self) -> LinearMap:
        """The defining action on V."""
        return LinearMap.from_entries(
            self.N,
            self.N,
            (
                (i, j, v)
                for i, row in enumerate(self.matrix)
                for j, v in enumerate(row)
                if not v.is_zero()
            ),
        )

    def spin_rep(self, epsilon: int = 1) -> LinearMap:
        """Action on S: M_{e_i,e_j} acts as (e_i e_j - e_j e_i) / 4 = e_i e_j / 2."""
        size = 2 ** spin_rank(self.N)
        result = LinearMap.zero(size, size)
        for i in range(self.N):
            for j in range(i + 1, self.N):
                coeff = self.matrix[i][j]
                if coeff.is_zero():
                    continue
                term = clifford_product(self.N, epsilon, [i + 1, j + 1])
                result = result + term.scale(coeff / 2)
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SoElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)


def so_basis(N: int) -> List[SoElement]:
    """
    The basis M_{e_i,e_j}, i < j, of so(V).

    Raises:
        InvalidArgument: If N < 2.
    """
    if N < 2:
        raise InvalidArgument(f"so(V) basis needs N >= 2, got {N}")
    return [SoElement.elementary(N, i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]


def embed_block(word: ModuleWord, start: int, stop: int, op: LinearMap) -> LinearMap:
    """
    Extend op, acting on the factors start..stop-1 of word, by identities.

    Raises:
        ShapeError: When op does not fit the block.
    """
    dims = word.factor_dims
    if not 0 <= start <= stop <= len(dims):
        raise ShapeError(f"block {start}..{stop} outside word {word}")
    left = 1
    for dim in dims[:start]:
        left *= dim
    block = 1
    for dim in dims[start:stop]:
        block *= dim
    right = 1
    for dim in dims[stop:]:
        right *= dim
    if op.rows != block or op.cols != block:
        raise ShapeError(f"operator of size {op.rows}x{op.cols} on a block of dimension {block}")
    columns: Dict[int, Column] = {}
    for l in range(left):
        for b, column in op.columns.items():
            for r in range(right):
                columns[(l * block + b) * right + r] = {
                    (l * block + b2) * right + r: v for b2, v in column.items()
                }
    return LinearMap(word.dimension, word.dimension, columns, word, word)


def leibniz(
    word: ModuleWord,
    spin_op: Optional[LinearMap],
    vector_op: Optional[LinearMap],
    start: int = 0,
    stop: Optional[int] = None,
) -> LinearMap:
    """Sum over factors start..stop-1 of the per-letter operator, identity elsewhere."""
    columns: Dict[int, Column] = {}
    stop = len(word.letters) if stop is None else stop
    for position in range(start, stop):
        letter = word.letters[position]
        op = spin_op if letter == "S" else vector_op
        if op is None or op.is_zero():
            continue
        piece = embed_block(word, position, position + 1, op)
        for j, column in piece.columns.items():
            total = columns.setdefault(j, {})
            add_into(total, column)
    return LinearMap(word.dimension, word.dimension, columns, word, word)


def so_act(X: SoElement, word: ModuleWord) -> LinearMap:
    """
    Derivation action of X on the tensor word.

    Raises:
        ShapeError: When X and word belong to different N.
    """
    if X.N != word.N:
        raise ShapeError(f"so({X.N}) element acting on a word for N={word.N}")
    spin_op = X.spin_rep(word.epsilon) if "S" in word.letters else None
    vector_op = X.vector_rep() if "V" in word.letters else None
    return leibniz(word, spin_op, vector_op)


def so_act_range(X: SoElement, word: ModuleWord, start: int, stop: int) -> LinearMap:
    """Action of X on the factors start..stop-1 only."""
    spin_op = X.spin_rep(word.epsilon) if "S" in word.letters[start:stop] else None
    vector_op = X.vector_rep() if "V" in word.letters[start:stop] else None
    return leibniz(word, spin_op, vector_op, start, stop)
