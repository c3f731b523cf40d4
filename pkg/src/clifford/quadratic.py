"""Quadratic elements of U(so(V)): the Casimir C, the mixed term Omega and the dot."""

from typing import List

from src.linalg import LinearMap
from src.clifford.module_word import ModuleWord
from src.clifford.so import so_act_range, so_basis
from src.utils.errors import InvalidArgument, ShapeError

KINDS = ("casimir", "omega", "dot")


def quadratic_ops(kind: str, word: ModuleWord, split: int = 0) -> LinearMap:
    """
    The Casimir, Omega or dot operator on a tensor word.

    casimir is sum_{i<j} M_ij M_ji on the whole word. omega is
    sum_{i<j} M_ij (x) M_ji across the split (left factors | right factors), and
    dot = 2 omega + casimir(left) (x) 1. For N < 2 the Lie algebra is zero and every
    operator vanishes.

    Args:
        kind: One of casimir, omega, dot.
        word: The module word acted on.
        split: Number of letters in the left factor (omega and dot only).

    Returns:
        LinearMap: The operator on word.

    Raises:
        ShapeError: When split does not cut the word.
        InvalidArgument: For an unknown kind.
    """
    if kind not in KINDS:
        raise InvalidArgument(f"unknown quadratic operator: {kind}")
    length = len(word.letters)
    if kind != "casimir" and not 0 <= split <= length:
        raise ShapeError(f"split {split} does not cut word {word} of length {length}")
    size = word.dimension
    if word.N < 2:
        return LinearMap.zero(size, size).with_words(word, word)

    lefts: List[LinearMap] = []
    total = LinearMap.zero(size, size)
    for X in so_basis(word.N):
        if kind == "casimir":
            rho = so_act_range(X, word, 0, length)
            total = total - rho @ rho
            continue
        left = so_act_range(X, word, 0, split)
        right = so_act_range(X, word, split, length)
        # M_ji = -M_ij
        total = total - left @ right
        if kind == "dot":
            lefts.append(left)
    if kind == "dot":
        total = total.scale(2)
        for left in lefts:
            total = total - left @ left
    return total.with_words(word, word)
