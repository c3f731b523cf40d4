"""The element P of Pin(V) outside Spin(V) and its actions."""

import logging
from typing import List

from src.exactnum import I
from src.linalg import LinearMap
from src.clifford.module_word import ModuleWord
from src.clifford.spin import clifford_product, e_operator
from src.utils.errors import InvalidArgument

logger = logging.getLogger(__name__)


def p_factors(N: int) -> List[int]:
    """e-indices of P: e_1...e_{N-1} for even N, e_1...e_N for odd N."""
    if N <= 0:
        raise InvalidArgument(f"P is defined for N >= 1, got {N}")
    top = N - 1 if N % 2 == 0 else N
    return list(range(1, top + 1))


def p_matrix(N: int, module: str, epsilon: int = 1) -> LinearMap:
    """
    Matrix of P on S or V.

    On S, P acts by Clifford multiplication. On V it acts by conjugation
    v -> P v P^{-1}, read off from whether P commutes or anticommutes with each e_a
    on S.

    Args:
        N: Dimension of V.
        module: "S" or "V".
        epsilon: Spin module choice for odd N.

    Returns:
        LinearMap: The action in the standard basis of the module.

    Raises:
        InvalidArgument: For N = 0 or an unknown module.
    """
    factors = p_factors(N)
    on_spin = clifford_product(N, epsilon, factors)
    if module == "S":
        return on_spin
    if module != "V":
        raise InvalidArgument(f"module must be S or V, got {module!r}")
    signs = []
    for a in range(1, N + 1):
        e_a = e_operator(N, epsilon, a)
        signs.append(1 if on_spin @ e_a == e_a @ on_spin else -1)
    return LinearMap.from_entries(N, N, ((a, a, s) for a, s in enumerate(signs)))


def p_word(word: ModuleWord) -> LinearMap:
    """
    Diagonal action of P on a tensor word, normalized to square to the identity.

    When the plain tensor action squares to -1 (an odd number of S factors with
    P^2 = -1 on S), the result is multiplied by i.
    """
    result = LinearMap.identity(1)
    for letter in word.letters:
        result = result.kron(p_matrix(word.N, letter, word.epsilon))
    result = result.with_words(word, word)
    square = result @ result
    if square != LinearMap.identity(word.dimension):
        logger.debug(f"P squares to -1 on {word}; normalizing by i")
        result = result.scale(I)
    return result
