"""
Products of all fermionic generators in an arbitrary order, for odd N.

With psi_0 = e_N / sqrt(2) and psi_{-i} = psi_i^dagger, the product
psi_{w(-n)} ... psi_{w(n)} is diagonal: it sends x_I to (epsilon / sqrt(2)) sgn(w) x_I
for the single subset I where each psi_{-i} stands left of psi_i, and kills the rest.
"""

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Sequence

from src.clifford.spin import spin_generator
from src.combinatorics import Permutation, sign
from src.exactnum import INV_SQRT2
from src.linalg import LinearMap
from src.utils.errors import InvalidArgument

logger = logging.getLogger(__name__)


def fermion(N: int, epsilon: int, index: int) -> LinearMap:
    """psi_index on S, for index in -n..n."""
    if index == 0:
        return spin_generator(N, epsilon, "e0").scale(INV_SQRT2)
    if index > 0:
        return spin_generator(N, epsilon, "psi", index)
    return spin_generator(N, epsilon, "psi_dag", -index)


def ordered_product(N: int, epsilon: int, order: Sequence[int]) -> LinearMap:
    """psi_{order[0]} psi_{order[1]} ... with the rightmost factor acting first."""
    size = 2 ** (N // 2)
    result = LinearMap.identity(size)
    for index in order:
        result = result @ fermion(N, epsilon, index)
    return result


def selected_subset(order: Sequence[int]) -> int:
    """Bitmask of the i whose psi_{-i} comes before psi_i."""
    position = {index: k for k, index in enumerate(order)}
    n = len(order) // 2
    return sum(1 << (i - 1) for i in range(1, n + 1) if position[-i] < position[i])


def _sign_of(order: Sequence[int]) -> int:
    n = len(order) // 2
    return sign(Permutation(index + n + 1 for index in order))


@dataclass(frozen=True)
class SignLemmaResult:
    n: int
    epsilon: int
    checked: int
    failures: List[List[int]]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "epsilon": self.epsilon,
            "checked": self.checked,
            "failures": self.failures,
        }


def sign_lemma_check(n: int, epsilon: int = 1) -> SignLemmaResult:
    """
    Exhaust every ordering of psi_{-n}, ..., psi_n at N = 2n + 1.

    Raises:
        InvalidArgument: If n < 1.
    """
    if n < 1:
        raise InvalidArgument(f"sign lemma check needs n >= 1, got {n}")
    N = 2 * n + 1
    size = 2**n
    failures: List[List[int]] = []
    checked = 0
    for order in permutations(range(-n, n + 1)):
        checked += 1
        mask = selected_subset(order)
        value = INV_SQRT2 * (epsilon * _sign_of(order))
        expected = LinearMap.from_entries(size, size, [(mask, mask, value)])
        if ordered_product(N, epsilon, order) != expected:
            failures.append(list(order))
    if failures:
        logger.error(f"{len(failures)} of {checked} orderings fail at n={n}, epsilon={epsilon}")
    return SignLemmaResult(n, epsilon, checked, failures)
