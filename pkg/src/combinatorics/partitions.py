"""Integer partitions and the multiset constants built from them."""

from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Iterable, List, Sequence, Tuple

from src.utils.errors import InvalidArgument


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = tuple(int(p) for p in parts)
        if any(p <= 0 for p in values):
            raise InvalidArgument(f"partition parts must be positive: {list(values)}")
        if list(values) != sorted(values, reverse=True):
            raise InvalidArgument(f"partition parts must be weakly decreasing: {list(values)}")
        return super().__new__(cls, values)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        """m_i = number of parts equal to i."""
        return Counter(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def dominates(self, other: "Partition") -> bool:
        """Dominance order on partitions of the same weight."""
        total_self = 0
        total_other = 0
        for i in range(max(len(self), len(other))):
            total_self += self[i] if i < len(self) else 0
            total_other += other[i] if i < len(other) else 0
            if total_self < total_other:
                return False
        return True

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def partitions_of(r: int) -> List[Partition]:
    """
    All partitions of r, lexicographically sorted.

    Args:
        r: Non-negative weight.

    Returns:
        List[Partition]: Partitions ordered as tuples, so [1,1,1] precedes [2,1] precedes [3].

    Raises:
        InvalidArgument: If r is negative.
    """
    if r < 0:
        raise InvalidArgument(f"cannot partition a negative integer: {r}")
    out: List[Tuple[int, ...]] = []

    def extend(remaining: int, largest: int, prefix: Tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(r, r, ())
    return [Partition(p) for p in sorted(out)]


def multinomial(n: int, parts: Sequence[int]) -> Fraction:
    """n! / prod(part!) for parts summing to n."""
    if sum(parts) != n:
        raise InvalidArgument(f"parts {list(parts)} do not sum to {n}")
    if any(p < 0 for p in parts):
        raise InvalidArgument(f"negative part in {list(parts)}")
    value = factorial(n)
    for p in parts:
        value //= factorial(p)
    return Fraction(value)


def z_of(partition: Partition) -> Fraction:
    """Centralizer order prod_i i^{m_i} m_i! of a permutation of cycle type partition."""
    value = 1
    for part, mult in partition.multiplicities().items():
        value *= part**mult * factorial(mult)
    return Fraction(value)
