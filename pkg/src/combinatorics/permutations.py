"""Permutations of strand positions."""

from itertools import permutations as _itertools_permutations
from typing import Iterator, List, Sequence, Tuple

from src.utils.errors import InvalidArgument


class Permutation:
    """
    Bijection of 1..r stored as one-line images.

    Composition follows diagram reading order: ``p.then(q)`` applies p first.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]) -> None:
        values = tuple(images)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidArgument(f"not a permutation of 1..{len(values)}: {list(values)}")
        self.images: Tuple[int, ...] = values

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(range(1, r + 1))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Apply self, then other."""
        if other.size != self.size:
            raise InvalidArgument("permutations of different sizes")
        return Permutation(other(self(i)) for i in range(1, self.size + 1))

    def inverse(self) -> "Permutation":
        out = [0] * self.size
        for i, image in enumerate(self.images, start=1):
            out[image - 1] = i
        return Permutation(out)

    def inversions(self) -> int:
        values = self.images
        return sum(
            1
            for i in range(len(values))
            for j in range(i + 1, len(values))
            if values[i] > values[j]
        )

    def cycle_type(self) -> List[int]:
        """Cycle lengths in weakly decreasing order."""
        seen = [False] * self.size
        lengths = []
        for start in range(self.size):
            if seen[start]:
                continue
            length = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = self.images[i] - 1
                length += 1
            lengths.append(length)
        return sorted(lengths, reverse=True)

    def adjacent_transpositions(self) -> List[int]:
        """
        Reduced word for self as positions k of swaps (k, k+1), first swap first.

        Applying the swaps in order to strands laid out as 1..r carries the strand at
        position i to position self(i).
        """
        current = list(range(1, self.size + 1))
        target = [0] * self.size
        for i, image in enumerate(self.images, start=1):
            target[image - 1] = i
        word = []
        # bubble sort the layout towards target
        for goal_pos in range(self.size):
            wanted = target[goal_pos]
            pos = current.index(wanted)
            while pos > goal_pos:
                current[pos - 1], current[pos] = current[pos], current[pos - 1]
                word.append(pos)
                pos -= 1
        return word

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        return "[" + ",".join(str(i) for i in self.images) + "]"

    def __repr__(self) -> str:
        return f"Permutation({self})"


def sign(p: Permutation) -> int:
    """Return +1 for even permutations and -1 for odd ones."""
    return -1 if p.inversions() % 2 else 1


def all_permutations(r: int) -> Iterator[Permutation]:
    """All permutations of 1..r in lexicographic order of images."""
    for images in _itertools_permutations(range(1, r + 1)):
        yield Permutation(images)
