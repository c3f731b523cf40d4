"""Tensor words in the spin and vector modules."""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Tuple

from src.utils.errors import InvalidArgument

LETTERS = ("S", "V")


def spin_rank(N: int) -> int:
    """n = floor(N / 2)."""
    return N // 2


def letter_dimension(letter: str, N: int) -> int:
    if letter == "S":
        return 2 ** spin_rank(N)
    if letter == "V":
        return N
    raise InvalidArgument(f"unknown module letter: {letter!r}")


def parse_word(text: str) -> str:
    """Accept 'SVS', 'S,V,S', 'empty' or '' and return the bare letter string."""
    cleaned = text.replace(",", "").replace(" ", "")
    if cleaned in ("", "empty", "1"):
        return ""
    for letter in cleaned:
        if letter not in LETTERS:
            raise InvalidArgument(f"module words use only S and V, got {text!r}")
    return cleaned


@dataclass(frozen=True)
class ModuleWord:
    """
    A tensor product of spin (S) and vector (V) factors.

    Basis vectors are tuples of per-factor indices: an n-bit mask for S and an
    e-index 0..N-1 for V. Flattening is row-major with the leftmost factor slowest.
    """

    letters: str
    N: int
    epsilon: int = 1

    def __post_init__(self) -> None:
        if self.N < 0:
            raise InvalidArgument(f"N must be non-negative, got {self.N}")
        if self.epsilon not in (1, -1):
            raise InvalidArgument(f"epsilon must be +1 or -1, got {self.epsilon}")
        parse_word(self.letters)

    @property
    def n(self) -> int:
        return spin_rank(self.N)

    @cached_property
    def factor_dims(self) -> Tuple[int, ...]:
        return tuple(letter_dimension(letter, self.N) for letter in self.letters)

    @cached_property
    def dimension(self) -> int:
        total = 1
        for dim in self.factor_dims:
            total *= dim
        return total

    def index(self, parts: Sequence[int]) -> int:
        flat = 0
        for part, dim in zip(parts, self.factor_dims):
            flat = flat * dim + part
        return flat

    def unindex(self, flat: int) -> Tuple[int, ...]:
        parts: List[int] = []
        for dim in reversed(self.factor_dims):
            flat, part = divmod(flat, dim)
            parts.append(part)
        return tuple(reversed(parts))

    def sub(self, letters: str) -> "ModuleWord":
        return ModuleWord(letters, self.N, self.epsilon)

    def __add__(self, other: "ModuleWord") -> "ModuleWord":
        return ModuleWord(self.letters + other.letters, self.N, self.epsilon)

    def __str__(self) -> str:
        return self.letters or "empty"
