"""Generating objects and morphisms of the spin Brauer category."""

from enum import Enum
from typing import Dict, Tuple

from src.clifford.module_word import LETTERS
from src.utils.errors import InvalidArgument


class CompositionError(ValueError):
    """Raised when two diagrams are composed along mismatched object words."""

    pass


class Gen(str, Enum):
    """Generator boxes, valued by their DSL spelling."""

    ID_S = "idS"
    ID_V = "idV"
    CUP_S = "cupS"
    CAP_S = "capS"
    CUP_V = "cupV"
    CAP_V = "capV"
    CROSS_SS = "xSS"
    CROSS_SV = "xSV"
    CROSS_VS = "xVS"
    CROSS_VV = "xVV"
    MERGE_VSS = "mVSS"
    SPLIT_VSS = "sVSS"
    DOT_S = "dotS"
    DOT_V = "dotV"

    @property
    def domain(self) -> str:
        return SIGNATURES[self][0]

    @property
    def codomain(self) -> str:
        return SIGNATURES[self][1]

    @property
    def is_identity(self) -> bool:
        return self in (Gen.ID_S, Gen.ID_V)

    @property
    def is_dot(self) -> bool:
        return self in (Gen.DOT_S, Gen.DOT_V)

    @property
    def is_crossing(self) -> bool:
        return self in (Gen.CROSS_SS, Gen.CROSS_SV, Gen.CROSS_VS, Gen.CROSS_VV)

    def __str__(self) -> str:
        return self.value


SIGNATURES: Dict[Gen, Tuple[str, str]] = {
    Gen.ID_S: ("S", "S"),
    Gen.ID_V: ("V", "V"),
    Gen.CUP_S: ("", "SS"),
    Gen.CAP_S: ("SS", ""),
    Gen.CUP_V: ("", "VV"),
    Gen.CAP_V: ("VV", ""),
    Gen.CROSS_SS: ("SS", "SS"),
    Gen.CROSS_SV: ("SV", "VS"),
    Gen.CROSS_VS: ("VS", "SV"),
    Gen.CROSS_VV: ("VV", "VV"),
    Gen.MERGE_VSS: ("VS", "S"),
    Gen.SPLIT_VSS: ("S", "VS"),
    Gen.DOT_S: ("S", "S"),
    Gen.DOT_V: ("V", "V"),
}


def identity_gen(letter: str) -> Gen:
    if letter == "S":
        return Gen.ID_S
    if letter == "V":
        return Gen.ID_V
    raise InvalidArgument(f"unknown object letter: {letter!r}")


def cup_gen(letter: str) -> Gen:
    return Gen.CUP_S if letter == "S" else Gen.CUP_V


def cap_gen(letter: str) -> Gen:
    return Gen.CAP_S if letter == "S" else Gen.CAP_V


def dot_gen(letter: str) -> Gen:
    return Gen.DOT_S if letter == "S" else Gen.DOT_V


def crossing_gen(left: str, right: str) -> Gen:
    """Crossing with domain left+right."""
    return Gen(f"x{left}{right}")


def check_word(word: str) -> str:
    """Validate an object word over {S, V}; the empty string is the unit."""
    for letter in word:
        if letter not in LETTERS:
            raise InvalidArgument(f"object words use the letters S and V, got {word!r}")
    return word
