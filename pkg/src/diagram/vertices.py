"""
Rotated trivalent vertices.

``mVSS`` (V⊗S → S) and its upside-down twin ``sVSS`` (S → V⊗S) are generators; ``sVSS``
is defined as cupV ; idV⊗mVSS. Every other orientation of the vertex is a composite of
these with cups and caps, so all rotation signs come out of the incarnation of those
composites.
"""

from src.diagram.diagram import Diagram, compose_all, whisker
from src.diagram.objects import Gen

_CUP_S = Diagram.generator(Gen.CUP_S)
_CAP_S = Diagram.generator(Gen.CAP_S)
_CUP_V = Diagram.generator(Gen.CUP_V)
_MERGE = Diagram.generator(Gen.MERGE_VSS)
_SPLIT = Diagram.generator(Gen.SPLIT_VSS)


def merge_vss() -> Diagram:
    """The generator V⊗S → S."""
    return _MERGE


def split_svs() -> Diagram:
    """The generator S → V⊗S."""
    return _SPLIT


def split_svs_expanded() -> Diagram:
    """S → V⊗S written with the merge vertex and a V cup."""
    return compose_all(whisker("", _CUP_V, "S"), whisker("V", _MERGE, ""))


def merge_svs() -> Diagram:
    """S⊗V → S."""
    return compose_all(
        whisker("SV", _CUP_S, ""),
        whisker("S", _MERGE, "S"),
        whisker("", _CAP_S, "S"),
    )


def split_ssv() -> Diagram:
    """S → S⊗V."""
    return compose_all(
        whisker("S", _CUP_V, ""),
        whisker("SV", _CUP_S, "V"),
        whisker("S", _MERGE, "SV"),
        whisker("", _CAP_S, "SV"),
    )


def merge_ssv() -> Diagram:
    """S⊗S → V."""
    return compose_all(whisker("", split_svs(), "S"), whisker("V", _CAP_S, ""))


def split_vss() -> Diagram:
    """V → S⊗S."""
    return compose_all(whisker("", _CUP_S, "V"), whisker("S", merge_svs(), ""))


MACROS = {
    "split_svs": split_svs,
    "merge_svs": merge_svs,
    "split_ssv": split_ssv,
    "merge_ssv": merge_ssv,
    "split_vss": split_vss,
}
