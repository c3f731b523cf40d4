"""Reflections of diagrams in the horizontal and vertical axes."""

from typing import Callable, Dict

from src.diagram.diagram import Diagram, compose_all, tensor_all
from src.diagram.objects import Gen
from src.diagram.term import Term
from src.diagram.vertices import merge_svs, split_ssv
from src.utils.errors import InvalidArgument

_UPSIDE_DOWN: Dict[Gen, Gen] = {
    Gen.CUP_S: Gen.CAP_S,
    Gen.CAP_S: Gen.CUP_S,
    Gen.CUP_V: Gen.CAP_V,
    Gen.CAP_V: Gen.CUP_V,
    Gen.CROSS_SV: Gen.CROSS_VS,
    Gen.CROSS_VS: Gen.CROSS_SV,
    Gen.MERGE_VSS: Gen.SPLIT_VSS,
    Gen.SPLIT_VSS: Gen.MERGE_VSS,
}

_MIRRORED: Dict[Gen, Gen] = {
    Gen.CROSS_SV: Gen.CROSS_VS,
    Gen.CROSS_VS: Gen.CROSS_SV,
}


def _flip_box(gen: Gen) -> Diagram:
    return Diagram.generator(_UPSIDE_DOWN.get(gen, gen))


def _mirror_box(gen: Gen) -> Diagram:
    if gen is Gen.MERGE_VSS:
        return merge_svs()
    if gen is Gen.SPLIT_VSS:
        return split_ssv()
    return Diagram.generator(_MIRRORED.get(gen, gen))


def _reflect_terms(
    f: Diagram, domain: str, codomain: str, term_image: Callable[[Term], Diagram]
) -> Diagram:
    out = Diagram.zero(domain, codomain)
    for term, coeff in f.terms.items():
        out = out + term_image(term).scale(coeff)
    return out


def reflect_h(f: Diagram) -> Diagram:
    """
    Turn a diagram upside down.

    Domain and codomain swap, slices run in reverse order, cups and caps trade
    places and the merge vertex mVSS trades places with the split sVSS, so reflecting
    twice gives back the same diagram.
    """

    def image(term: Term) -> Diagram:
        layers = [
            tensor_all([_flip_box(box) for box in boxes]) for boxes in reversed(term.slices)
        ]
        if not layers:
            return Diagram.identity(term.domain)
        return compose_all(*layers)

    return _reflect_terms(f, f.codomain, f.domain, image)


def reflect_v(f: Diagram) -> Diagram:
    """
    Mirror a diagram left to right.

    Object words are reversed, each slice is read right to left, the merge vertex
    becomes S⊗V → S, the split becomes S → S⊗V, and each term picks up (-1) to the number of its dots.
    """

    def image(term: Term) -> Diagram:
        layers = [
            tensor_all([_mirror_box(box) for box in reversed(boxes)]) for boxes in term.slices
        ]
        sign = -1 if term.dot_count % 2 else 1
        if not layers:
            return Diagram.identity(term.domain[::-1]).scale(sign)
        return compose_all(*layers).scale(sign)

    return _reflect_terms(f, f.domain[::-1], f.codomain[::-1], image)


def reflect(f: Diagram, axis: str) -> Diagram:
    """
    Reflect f in the given axis.

    Args:
        f: The diagram.
        axis: "horizontal" (upside down) or "vertical" (left to right).

    Returns:
        Diagram: The reflected diagram.

    Raises:
        InvalidArgument: For any other axis name.
    """
    if axis in ("horizontal", "h"):
        return reflect_h(f)
    if axis in ("vertical", "v"):
        return reflect_v(f)
    raise InvalidArgument(f"unknown reflection axis: {axis!r}")
