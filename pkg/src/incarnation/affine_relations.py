"""Dot relations of the affine category and the operator identity behind them."""

from fractions import Fraction
from itertools import product
from typing import List

from src.clifford import ModuleWord, embed_block, quadratic_ops
from src.diagram import (
    Diagram,
    Gen,
    barbell,
    compose_all,
    merge_svs,
    reflect_v,
    split_ssv,
    split_svs,
    whisker,
)
from src.diagram.objects import cap_gen, crossing_gen, cup_gen, dot_gen
from src.incarnation.functor import affine_incarnate
from src.incarnation.params import IncarnationParams
from src.incarnation.relations import COLORS, RelationInstance, _rel
from src.linalg import LinearMap


def _g(gen: Gen) -> Diagram:
    return Diagram.generator(gen)


def _x(left: str, right: str) -> Diagram:
    return _g(crossing_gen(left, right))


def _dot(color: str, left: str = "", right: str = "") -> Diagram:
    return whisker(left, _g(dot_gen(color)), right)


def _contraction_vv() -> Diagram:
    """2(id - capV ; cupV) on V⊗V."""
    contract = compose_all(_g(Gen.CAP_V), _g(Gen.CUP_V))
    return (Diagram.identity("VV") - contract).scale(2)


def spin_exchange() -> Diagram:
    """
    (1/8)(T1 - T2) on S⊗S, the value of a dot sliding through xSS.

    T1 passes a vector edge from the left strand around the crossing into the right
    strand; T2 is barbell ; xSS ; barbell.
    """
    t1 = compose_all(
        whisker("", split_svs(), "S"),
        whisker("VS", split_ssv(), ""),
        whisker("V", _x("S", "S"), "V"),
        whisker("", _g(Gen.MERGE_VSS), "SV"),
        whisker("S", merge_svs(), ""),
    )
    b = barbell(2, 1)
    t2 = compose_all(b, _x("S", "S"), b)
    return (t1 - t2).scale(Fraction(1, 8))


def _mixed_exchange(left: str, kappa: int) -> Diagram:
    """x - kappa * (vertex ; rotated vertex) on the mixed word left+other."""
    if left == "S":
        loop = compose_all(merge_svs(), split_svs())
        return _x("S", "V") - loop.scale(kappa)
    loop = compose_all(_g(Gen.MERGE_VSS), split_ssv())
    return _x("V", "S") - loop.scale(kappa)


def _exchange(a: str, b: str, kappa: int) -> Diagram:
    if a == b == "V":
        return _contraction_vv()
    if a == b == "S":
        return spin_exchange()
    return _mixed_exchange(a, kappa)


def defining_dot_relations(kappa: int) -> List[RelationInstance]:
    """dotcross1, dotcross2, dotcap and dotvertex."""
    out = []
    for a, b in product(COLORS, repeat=2):
        name = "dotcross1" if a == b else "dotcross2"
        lhs = compose_all(_dot(a, "", b), _x(a, b)) - compose_all(_x(a, b), _dot(a, b, ""))
        out.append(_rel(name, f"[{a}{b}]", lhs, _exchange(a, b, kappa)))
    for a in COLORS:
        cap = _g(cap_gen(a))
        out.append(
            _rel(
                "dotcap",
                f"[{a}]",
                compose_all(_dot(a, "", a), cap),
                compose_all(_dot(a, a, ""), cap).scale(-1),
            )
        )
    merge = _g(Gen.MERGE_VSS)
    rhs = compose_all(_dot("V", "", "S"), merge) + compose_all(_dot("S", "V", ""), merge)
    out.append(_rel("dotvertex", "[VSS]", compose_all(merge, _dot("S")), rhs))
    return out


def derived_dot_relations(kappa: int) -> List[RelationInstance]:
    """dotcross3, dotcross4, dotcup and dotvertex2."""
    out = []
    for a, b in product(COLORS, repeat=2):
        name = "dotcross3" if a == b else "dotcross4"
        lhs = compose_all(_x(a, b), _dot(b, "", a)) - compose_all(_dot(b, a, ""), _x(a, b))
        out.append(_rel(name, f"[{a}{b}]", lhs, _exchange(a, b, kappa)))
    for a in COLORS:
        cup = _g(cup_gen(a))
        out.append(
            _rel(
                "dotcup",
                f"[{a}]",
                compose_all(cup, _dot(a, "", a)),
                compose_all(cup, _dot(a, a, "")).scale(-1),
            )
        )
    merge = merge_svs()
    rhs = compose_all(_dot("S", "", "V"), merge) + compose_all(_dot("V", "S", ""), merge)
    out.append(_rel("dotvertex2", "[SVS]", compose_all(merge, _dot("S")), rhs))
    return out


def mirrored(instances: List[RelationInstance]) -> List[RelationInstance]:
    """Vertical reflections of relation instances, which hold as well."""
    return [
        RelationInstance(
            f"{inst.relation}-mirror",
            inst.instance,
            tuple(reflect_v(f) for f in inst.lhs),
            tuple(reflect_v(f) for f in inst.rhs),
        )
        for inst in instances
    ]


def affine_relation_instances(params: IncarnationParams) -> List[RelationInstance]:
    defining = defining_dot_relations(params.kappa)
    instances = defining + derived_dot_relations(params.kappa) + mirrored(defining)
    return sorted(instances, key=lambda inst: inst.instance_id)


def two_factor_omega(params: IncarnationParams, letters: str) -> LinearMap:
    """2Ω between the first two factors of the word, identity on the rest."""
    word = params.word(letters)
    pair = quadratic_ops("omega", word.sub(letters[:2]), split=1)
    return embed_block(word, 0, 2, pair.scale(2)).with_words(word, word)


def enmore_sides(params: IncarnationParams, letters: str):
    """
    Both sides of the dot-splitting identity on a three-letter word M1 M2 M3.

    The left side is the dot across (M1 | M2 M3) minus the dot across (M1 | M3)
    conjugated past M2; the right side is 2Ω between M1 and M2.

    Returns:
        Tuple[LinearMap, LinearMap]: (left side, right side).
    """
    a, b, tail = letters[0], letters[1], letters[2:]
    module: ModuleWord = params.word(tail)
    conjugated = compose_all(_x(a, b), _dot(a, b, ""), _x(b, a))
    diagram = _dot(a, "", b) - conjugated
    return affine_incarnate(diagram, params, module), two_factor_omega(params, letters)
