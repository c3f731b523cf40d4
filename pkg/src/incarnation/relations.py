"""Relation instances checked by the verification suites."""

from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import List, Tuple

from src.combinatorics import Permutation
from src.diagram import (
    Diagram,
    Gen,
    absorbing_loop,
    antisymmetrizer,
    bubble,
    compose_all,
    eggs_diagram,
    emitting_loop,
    extra_rhs,
    grapes_sides,
    merge_ssv,
    merge_svs,
    permutation_diagram,
    split_ssv,
    split_svs,
    whisker,
)
from src.diagram.objects import cap_gen, crossing_gen, cup_gen
from src.exactnum import D_PARAM, ParamScalar, d_PARAM
from src.incarnation.params import IncarnationParams
from src.utils.constants import DELIGNE_MAX_LEGS, EXTRA_SLOW_N

COLORS = ("S", "V")


@dataclass(frozen=True)
class RelationInstance:
    """
    One equation between two composites.

    Each side is a chain of diagrams composed in order, so large composites are
    incarnated factor by factor.
    """

    relation: str
    instance: str
    lhs: Tuple[Diagram, ...]
    rhs: Tuple[Diagram, ...]

    @property
    def instance_id(self) -> str:
        return f"{self.relation}:{self.instance}"


def _rel(relation: str, instance: str, lhs, rhs) -> RelationInstance:
    lhs = tuple(lhs) if isinstance(lhs, (list, tuple)) else (lhs,)
    rhs = tuple(rhs) if isinstance(rhs, (list, tuple)) else (rhs,)
    return RelationInstance(relation, instance, lhs, rhs)


def _g(gen: Gen) -> Diagram:
    return Diagram.generator(gen)


def _x(left: str, right: str) -> Diagram:
    return _g(crossing_gen(left, right))


def _id(word: str) -> Diagram:
    return Diagram.identity(word)


def brauer_instances() -> List[RelationInstance]:
    out: List[RelationInstance] = []
    for a, b in product(COLORS, repeat=2):
        out.append(
            _rel("brauer", f"double-crossing[{a}{b}]", compose_all(_x(a, b), _x(b, a)), _id(a + b))
        )
    for a, b, c in product(COLORS, repeat=3):
        lhs = compose_all(
            whisker("", _x(a, b), c), whisker(b, _x(a, c), ""), whisker("", _x(b, c), a)
        )
        rhs = compose_all(
            whisker(a, _x(b, c), ""), whisker("", _x(a, c), b), whisker(c, _x(a, b), "")
        )
        out.append(_rel("brauer", f"braid[{a}{b}{c}]", lhs, rhs))
    for a in COLORS:
        cup, cap = _g(cup_gen(a)), _g(cap_gen(a))
        left = compose_all(whisker("", cup, a), whisker(a, cap, ""))
        right = compose_all(whisker(a, cup, ""), whisker("", cap, a))
        out.append(_rel("brauer", f"snake-left[{a}]", left, _id(a)))
        out.append(_rel("brauer", f"snake-right[{a}]", right, _id(a)))
        out.append(_rel("brauer", f"curl-cap[{a}]", compose_all(_x(a, a), cap), cap))
    for through, capped in product(COLORS, repeat=2):
        cap = _g(cap_gen(capped))
        lhs = compose_all(whisker("", _x(capped, through), capped), whisker(through, cap, ""))
        rhs = compose_all(whisker(capped, _x(through, capped), ""), whisker("", cap, through))
        out.append(_rel("brauer", f"cap-slide[{through} under {capped}]", lhs, rhs))
    return out


def typhoon_instances() -> List[RelationInstance]:
    out = []
    merge = _g(Gen.MERGE_VSS)
    for t in COLORS:
        lhs = compose_all(whisker("", merge, t), _x("S", t))
        rhs = compose_all(
            whisker("V", _x("S", t), ""), whisker("", _x("V", t), "S"), whisker(t, merge, "")
        )
        out.append(_rel("typhoon", f"merge-slide[{t}]", lhs, rhs))
    return out


def swishy_rhs() -> Diagram:
    """S → S⊗V with the input on the right of the vertex."""
    first = compose_all(_g(Gen.CUP_S), whisker("S", _g(Gen.CUP_V), "S"))
    return compose_all(
        whisker("", first, "S"),
        whisker("SV", _g(Gen.MERGE_VSS), "S"),
        whisker("SV", _g(Gen.CAP_S), ""),
    )


def rotated_merge_svs() -> Diagram:
    """S⊗V → S obtained by rotating split_ssv clockwise."""
    return compose_all(whisker("", split_ssv(), "V"), whisker("S", _g(Gen.CAP_V), ""))


def vertex_instances(kappa: int) -> List[RelationInstance]:
    merge = _g(Gen.MERGE_VSS)
    oist_lhs = compose_all(whisker("V", merge, ""), merge) + compose_all(
        whisker("", _x("V", "V"), "S"), whisker("V", merge, ""), merge
    )
    oist_rhs = whisker("", _g(Gen.CAP_V), "S").scale(2)
    zombie_rhs = compose_all(merge, split_ssv()) + compose_all(
        whisker("V", split_ssv(), ""), whisker("", merge, "V")
    )
    return [
        _rel("swishy", "rotation", split_ssv(), swishy_rhs()),
        _rel("fishy", "crossing-into-vertex", compose_all(_x("S", "V"), merge), merge_svs().scale(kappa)),
        _rel("oist", "clifford", oist_lhs, oist_rhs),
        _rel("lobster", "spin-vector", compose_all(_x("S", "V"), merge), rotated_merge_svs().scale(kappa)),
        _rel("lobster", "vector-spin", compose_all(_x("V", "S"), merge_svs()), merge.scale(kappa)),
        _rel("lobster", "spin-spin", compose_all(_x("S", "S"), merge_ssv()), merge_ssv().scale(kappa)),
        _rel("bump", "vector-loop", compose_all(split_svs(), merge), _id("S").scale(d_PARAM)),
        _rel("zombie", "crossing", _x("V", "S").scale(2 * kappa), zombie_rhs),
    ]


def dimension_instances() -> List[RelationInstance]:
    return [
        _rel("dimrel", "vector-bubble", bubble("V"), _id("").scale(d_PARAM)),
        _rel("dimrel", "spin-bubble", bubble("S"), _id("").scale(D_PARAM)),
    ]


def grapes_instances() -> List[RelationInstance]:
    lhs, rhs = grapes_sides()
    return [_rel("grapes", "three-strands", lhs, rhs)]


def _insertion(r: int, i: int) -> Permutation:
    """Strand r+1 moves left past i strands; those shift right by one."""
    images = list(range(1, r + 2))
    images[r] = r + 1 - i
    for k in range(r + 1 - i, r + 1):
        images[k - 1] = k + 1
    return Permutation(images)


def antisymmetrizer_instances(max_r: int = 3) -> List[RelationInstance]:
    out = []
    for r in range(2, max_r + 2):
        alt = antisymmetrizer(r)
        for s in range(r - 1):
            cross = whisker("V" * s, _x("V", "V"), "V" * (r - s - 2))
            out.append(_rel("absorb", f"r={r},s={s}", compose_all(alt, cross), alt.scale(-1)))
    for r in range(0, max_r + 1):
        word = "V" * (r + 1)
        rhs = Diagram.zero(word, word)
        base = whisker("", antisymmetrizer(r), "V")
        for i in range(r + 1):
            step = permutation_diagram(_insertion(r, i), word)
            rhs = rhs + compose_all(base, step).scale(-1 if i % 2 else 1)
        out.append(_rel("hoff", f"r={r}", antisymmetrizer(r + 1), rhs))
    return out


def deligne_instances(params: IncarnationParams) -> List[RelationInstance]:
    out = []
    for r in range(1, DELIGNE_MAX_LEGS + 1):
        if r % 2 == 1 and r == params.d:
            continue
        zero = Diagram.zero("V" * r, "")
        out.append(_rel("Deligne", f"r={r}", (antisymmetrizer(r), absorbing_loop(r)), zero))
    return out


def extra_instances(params: IncarnationParams, slow: bool = False) -> List[RelationInstance]:
    """The odd-N quotient relation; N >= EXTRA_SLOW_N only with slow set."""
    N = params.N
    if N % 2 == 0 or (N >= EXTRA_SLOW_N and not slow):
        return []
    alt = antisymmetrizer(N)
    lhs = (alt, absorbing_loop(N), emitting_loop(N), alt)
    eggs_value = D_PARAM * D_PARAM * ParamScalar(factorial(N) ** 2)
    return [
        _rel("extra", f"N={N}", lhs, extra_rhs(N)),
        _rel("eggs", f"N={N}", eggs_diagram(N), _id("").scale(eggs_value)),
    ]


def relation_instances(params: IncarnationParams, slow: bool = False) -> List[RelationInstance]:
    """Every relation instance for the plain category at the given parameters."""
    instances = (
        brauer_instances()
        + typhoon_instances()
        + vertex_instances(params.kappa)
        + dimension_instances()
        + grapes_instances()
        + antisymmetrizer_instances()
        + deligne_instances(params)
        + extra_instances(params, slow)
    )
    return sorted(instances, key=lambda inst: inst.instance_id)
