"""Named diagrams: antisymmetrizers, idempotents, barbells, bubbles and spoked loops."""

from fractions import Fraction
from math import factorial
from typing import List, Tuple

from src.combinatorics import Permutation, all_permutations, sign
from src.diagram.diagram import Diagram, compose_all, whisker
from src.diagram.objects import Gen, cap_gen, crossing_gen, cup_gen, dot_gen
from src.diagram.reflect import reflect_h
from src.diagram.vertices import merge_svs, split_ssv, split_svs
from src.exactnum import D_PARAM, ParamScalar, d_PARAM
from src.utils.errors import InvalidArgument


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidArgument(message)


def _color(color: str) -> str:
    _require(color in ("S", "V"), f"colour must be S or V, got {color!r}")
    return color


def gen(name: str) -> Diagram:
    return Diagram.generator(Gen(name))


def identity(word: str) -> Diagram:
    return Diagram.identity(word)


def crossing_at(word: str, k: int) -> Diagram:
    """Crossing of the strands at 1-based positions k and k+1 of word."""
    _require(1 <= k < len(word), f"no strands {k}, {k + 1} in {word or 'empty'}")
    cross = Diagram.generator(crossing_gen(word[k - 1], word[k]))
    return whisker(word[: k - 1], cross, word[k + 1 :])


def permutation_diagram(p: Permutation, word: str) -> Diagram:
    """Strand at position i of word ends at position p(i); crossings only."""
    _require(p.size == len(word), f"permutation of {p.size} strands on {word or 'empty'}")
    result = Diagram.identity(word)
    current = word
    for k in p.adjacent_transpositions():
        step = crossing_at(current, k)
        result = result.then(step)
        current = step.codomain
    return result


def antisymmetrizer(r: int) -> Diagram:
    """Signed sum over all permutation diagrams on r vector strands; r=0 gives 1."""
    _require(r >= 0, f"antisymmetrizer needs r >= 0, got {r}")
    word = "V" * r
    result = Diagram.zero(word, word)
    for p in all_permutations(r):
        result = result + permutation_diagram(p, word).scale(sign(p))
    return result


def _emit_from_left(r: int) -> Diagram:
    """S⊗S → V^r⊗S⊗S by r splits of the left spin strand; new V's sit next to it."""
    result = Diagram.identity("SS")
    for k in range(r):
        result = result.then(whisker("V" * k, split_svs(), "S"))
    return result


def _absorb_into_left(r: int) -> Diagram:
    """V^r⊗S⊗S → S⊗S, merging V_r first and V_1 last into the left spin strand."""
    result = Diagram.identity("V" * r + "SS")
    for k in range(r, 0, -1):
        result = result.then(whisker("V" * (k - 1), Diagram.generator(Gen.MERGE_VSS), "S"))
    return result


def _cap_right(r: int) -> Diagram:
    return whisker("V" * r, Diagram.generator(Gen.CAP_S), "")


def _cup_right(r: int) -> Diagram:
    return whisker("V" * r, Diagram.generator(Gen.CUP_S), "")


def spoke_bottom(r: int) -> Diagram:
    """S⊗S → V^r."""
    return _emit_from_left(r).then(_cap_right(r))


def spoke_top(r: int) -> Diagram:
    """V^r → S⊗S."""
    return _cup_right(r).then(_absorb_into_left(r))


def emitting_loop(r: int) -> Diagram:
    """Spin loop with r outgoing vector spokes: unit → V^r."""
    _require(r >= 0, f"spoke count must be >= 0, got {r}")
    return Diagram.generator(Gen.CUP_S).then(spoke_bottom(r))


def absorbing_loop(r: int) -> Diagram:
    """Spin loop with r incoming vector spokes: V^r → unit."""
    _require(r >= 0, f"spoke count must be >= 0, got {r}")
    return spoke_top(r).then(Diagram.generator(Gen.CAP_S))


def spoked_loop(r: int, alt: bool) -> Diagram:
    """Emitting loop, followed by the antisymmetrizer on its spokes when alt is set."""
    loop = emitting_loop(r)
    return loop.then(antisymmetrizer(r)) if alt else loop


def pi_r(r: int) -> Diagram:
    """
    Idempotent S⊗S → S⊗S projecting onto the Λ^r(V) summand.

    Args:
        r: Number of antisymmetrized vector strands, r >= 0.

    Returns:
        Diagram: 1/(D·(r!)²) times bottom ; alt_r ; top.
    """
    _require(r >= 0, f"pi needs r >= 0, got {r}")
    coeff = ParamScalar(Fraction(1, factorial(r) ** 2)) / D_PARAM
    return compose_all(spoke_bottom(r), antisymmetrizer(r), spoke_top(r)).scale(coeff)


def v_projectors() -> List[Diagram]:
    """The trivial, traceless symmetric and antisymmetric idempotents on V⊗V."""
    ident = Diagram.identity("VV")
    swap = Diagram.generator(Gen.CROSS_VV)
    contract = Diagram.generator(Gen.CAP_V).then(Diagram.generator(Gen.CUP_V))
    trivial = contract.scale(ParamScalar(1) / d_PARAM)
    symmetric = (ident + swap).scale(Fraction(1, 2)) - trivial
    antisymmetric = (ident - swap).scale(Fraction(1, 2))
    return [trivial, symmetric, antisymmetric]


def sv_projector() -> Diagram:
    """Idempotent on S⊗V projecting onto its S summand."""
    return merge_svs().then(split_ssv()).scale(ParamScalar(1) / d_PARAM)


def _barbell_pair() -> Diagram:
    return whisker("", split_ssv(), "S").then(whisker("S", Diagram.generator(Gen.MERGE_VSS), ""))


def barbell(r: int, t: int) -> Diagram:
    """
    Vector edge between spin strands t and t+1 of S^{⊗r}.

    The edge is expanded as a split on strand t followed by a merge into strand t+1.
    """
    _require(r >= 2, f"barbell needs at least two strands, got {r}")
    _require(1 <= t <= r - 1, f"barbell position must lie in 1..{r - 1}, got {t}")
    return whisker("S" * (t - 1), _barbell_pair(), "S" * (r - t - 1))


def bubble(color: str, dots: int = 0, right: bool = False) -> Diagram:
    """Closed loop of the given colour carrying dots on its left (or right) strand."""
    color = _color(color)
    _require(dots >= 0, f"dot count must be >= 0, got {dots}")
    result = Diagram.generator(cup_gen(color))
    single = Diagram.generator(dot_gen(color))
    dot = whisker(color, single, "") if right else whisker("", single, color)
    for _ in range(dots):
        result = result.then(dot)
    return result.then(Diagram.generator(cap_gen(color)))


def eggs_diagram(N: int) -> Diagram:
    """Antisymmetrized spoked loop closed against a plain spoked loop with N spokes."""
    _require(N >= 1, f"eggs needs N >= 1, got {N}")
    return spoked_loop(N, True).then(reflect_h(spoked_loop(N, False)))


def extra_lhs(N: int) -> Diagram:
    """alt_N ; absorbing loop ; emitting loop ; alt_N on V^{⊗N}."""
    _require(N >= 1, f"extra needs N >= 1, got {N}")
    alt = antisymmetrizer(N)
    return compose_all(alt, absorbing_loop(N), emitting_loop(N), alt)


def extra_rhs(N: int) -> Diagram:
    """D²(N!)² alt_N."""
    _require(N >= 1, f"extra needs N >= 1, got {N}")
    return antisymmetrizer(N).scale(D_PARAM * D_PARAM * factorial(N) ** 2)


def grapes_sides() -> Tuple[Diagram, Diagram]:
    """Both sides of the three-strand barbell identity on S^{⊗3}."""
    b1, b2 = barbell(3, 1), barbell(3, 2)
    lhs = (
        compose_all(b2, b1, b1)
        + compose_all(b1, b2, b1).scale(2)
        + compose_all(b1, b1, b2)
    )
    return lhs, b2.scale(4)


def monkey1(r: int) -> Diagram:
    """Spin loop whose r antisymmetrized spokes return into the same loop."""
    _require(r >= 0, f"monkey1 needs r >= 0, got {r}")
    return compose_all(
        Diagram.generator(Gen.CUP_S),
        _emit_from_left(r),
        whisker("", antisymmetrizer(r), "SS"),
        _absorb_into_left(r),
        Diagram.generator(Gen.CAP_S),
    )


def nested_cups(r: int) -> Diagram:
    """unit → V^{2r}, strand i paired with strand 2r+1-i."""
    result = Diagram.identity("")
    cup = Diagram.generator(Gen.CUP_V)
    for k in range(r):
        result = result.then(whisker("V" * k, cup, "V" * k))
    return result


def nested_caps(r: int) -> Diagram:
    return reflect_h(nested_cups(r))


def monkey2(r: int) -> Diagram:
    """Closure of the antisymmetrizer on r vector strands."""
    _require(r >= 0, f"monkey2 needs r >= 0, got {r}")
    return compose_all(
        nested_cups(r), whisker("", antisymmetrizer(r), "V" * r), nested_caps(r)
    )


def monkey1_value(r: int) -> ParamScalar:
    """r!·D·d(d-1)⋯(d-r+1)."""
    return D_PARAM * factorial(r) * falling_factorial(r)


def falling_factorial(r: int) -> ParamScalar:
    """d(d-1)⋯(d-r+1)."""
    value = ParamScalar(1)
    for k in range(r):
        value = value * (d_PARAM - k)
    return value


BUILDERS = {
    "alt": antisymmetrizer,
    "pi": pi_r,
    "barbell": barbell,
    "bubble": bubble,
    "spokedloop": spoked_loop,
    "eggs": eggs_diagram,
    "monkey1": monkey1,
    "monkey2": monkey2,
}
