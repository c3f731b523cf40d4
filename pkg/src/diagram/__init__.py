from src.diagram.builders import (
    absorbing_loop,
    antisymmetrizer,
    barbell,
    bubble,
    crossing_at,
    eggs_diagram,
    emitting_loop,
    extra_lhs,
    extra_rhs,
    falling_factorial,
    gen,
    grapes_sides,
    identity,
    monkey1,
    monkey1_value,
    monkey2,
    nested_caps,
    nested_cups,
    permutation_diagram,
    pi_r,
    spoke_bottom,
    spoke_top,
    spoked_loop,
    sv_projector,
    v_projectors,
)
from src.diagram.diagram import Diagram, compose, compose_all, tensor, tensor_all, whisker
from src.diagram.dsl import DslSyntaxError, parse_dsl, to_dsl
from src.diagram.objects import SIGNATURES, CompositionError, Gen
from src.diagram.reflect import reflect, reflect_h, reflect_v
from src.diagram.term import Term
from src.diagram.vertices import (
    merge_ssv,
    merge_svs,
    merge_vss,
    split_ssv,
    split_svs,
    split_svs_expanded,
    split_vss,
)

__all__ = [
    "CompositionError",
    "Diagram",
    "DslSyntaxError",
    "Gen",
    "SIGNATURES",
    "Term",
    "absorbing_loop",
    "antisymmetrizer",
    "barbell",
    "bubble",
    "compose",
    "compose_all",
    "crossing_at",
    "eggs_diagram",
    "emitting_loop",
    "extra_lhs",
    "extra_rhs",
    "falling_factorial",
    "gen",
    "grapes_sides",
    "identity",
    "merge_ssv",
    "merge_svs",
    "merge_vss",
    "monkey1",
    "monkey1_value",
    "monkey2",
    "nested_caps",
    "nested_cups",
    "parse_dsl",
    "permutation_diagram",
    "pi_r",
    "reflect",
    "reflect_h",
    "reflect_v",
    "spoke_bottom",
    "spoke_top",
    "spoked_loop",
    "split_ssv",
    "split_svs",
    "split_svs_expanded",
    "split_vss",
    "sv_projector",
    "tensor",
    "tensor_all",
    "to_dsl",
    "v_projectors",
    "whisker",
]
