"""
Tests for the diagram calculus, named builders, reflections and the text syntax.
"""

import pytest

from src.combinatorics import Permutation
from src.diagram import (
    CompositionError,
    Diagram,
    DslSyntaxError,
    Gen,
    Term,
    antisymmetrizer,
    barbell,
    bubble,
    compose,
    crossing_at,
    falling_factorial,
    merge_ssv,
    merge_svs,
    monkey1,
    monkey1_value,
    monkey2,
    nested_cups,
    parse_dsl,
    permutation_diagram,
    pi_r,
    reflect,
    reflect_h,
    reflect_v,
    split_ssv,
    split_svs,
    split_vss,
    tensor,
    to_dsl,
    whisker,
)
from src.diagram.dsl import _parser
from src.exactnum import D_PARAM, d_PARAM
from src.utils.errors import InvalidArgument


def _gen(name):
    return Diagram.generator(Gen(name))


class TestTerm:
    """Test suite for layered terms."""

    def test_identity_slices_are_dropped(self):
        """Test that a slice of identities does not change a term."""
        term = Term("SV", ((Gen.ID_S, Gen.ID_V),))
        assert term == Term.identity("SV")
        assert term.codomain == "SV"

    def test_slice_type_mismatch(self):
        """Test that a slice expecting the wrong word raises CompositionError."""
        with pytest.raises(CompositionError):
            Term("S", ((Gen.CAP_S,),))

    def test_interchange_normal_form(self):
        """Test that independent boxes in either order share a normal form."""
        first = Term("SV", ((Gen.DOT_S, Gen.ID_V), (Gen.ID_S, Gen.DOT_V)))
        second = Term("SV", ((Gen.ID_S, Gen.DOT_V), (Gen.DOT_S, Gen.ID_V)))
        assert first != second
        assert first.normal_form() == second.normal_form()
        assert first.dot_count == 2

    def test_adjacent_cups_normal_form(self):
        """Test that two cups side by side share a normal form in either order."""
        left_first = Term("", ((Gen.CUP_S,), (Gen.ID_S, Gen.ID_S, Gen.CUP_V)))
        right_first = Term("", ((Gen.CUP_V,), (Gen.CUP_S, Gen.ID_V, Gen.ID_V)))
        assert left_first.codomain == right_first.codomain == "SSVV"
        assert left_first.normal_form() == right_first.normal_form()
        cap_then_cup = Term("SS", ((Gen.CAP_S,), (Gen.CUP_V,)))
        cup_then_cap = Term(
            "SS", ((Gen.CUP_V, Gen.ID_S, Gen.ID_S), (Gen.ID_V, Gen.ID_V, Gen.CAP_S))
        )
        assert cap_then_cup.normal_form() == cup_then_cap.normal_form()

    def test_tensor_pads_shorter_side(self):
        """Test that tensoring terms of different heights keeps both types."""
        tall = Term.box(Gen.CUP_S).then(Term("SS", ((Gen.CROSS_SS,),)))
        short = Term.box(Gen.DOT_V)
        combined = tall.tensor(short)
        assert combined.domain == "V"
        assert combined.codomain == "SSV"
        assert len(combined.slices) == 2


class TestDiagram:
    """Test suite for linear combinations of terms."""

    def test_compose_mismatch(self):
        """Test that composing S->S with V->V raises CompositionError."""
        with pytest.raises(CompositionError):
            _gen("idS").then(_gen("idV"))

    def test_add_mismatch(self):
        """Test that adding non-parallel diagrams raises CompositionError."""
        with pytest.raises(CompositionError):
            _gen("xSV") + _gen("xVS")

    def test_cancellation(self):
        """Test that opposite coefficients leave the zero morphism."""
        f = _gen("xVV")
        zero = f - f
        assert zero.is_zero()
        assert str(zero) == "0 * (idV * idV)"
        assert str(Diagram.zero("S", "V")) == "0 : S->V"

    def test_bilinearity(self):
        """Test (a f + g) ; h = a (f ; h) + g ; h."""
        f, g, h = _gen("dotV"), _gen("idV"), _gen("dotV")
        assert (f.scale(d_PARAM) + g).then(h) == f.then(h).scale(d_PARAM) + g.then(h)

    def test_closed_and_dots(self):
        """Test the closed and dotted flags."""
        assert bubble("V").is_closed
        assert not bubble("V").has_dots
        assert bubble("S", 2).has_dots

    def test_zigzag(self):
        """Test that the snake shape is an endomorphism of V."""
        zigzag = compose(tensor(_gen("idV"), _gen("cupV")), tensor(_gen("capV"), _gen("idV")))
        assert (zigzag.domain, zigzag.codomain) == ("V", "V")
        assert tensor(Diagram.identity("S"), Diagram.identity("V")) == Diagram.identity("SV")

    def test_whisker_types(self):
        """Test id_left (x) f (x) id_right."""
        f = whisker("S", _gen("cupV"), "V")
        assert (f.domain, f.codomain) == ("SV", "SVVV")

    def test_invalid_letter(self):
        """Test that objects outside {S, V} are rejected."""
        with pytest.raises(InvalidArgument):
            Diagram.identity("SW")


class TestBuilders:
    """Test suite for named diagrams."""

    def test_antisymmetrizer_two(self):
        """Test alt(2) = id - swap."""
        expected = Diagram.identity("VV") - _gen("xVV")
        assert antisymmetrizer(2) == expected
        assert len(antisymmetrizer(3)) == 6
        assert antisymmetrizer(0) == Diagram.identity("")

    def test_permutation_diagram(self):
        """Test the crossing diagram of a transposition on S (x) V."""
        p = permutation_diagram(Permutation([2, 1]), "SV")
        assert p == _gen("xSV")
        with pytest.raises(InvalidArgument):
            permutation_diagram(Permutation([2, 1]), "SVS")

    def test_crossing_at(self):
        """Test the types of a crossing in the middle of a word."""
        f = crossing_at("SVS", 2)
        assert (f.domain, f.codomain) == ("SVS", "SSV")
        with pytest.raises(InvalidArgument):
            crossing_at("SV", 2)

    def test_vertex_types(self):
        """Test the domains and codomains of the rotated vertices."""
        assert (split_svs().domain, split_svs().codomain) == ("S", "VS")
        assert (merge_svs().domain, merge_svs().codomain) == ("SV", "S")
        assert (split_ssv().domain, split_ssv().codomain) == ("S", "SV")
        assert (merge_ssv().domain, merge_ssv().codomain) == ("SS", "V")
        assert (split_vss().domain, split_vss().codomain) == ("V", "SS")

    def test_barbell_guards(self):
        """Test barbell types and argument ranges."""
        assert barbell(3, 2).domain == "SSS"
        with pytest.raises(InvalidArgument):
            barbell(1, 1)
        with pytest.raises(InvalidArgument):
            barbell(3, 3)

    def test_projector_types(self):
        """Test that pi_r is an endomorphism of S (x) S."""
        p = pi_r(2)
        assert (p.domain, p.codomain) == ("SS", "SS")
        with pytest.raises(InvalidArgument):
            pi_r(-1)

    def test_monkeys_are_closed(self):
        """Test that both monkey diagrams are closed."""
        assert monkey1(2).is_closed
        assert monkey2(3).is_closed
        assert nested_cups(2).codomain == "VVVV"

    def test_closed_form_values(self):
        """Test the falling factorial and r! D falling factorial."""
        assert str(falling_factorial(3)) == "d^3 - 3*d^2 + 2*d"
        assert monkey1_value(1) == D_PARAM * d_PARAM
        assert falling_factorial(0) == 1


class TestReflections:
    """Test suite for horizontal and vertical reflections."""

    def test_horizontal_swaps_cups_and_caps(self):
        """Test that reflecting a cup gives a cap."""
        assert reflect_h(_gen("cupS")) == _gen("capS")
        assert reflect_h(_gen("xSV")) == _gen("xVS")

    def test_horizontal_involution(self):
        """Test reflect_h twice on a diagram without vertices."""
        f = _gen("cupS").then(_gen("xSS")) + _gen("cupS").scale(D_PARAM)
        assert reflect_h(reflect_h(f)) == f

    @pytest.mark.parametrize(
        "build",
        [
            lambda: _gen("mVSS"),
            split_svs,
            merge_svs,
            split_ssv,
            merge_ssv,
            split_vss,
            lambda: monkey1(2),
            lambda: split_svs().then(_gen("mVSS")).scale(d_PARAM) - Diagram.identity("S"),
        ],
    )
    def test_horizontal_involution_with_vertices(self, build):
        """Test that reflecting vertex diagrams twice restores them exactly."""
        f = build()
        assert reflect_h(reflect_h(f)) == f

    def test_merge_reflects_to_split(self):
        """Test that the merge and split vertices trade places."""
        assert reflect_h(_gen("mVSS")) == split_svs()
        assert reflect_h(split_svs()) == _gen("mVSS")
        assert reflect_v(_gen("mVSS")) == merge_svs()
        assert reflect_v(split_svs()) == split_ssv()

    @pytest.mark.parametrize(
        "first, second",
        [
            (lambda: _gen("cupS"), lambda: _gen("xSS")),
            (split_svs, lambda: _gen("mVSS")),
            (lambda: _gen("mVSS"), split_ssv),
            (merge_ssv, lambda: _gen("dotV")),
            (lambda: antisymmetrizer(2), lambda: whisker("V", _gen("cupS"), "V")),
        ],
    )
    def test_horizontal_reverses_composition(self, first, second):
        """Test reflect_h(f ; g) = reflect_h(g) ; reflect_h(f)."""
        f, g = first(), second()
        assert reflect_h(f.then(g)) == reflect_h(g).then(reflect_h(f))

    def test_vertical_dot_sign_on_composite(self):
        """Test that a single dotS inside a composite mirrors with a minus sign."""
        assert reflect_v(_gen("dotS")) == -_gen("dotS")
        f = whisker("", _gen("dotS"), "V").then(_gen("xSV"))
        assert reflect_v(f) == -whisker("V", _gen("dotS"), "").then(_gen("xVS"))
        twice = f.then(whisker("V", _gen("dotS"), ""))
        assert reflect_v(twice) == whisker("V", _gen("dotS"), "").then(_gen("xVS")).then(
            whisker("", _gen("dotS"), "V")
        )

    def test_vertical_dot_sign(self):
        """Test that mirroring a dotted bubble moves the dot right with a sign."""
        assert reflect_v(bubble("S", 1)) == -bubble("S", 1, right=True)
        assert reflect_v(bubble("V", 2)) == bubble("V", 2, right=True)

    def test_axis_names(self):
        """Test the axis dispatcher."""
        assert reflect(_gen("cupV"), "h") == _gen("capV")
        with pytest.raises(InvalidArgument):
            reflect(_gen("cupV"), "diagonal")


class TestDsl:
    """Test suite for the diagram text syntax."""

    def test_parse_bubble(self):
        """Test that cupS ; capS is the spin bubble."""
        assert parse_dsl("cupS ; capS") == bubble("S")

    def test_star_means_both_products(self):
        """Test coefficient products and tensor products in one expression."""
        parsed = parse_dsl("2 * d * idS * idV")
        assert parsed == Diagram.identity("SV").scale(2 * d_PARAM)

    def test_linear_combination(self):
        """Test sums and differences."""
        assert parse_dsl("idV * idV - xVV") == antisymmetrizer(2)
        assert parse_dsl("- xVV + xVV").is_zero()

    def test_builders_and_macros(self):
        """Test builder calls and vertex macros."""
        assert parse_dsl("alt(3)") == antisymmetrizer(3)
        assert parse_dsl("barbell(3, 1)") == barbell(3, 1)
        assert parse_dsl("bubble(V, 2)") == bubble("V", 2)
        assert parse_dsl("split_svs ; mVSS") == split_svs().then(_gen("mVSS"))

    def test_rational_coefficients(self):
        """Test powers and quotients of d and D."""
        parsed = parse_dsl("(d^2 - d) / (d - 1) * idS")
        assert parsed == Diagram.identity("S").scale(d_PARAM)

    def test_grammar_builds(self):
        """Test that the grammar compiles and both parameters parse."""
        assert _parser() is _parser()
        assert parse_dsl("D * idS") == Diagram.identity("S").scale(D_PARAM)
        assert parse_dsl("(D - d) * cupS ; capS") == bubble("S").scale(D_PARAM - d_PARAM)
        assert parse_dsl("sVSS ; mVSS") == parse_dsl("split_svs ; mVSS")

    def test_comments(self):
        """Test that '#' comments are ignored."""
        assert parse_dsl("idS # the identity\n") == Diagram.identity("S")

    def test_syntax_errors(self):
        """Test malformed input and bare coefficients."""
        with pytest.raises(DslSyntaxError):
            parse_dsl("idS ;")
        with pytest.raises(DslSyntaxError):
            parse_dsl("3")
        with pytest.raises(DslSyntaxError):
            parse_dsl("cupW")

    def test_type_errors(self):
        """Test that mismatched composition surfaces as CompositionError."""
        with pytest.raises(CompositionError):
            parse_dsl("idS ; idV")

    def test_builder_argument_errors(self):
        """Test that out-of-range builder arguments raise InvalidArgument."""
        with pytest.raises(InvalidArgument):
            parse_dsl("barbell(1, 1)")

    def test_normalized_text(self):
        """Test the printed form and that it parses back."""
        assert to_dsl(antisymmetrizer(2)) == "(idV * idV) - (xVV)"
        for f in (
            antisymmetrizer(3),
            bubble("V", 2),
            _gen("dotS").scale(d_PARAM - 1) + Diagram.identity("S"),
            Diagram.identity("").scale(D_PARAM),
        ):
            assert parse_dsl(to_dsl(f)) == f
