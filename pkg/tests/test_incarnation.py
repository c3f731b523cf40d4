"""
Tests for the incarnation functor and the relation suites.
"""

import random

import pytest

from src.diagram import (
    Diagram,
    Gen,
    antisymmetrizer,
    bubble,
    monkey2,
    parse_dsl,
    split_svs,
    split_svs_expanded,
    whisker,
)
from src.exactnum import ParamScalar, d_PARAM
from src.incarnation import (
    MEMO,
    IncarnationParams,
    RelationInstance,
    VerificationEntry,
    VerificationReport,
    affine_incarnate,
    affine_jobs,
    check_job,
    enmore_report,
    incarnate,
    incarnate_chain,
    relation_instances,
    verify_affine_relations,
    verify_relations,
)
from src.linalg import LinearMap
from src.utils.errors import InvalidArgument, ShapeError, UnsupportedBox


def _ids(report):
    return {f"{e.relation}:{e.instance}" for e in report.failures}


class TestIncarnationParams:
    """Test suite for IncarnationParams."""

    @pytest.mark.parametrize("N, D", [(2, 2), (3, -2), (4, -4), (5, -4), (6, -8), (7, 8)])
    def test_super_dimension(self, N, D):
        """Test D = sigma_N 2^n."""
        assert IncarnationParams(N).D == D

    def test_offset_and_label(self):
        """Test the D perturbation and the printed label."""
        params = IncarnationParams(3, -1).with_offset(1)
        assert params.D == -1
        assert params.label() == "N=3, epsilon=-1, D offset +1"
        assert IncarnationParams(3).label() == "N=3, epsilon=+1"

    def test_guards(self):
        """Test that invalid N and epsilon are rejected."""
        with pytest.raises(InvalidArgument):
            IncarnationParams(-1)
        with pytest.raises(InvalidArgument):
            IncarnationParams(3, 0)


class TestIncarnate:
    """Test suite for the functor on individual diagrams."""

    def test_bubbles(self, params2, params3):
        """Test that the bubbles evaluate to d and D."""
        assert incarnate(bubble("V"), params3).scalar() == 3
        assert incarnate(bubble("S"), params2).scalar() == 2
        assert incarnate(bubble("S"), params3).scalar() == -2

    def test_crossing_sign(self, params3):
        """Test that xSS carries the symmetry sign of the spin form."""
        swap = incarnate(Diagram.generator(Gen.CROSS_SS), params3)
        # x_{} (x) x_{1} goes to sigma_3 x_{1} (x) x_{}
        assert swap.get(2, 1) == -1

    def test_closed_antisymmetrizer(self, params4):
        """Test that the closed alt(2) gives d(d-1)."""
        assert incarnate(monkey2(2), params4).scalar() == 12

    def test_coefficients_are_specialized(self, params2):
        """Test that d in a coefficient becomes N."""
        f = Diagram.identity("V").scale(d_PARAM - 1)
        assert incarnate(f, params2) == LinearMap.identity(2)

    def test_alt_vanishes_beyond_dimension(self, params2):
        """Test alt(3) is zero on V^{(x)3} at N=2."""
        assert incarnate(antisymmetrizer(3), params2).is_zero()

    def test_dots_need_a_module(self, params3):
        """Test that dotted diagrams are refused by the plain functor."""
        with pytest.raises(UnsupportedBox):
            incarnate(parse_dsl("dotS"), params3)

    def test_chain_matches_composite(self, params3):
        """Test that a chain equals the incarnation of the composite."""
        parts = [parse_dsl("cupS"), parse_dsl("xSS"), parse_dsl("capS")]
        whole = parts[0].then(parts[1]).then(parts[2])
        assert incarnate_chain(parts, params3) == incarnate(whole, params3)
        with pytest.raises(ShapeError):
            incarnate_chain([], params3)

    def test_affine_dot_on_empty_module(self, params3):
        """Test that a dot with nothing to its right acts by the Casimir on V."""
        dot = affine_incarnate(parse_dsl("dotV"), params3, params3.word(""))
        assert dot == LinearMap.identity(3).scale(2)

    def test_affine_module_mismatch(self, params3):
        """Test that the module word must share N and epsilon."""
        with pytest.raises(ShapeError):
            affine_incarnate(parse_dsl("dotV"), params3, IncarnationParams(4).word("V"))

    def test_memo_store(self, params2, mocker):
        """Test that an attached store is consulted and fed."""
        MEMO.clear()
        store = mocker.Mock()
        store.get.return_value = None
        MEMO.attach(store)
        first = incarnate(bubble("V"), params2)
        assert store.get.called
        assert store.put.called
        assert incarnate(bubble("V"), params2) is first


_PLAIN_GENS = [g for g in Gen if not g.is_dot and not g.is_identity]


def _random_diagram(rng, word, steps, max_len):
    """A random composite of whiskered generators starting from word."""
    f = Diagram.identity(word)
    for _ in range(steps):
        word = f.codomain
        choices = [
            (k, g)
            for g in _PLAIN_GENS
            for k in range(len(word) - len(g.domain) + 1)
            if word[k : k + len(g.domain)] == g.domain
            and len(word) - len(g.domain) + len(g.codomain) <= max_len
        ]
        if not choices:
            break
        k, g = rng.choice(choices)
        f = f.then(whisker(word[:k], Diagram.generator(g), word[k + len(g.domain) :]))
    return f


def _normal_forms(f):
    return {term.normal_form(): coeff for term, coeff in f.items()}


class TestFunctoriality:
    """Test suite for composition and tensor products under the functor."""

    def test_split_generator_matches_its_definition(self, params3, params4):
        """Test that sVSS incarnates like cupV followed by the merge."""
        for params in (params3, params4, IncarnationParams(3, -1)):
            assert incarnate(split_svs(), params) == incarnate(split_svs_expanded(), params)

    @pytest.mark.parametrize("N, epsilon", [(2, 1), (3, 1), (3, -1), (4, 1)])
    @pytest.mark.parametrize("seed", range(6))
    def test_composition(self, N, epsilon, seed):
        """Test incarnate(f ; g) = incarnate(f) then incarnate(g) on random words."""
        rng = random.Random(seed)
        params = IncarnationParams(N, epsilon)
        f = _random_diagram(rng, rng.choice(["S", "V", "SV", "SS"]), 3, 4)
        g = _random_diagram(rng, f.codomain, 3, 4)
        assert incarnate(f.then(g), params) == incarnate(f, params).then(incarnate(g, params))

    @pytest.mark.parametrize("N, epsilon", [(2, 1), (3, 1), (3, -1), (4, 1)])
    @pytest.mark.parametrize("seed", range(6))
    def test_tensor_is_kron(self, N, epsilon, seed):
        """Test incarnate(f (x) g) = incarnate(f) (x) incarnate(g) on random words."""
        rng = random.Random(100 + seed)
        params = IncarnationParams(N, epsilon)
        f = _random_diagram(rng, rng.choice(["", "S", "V"]), 2, 2)
        g = _random_diagram(rng, rng.choice(["", "S", "V"]), 2, 2)
        assert incarnate(f.tensor(g), params) == incarnate(f, params).kron(incarnate(g, params))

    @pytest.mark.parametrize("seed", range(8))
    def test_interchange(self, params3, seed):
        """Test (f (x) g) ; (h (x) k) = (f ; h) (x) (g ; k) structurally and as matrices."""
        rng = random.Random(200 + seed)
        f = _random_diagram(rng, rng.choice(["S", "V"]), rng.randint(1, 2), 2)
        h = _random_diagram(rng, f.codomain, rng.randint(1, 2), 2)
        g = _random_diagram(rng, rng.choice(["S", "V"]), rng.randint(1, 2), 2)
        k = _random_diagram(rng, g.codomain, rng.randint(1, 2), 2)
        stacked = f.tensor(g).then(h.tensor(k))
        side_by_side = f.then(h).tensor(g.then(k))
        assert _normal_forms(stacked) == _normal_forms(side_by_side)
        assert incarnate(stacked, params3) == incarnate(side_by_side, params3)


class TestRelationSuite:
    """Test suite for the plain relation suite."""

    @pytest.mark.parametrize("N, epsilon", [(2, 1), (3, 1), (3, -1), (4, 1)])
    def test_all_relations_hold(self, N, epsilon):
        """Test every relation instance at small N."""
        report = verify_relations(IncarnationParams(N, epsilon))
        assert report.passed, _ids(report)

    @pytest.mark.slow
    @pytest.mark.parametrize("epsilon", [1, -1])
    def test_all_relations_hold_at_five(self, epsilon):
        """Test every relation instance at N=5, the quotient relations included."""
        report = verify_relations(IncarnationParams(5, epsilon), slow=True)
        assert report.passed, _ids(report)

    def test_wrong_dimension_is_caught(self, params2):
        """Test that shifting D breaks the spin bubble."""
        report = verify_relations(params2.with_offset(1))
        assert not report.passed
        assert "dimrel:spin-bubble" in _ids(report)

    def test_instances_are_sorted(self, params3):
        """Test the fixed instance order and the odd-N extras."""
        ids = [inst.instance_id for inst in relation_instances(params3)]
        assert ids == sorted(ids)
        assert "extra:N=3" in ids
        assert "extra:N=5" not in [i.instance_id for i in relation_instances(IncarnationParams(5))]

    def test_extra_instances_compare(self, params2):
        """Test that plugin-style instances are appended and checked."""
        good = RelationInstance("custom", "good", (bubble("V"),), (Diagram.identity("").scale(2),))
        bad = RelationInstance("custom", "bad", (bubble("V"),), (Diagram.identity(""),))
        report = verify_relations(params2, extra=[good, bad])
        assert _ids(report) == {"custom:bad"}

    def test_pole_becomes_failure(self, params2):
        """Test that a coefficient pole yields a failed entry."""
        coeff = ParamScalar(1) / (d_PARAM - 2)
        inst = RelationInstance(
            "pole", "d-2", (Diagram.identity("S").scale(coeff),), (Diagram.identity("S"),)
        )
        entry = check_job((inst, params2, None))
        assert not entry.passed
        assert entry.witness["lhs"] == "EvaluationPole"


class TestAffineSuite:
    """Test suite for the dot relations."""

    @pytest.mark.parametrize("N, epsilon", [(2, 1), (3, 1), (3, -1)])
    def test_dot_relations_hold(self, N, epsilon):
        """Test the dot relations at the empty, V and S module words."""
        report = verify_affine_relations(IncarnationParams(N, epsilon))
        assert report.passed, _ids(report)

    def test_dot_splitting_identity(self, params4):
        """Test the dot-splitting identity on all eight three-letter words."""
        report = enmore_report(params4)
        assert len(report.entries) == 8
        assert report.passed, _ids(report)

    def test_bad_module_word(self, params3):
        """Test that module words outside {S, V} are rejected."""
        with pytest.raises(InvalidArgument):
            affine_jobs(params3, ["SW"])


class TestReport:
    """Test suite for report entries."""

    def test_entry_dict(self):
        """Test the JSON shape of an entry."""
        entry = VerificationEntry("bump", 3, -1, "vector-loop", "fail", {"row": 0, "col": 1, "lhs": "1", "rhs": "0"})
        data = entry.to_dict()
        assert data["witness"]["col"] == 1
        assert VerificationEntry.from_dict(data) == entry
        assert "witness" not in VerificationEntry("bump", 3, 1, "x", "pass").to_dict()

    def test_summary(self):
        """Test the summary line."""
        report = VerificationReport(
            [VerificationEntry("a", 2, 1, "i", "pass"), VerificationEntry("b", 2, 1, "j", "fail")]
        )
        assert report.summary() == "1/2 relation instances pass"
        assert [e.relation for e in report.failures] == ["b"]
