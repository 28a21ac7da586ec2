"""
Tests for the real AZ and AZ-bar modules, the small model and the pairing
"""

from collections import Counter

import pytest
from hfr.algebra import StrandsDiagram, torus_algebra, torus_element
from hfr.az_modules import (
    cfar_az,
    cfdd_identity,
    cfdr_az,
    cfdr_azbar,
    chord_coefficient,
    display_name,
    has_multiplicity_two,
    mult2_reduction,
    pairing_names,
    small_model,
    symmetrize,
)
from hfr.errors import NonorientableQuotient, NotRealPMC
from hfr.pmc import parse_real_pmc, realify, split_pmc
from hfr.reproduce import RELATION_PMCS
from hfr.type_a import box_A_DD
from hfr.type_d import Generator, check_structure_relation, simplify


@pytest.fixture(scope="module")
def az_split2():
    return cfdr_az(parse_real_pmc("split:2"))


@pytest.mark.parametrize("text", RELATION_PMCS)
@pytest.mark.parametrize("build", [cfdr_az, cfdr_azbar], ids=["az", "azbar"])
def test_structure_relation(build, text):
    """Both modules satisfy the structure relation."""
    report = check_structure_relation(build(parse_real_pmc(text)))
    assert report, report.failures


class TestGenusOne:
    """Tests for the genus-one modules."""

    def test_az(self):
        """rho~2 -rho1-> rho~123."""
        D = cfdr_az(realify(split_pmc(1)))
        assert sorted(D.names()) == ["{[1,4]}~", "{[2,3]}~"]
        assert D.arrows == [("{[2,3]}~", torus_element("1"), "{[1,4]}~")]
        assert D.generator("{[2,3]}~").idempotent == frozenset({0})
        assert D.generator("{[1,4]}~").idempotent == frozenset({1})

    def test_azbar(self):
        """rho123* -rho3-> rho2*."""
        D = cfdr_azbar(realify(split_pmc(1)))
        assert D.arrows == [("{[1,4]}*", torus_element("3"), "{[2,3]}*")]
        assert D.generator("{[2,3]}*").idempotent == frozenset({1})
        assert D.generator("{[1,4]}*").idempotent == frozenset({0})

    def test_display_names(self):
        """Genus-one names print as decorated chords."""
        pmc = split_pmc(1)
        assert display_name("{[2,3]}~", pmc) == "ρ̃₂"
        assert display_name("{[1,4]}~", pmc) == "ρ̃₁₂₃"
        assert display_name("{[1,4]}*", pmc) == "ρ₁₂₃*"
        assert display_name("{[1,4]}~", split_pmc(2)) == "{[1,4]}~"

    def test_needs_reflection(self):
        """A bare circle is rejected."""
        with pytest.raises(NotRealPMC):
            cfdr_az(split_pmc(1))

    def test_chord_coefficient(self):
        """A chord is admitted only from its starting idempotent."""
        A = torus_algebra()
        assert chord_coefficient(A, frozenset({0}), (1, 2), frozenset({1})) == torus_element("1")
        assert chord_coefficient(A, frozenset({1}), (1, 2), frozenset({1})) is None
        assert chord_coefficient(A, frozenset({0}), (1, 2), frozenset({0})) is None


class TestGenusTwo:
    """Tests for the genus-two AZ module."""

    def test_relation(self, az_split2):
        """delta satisfies the structure relation."""
        assert check_structure_relation(az_split2)

    def test_worked_differential(self, az_split2):
        """Eight terms from the all-horizontal generator, grouped by domain family."""
        source = "{[2,2],[4,4],[5,5],[7,7]}~"
        terms = az_split2.outgoing(source)
        assert len(terms) == 8
        tags = Counter(az_split2.tag((source, c, t)) for c, t in terms)
        assert tags == Counter({"(vi)": 2, "(vii)": 3, "(ix)": 3})

    def test_crossing_resolution(self, az_split2):
        """{[3,6],[4,5]}~ resolves to {[3,5],[4,6]}~ with an idempotent coefficient."""
        terms = az_split2.outgoing("{[3,6],[4,5]}~")
        assert len(terms) == 1
        coeff, target = terms[0]
        assert target == "{[3,5],[4,6]}~"
        assert coeff.is_idempotent

    def test_azbar_octagon_to_horizontal(self):
        """Two fixed chords collapse onto horizontal strands: {[1,8],[4,5]}* -> {[2,2],[4,4],[5,5],[7,7]}*."""
        D = cfdr_azbar(parse_real_pmc("split:2"))
        source = "{[1,8],[4,5]}*"
        coeff = StrandsDiagram.build([(4, 8)], (1, 3))
        assert D.outgoing(source) == [(coeff, "{[2,2],[4,4],[5,5],[7,7]}*")]
        assert D.tag((source, coeff, "{[2,2],[4,4],[5,5],[7,7]}*")) == "(ix)"

    def test_azbar_fixed_pair_differential(self):
        """{[1,8],[2,7]}* has three noncompact-octagon terms, one per allowed l."""
        D = cfdr_azbar(parse_real_pmc("split:2"))
        targets = sorted(t for _, t in D.outgoing("{[1,8],[2,7]}*"))
        assert targets == ["{[2,2],[4,4],[5,5],[7,7]}*", "{[2,3],[6,7]}*", "{[2,4],[5,7]}*"]

    def test_upward_hexagon_uses_one_orientation(self):
        """The pair [2,8], [5,11] bites the fixed chord [1,12] once, through [2,8]."""
        D = cfdr_az(parse_real_pmc("split:3"))
        targets = {t for _, t in D.outgoing("{[1,12],[2,8],[5,11]}~")}
        assert "{[1,8],[2,11],[5,12]}~" in targets
        assert "{[1,11],[2,12],[5,8]}~" not in targets

    def test_symmetrize(self):
        """A lower-half diagram gains its reflection."""
        rpmc = realify(split_pmc(2))
        assert symmetrize(rpmc, StrandsDiagram.build([(1, 2)], (3,))) == \
            StrandsDiagram.build([(1, 2), (7, 8)], (3, 6))


class TestSmallModel:
    """Tests for the small model and the multiplicity-two reduction."""

    def test_size(self):
        """Eight generators at genus two."""
        assert len(small_model(parse_real_pmc("split:2"))) == 8

    def test_nonorientable(self):
        """The genus-one split circle has a nonorientable quotient."""
        with pytest.raises(NonorientableQuotient):
            small_model(realify(split_pmc(1)))
        with pytest.raises(NonorientableQuotient):
            cfar_az(parse_real_pmc("antipodal:2"))

    def test_reduction(self, az_split2):
        """Dropping multiplicity-two generators and simplifying gives the small model."""
        reduction = mult2_reduction(az_split2)
        assert reduction.closure.closed
        assert reduction.contractible
        assert len(reduction.substructure) + len(reduction.quotient) == len(az_split2)
        assert simplify(reduction.quotient) == small_model(parse_real_pmc("split:2"))

    def test_multiplicity_flag(self):
        """Overlapping strands have multiplicity two."""
        heavy = Generator("g", frozenset({0, 1}), StrandsDiagram.build([(1, 3), (2, 4)]))
        light = Generator("h", frozenset({0, 1}), StrandsDiagram.build([(1, 2), (3, 4)]))
        assert has_multiplicity_two(heavy, 8)
        assert not has_multiplicity_two(light, 8)


class TestPairing:
    """Tests for CFAR and the identity DD bimodule."""

    def test_cfar_generators(self):
        """CFAR has one generator per small-model generator."""
        pmc = parse_real_pmc("split:2")
        assert len(cfar_az(pmc)) == len(small_model(pmc))

    def test_pairing_recovers_small_model(self):
        """CFAR boxed with the identity DD bimodule is the small model."""
        pmc = parse_real_pmc("split:2")
        paired = pairing_names(box_A_DD(cfar_az(pmc), cfdd_identity(pmc)), pmc)
        assert paired == small_model(pmc)

    def test_identity_dd_size(self):
        """One generator per idempotent."""
        assert len(cfdd_identity(split_pmc(2)).generators) == 6


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
