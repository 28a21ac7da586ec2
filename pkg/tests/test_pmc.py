"""
Tests for pointed matched circles
"""

import pytest
from hfr.errors import (
    BadCount,
    NonorientableQuotient,
    NotConnectedAfterSurgery,
    NotFixedPointFree,
    NotRealPMC,
    NotSymmetric,
    PMCError,
)
from hfr.pmc import (
    antipodal_pmc,
    lower_half,
    make_pmc,
    parse_pmc,
    parse_real_pmc,
    quotient_orientable,
    realify,
    require_real,
    reverse,
    split_pmc,
    surgery_cycle_count,
)


class TestConstruction:
    """Tests for building and validating circles."""

    def test_split_genus_one(self):
        """Genus-one split circle is the torus circle."""
        pmc = split_pmc(1)
        assert pmc.pairs == ((1, 3), (2, 4))
        assert pmc.genus == 1
        assert pmc.num_pairs == 2

    def test_split_genus_two_pairs(self):
        """Split circle pairs two torus blocks."""
        assert split_pmc(2).pairs == ((1, 3), (2, 4), (5, 7), (6, 8))

    def test_antipodal_pairs(self):
        """Antipodal circle matches i with i+2k."""
        assert antipodal_pmc(2).pairs == ((1, 5), (2, 6), (3, 7), (4, 8))

    def test_antipodal_genus_one_is_split(self):
        """At genus one the two families coincide."""
        assert antipodal_pmc(1) == split_pmc(1)

    def test_pair_lookup(self):
        """Matching and pair indices agree."""
        pmc = split_pmc(2)
        assert pmc.match(5) == 7
        assert pmc.pair_of(7) == 2
        assert pmc.pair_points(3) == (6, 8)

    def test_bad_count(self):
        """Point counts must be positive multiples of four."""
        with pytest.raises(BadCount):
            make_pmc(6, [(1, 2), (3, 4), (5, 6)])
        with pytest.raises(BadCount):
            split_pmc(0)

    def test_self_matched_point(self):
        """A point cannot be matched to itself."""
        with pytest.raises(NotFixedPointFree):
            make_pmc(4, [(1, 1), (2, 4)])

    def test_unmatched_point(self):
        """Every point must be covered."""
        with pytest.raises(NotFixedPointFree):
            make_pmc(4, [(1, 3)])

    def test_disconnected_surgery(self):
        """Adjacent matchings split the circle after surgery."""
        with pytest.raises(NotConnectedAfterSurgery):
            make_pmc(4, [(1, 2), (3, 4)])

    def test_surgery_cycle_count(self):
        """Split matching gives one circle, adjacent matching three."""
        assert surgery_cycle_count(4, {1: 3, 3: 1, 2: 4, 4: 2}) == 1
        assert surgery_cycle_count(4, {1: 2, 2: 1, 3: 4, 4: 3}) == 3


class TestParsing:
    """Tests for the text forms."""

    def test_family_forms(self):
        """split:k and antipodal:k parse to the families."""
        assert parse_pmc("split:2") == split_pmc(2)
        assert parse_pmc(" antipodal : 3 ") == antipodal_pmc(3)

    def test_explicit_form(self):
        """Explicit pair lists parse and print back."""
        pmc = parse_pmc("4;[1-3,2-4]")
        assert pmc == split_pmc(1)
        assert parse_pmc(pmc.text_form()) == pmc

    def test_unreadable(self):
        """Garbage raises a PMC error."""
        with pytest.raises(PMCError):
            parse_pmc("torus")
        with pytest.raises(PMCError):
            parse_pmc("4;[1-3,2_4]")

    def test_real_parse(self):
        """parse_real_pmc attaches the reflection."""
        rpmc = parse_real_pmc("split:1")
        assert rpmc.tau(1) == 4
        assert rpmc.tau(2) == 3


class TestReality:
    """Tests for real circles and their halves."""

    def test_split_and_antipodal_are_real(self):
        """Both families commute with the reflection."""
        for genus in (1, 2, 3):
            realify(split_pmc(genus))
            realify(antipodal_pmc(genus))

    def test_not_symmetric(self):
        """A matching that ignores the reflection is rejected."""
        pmc = make_pmc(8, [(1, 3), (2, 6), (4, 7), (5, 8)])
        with pytest.raises(NotSymmetric):
            realify(pmc)

    def test_require_real(self):
        """Plain circles are refused where a reflection is needed."""
        with pytest.raises(NotRealPMC):
            require_real(split_pmc(1))
        rpmc = realify(split_pmc(1))
        assert require_real(rpmc) is rpmc

    def test_quotient_orientable(self):
        """Only even-genus split circles keep the lower half."""
        assert quotient_orientable(realify(split_pmc(2)))
        assert not quotient_orientable(realify(split_pmc(1)))
        assert not quotient_orientable(realify(split_pmc(3)))
        assert not quotient_orientable(realify(antipodal_pmc(2)))

    def test_lower_half(self):
        """The lower half of split:2 is the torus circle."""
        assert lower_half(realify(split_pmc(2))) == split_pmc(1)

    def test_lower_half_nonorientable(self):
        """Nonorientable quotients have no lower half."""
        with pytest.raises(NonorientableQuotient):
            lower_half(realify(split_pmc(1)))

    def test_reverse(self):
        """Reversal relabels i -> n+1-i; real circles stay real."""
        assert reverse(split_pmc(1)) == split_pmc(1)
        assert reverse(make_pmc(8, [(1, 3), (2, 6), (4, 7), (5, 8)])).pairs == \
            ((1, 4), (2, 5), (3, 7), (6, 8))
        assert isinstance(reverse(realify(split_pmc(2))), type(realify(split_pmc(2))))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
