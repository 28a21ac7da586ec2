"""
Tests for the strands algebra
"""

import itertools

import numpy as np
import pytest
from hfr.algebra import (
    StrandsAlgebra,
    StrandsDiagram,
    complement_idempotent,
    crosses_midpoint,
    diagram_label,
    enumerate_symmetric,
    is_symmetric,
    multiplicity_vector,
    reflect_diagram,
    split_at_midpoint,
    torus_algebra,
    torus_element,
    torus_name,
)
from hfr.errors import AlgebraMismatch, InvalidDiagram
from hfr.pmc import antipodal_pmc, realify, split_pmc


def rho(label):
    return torus_element(label)


class TestTorusAlgebra:
    """Tests for the genus-one algebra."""

    def test_basis_size(self):
        """Six chords and two idempotents."""
        assert len(torus_algebra().generators()) == 8
        assert len(torus_algebra(multiplicity_one=True).generators()) == 8

    def test_products(self):
        """Concatenation of adjacent chords."""
        A = torus_algebra()
        assert A.multiply(rho("1"), rho("2")).terms == (rho("12"),)
        assert A.multiply(rho("2"), rho("3")).terms == (rho("23"),)
        assert A.multiply(rho("1"), rho("23")).terms == (rho("123"),)
        assert A.multiply(rho("12"), rho("3")).terms == (rho("123"),)

    def test_vanishing_products(self):
        """Non-composable chords multiply to zero."""
        A = torus_algebra()
        assert A.multiply(rho("2"), rho("1")).is_zero()
        assert A.multiply(rho("3"), rho("2")).is_zero()
        assert A.multiply(rho("1"), rho("3")).is_zero()
        assert A.multiply(rho("12"), rho("12")).is_zero()

    def test_idempotents_are_units(self):
        """iota(left) * a = a = a * iota(right)."""
        A = torus_algebra()
        for a in A.generators():
            left = A.idempotent(A.left_idem(a))
            right = A.idempotent(A.right_idem(a))
            assert A.multiply(left, a).terms == (a,)
            assert A.multiply(a, right).terms == (a,)

    def test_differential_vanishes(self):
        """Single strands have no crossings."""
        A = torus_algebra()
        assert all(A.differential(a).is_zero() for a in A.generators())

    def test_associative(self):
        """(ab)c = a(bc) on all basis triples."""
        A = torus_algebra()
        basis = A.generators()
        for a, b, c in itertools.product(basis, repeat=3):
            left = A.product(A.multiply(a, b), A.element((c,)))
            right = A.product(A.element((a,)), A.multiply(b, c))
            assert left == right

    def test_idempotents(self):
        """rho1 runs from iota0 to iota1."""
        A = torus_algebra()
        assert A.left_idem(rho("1")) == frozenset({0})
        assert A.right_idem(rho("1")) == frozenset({1})
        assert A.left_idem(rho("2")) == frozenset({1})
        assert A.right_idem(rho("2")) == frozenset({0})


class TestNames:
    """Tests for torus naming helpers."""

    def test_parse_forms(self):
        """Several spellings of the same element."""
        assert rho("rho12") == rho("ρ₁₂") == rho("12") == StrandsDiagram.build([(1, 3)])
        assert rho("iota1") == rho("ι₁") == StrandsDiagram.build((), (2, 4))

    def test_unknown_name(self):
        """Unknown chords are rejected."""
        with pytest.raises(InvalidDiagram):
            torus_element("rho13")

    def test_render(self):
        """Names render with subscripts."""
        assert torus_name(rho("123")) == "ρ₁₂₃"
        assert torus_name(rho("iota0")) == "ι₀"
        assert diagram_label(rho("2"), split_pmc(1)) == "ρ₂"

    def test_render_higher_genus(self):
        """Away from genus one diagrams print as strand lists."""
        d = StrandsDiagram.build([(1, 2)], (5, 7))
        assert diagram_label(d, split_pmc(2)) == "{[1,2],[5,5],[7,7]}"


class TestValidation:
    """Tests for basis-element validation."""

    def test_downward_strand(self):
        """Strands must move upward."""
        with pytest.raises(InvalidDiagram):
            torus_algebra().validate(StrandsDiagram(((3, 1),), ()))

    def test_unmatched_horizontal(self):
        """Horizontal points come in matched pairs."""
        with pytest.raises(InvalidDiagram):
            torus_algebra().validate(StrandsDiagram.build((), (1,)))

    def test_wrong_summand(self):
        """The central summand needs exactly genus-many strands."""
        with pytest.raises(InvalidDiagram):
            StrandsAlgebra(split_pmc(2)).validate(rho("1"))

    def test_multiplicity_one_quotient(self):
        """Multiplicity two is allowed in A(Z) but not in A'(Z)."""
        d = StrandsDiagram.build([(1, 3), (2, 4)])
        assert StrandsAlgebra(split_pmc(2)).is_valid(d)
        assert not StrandsAlgebra(split_pmc(2), multiplicity_one=True).is_valid(d)
        np.testing.assert_array_equal(multiplicity_vector(d, 8), [1, 2, 1, 0, 0, 0, 0])

    def test_element_arithmetic(self):
        """Sums are taken mod 2 and stay within one algebra."""
        A = torus_algebra()
        x = A.element((rho("1"), rho("3")))
        assert (x + x).is_zero()
        with pytest.raises(AlgebraMismatch):
            x + StrandsAlgebra(split_pmc(2)).zero()


class TestGenusTwo:
    """Tests for the genus-two split algebra."""

    def test_crossing_resolution(self):
        """Resolving the crossing of [1,4] and [2,3]."""
        A = StrandsAlgebra(split_pmc(2))
        d = A.diagram([(1, 4), (2, 3)])
        assert A.differential(d).terms == (StrandsDiagram.build([(1, 3), (2, 4)]),)

    def test_d_squared(self):
        """d^2 = 0 on every basis element."""
        A = StrandsAlgebra(split_pmc(2))
        for a in A.generators():
            assert A.d(A.differential(a)).is_zero()


class TestReflection:
    """Tests for the reflection action."""

    def test_reflect_chord(self):
        """rho1 reflects to rho3."""
        assert reflect_diagram(rho("1"), 4) == rho("3")
        assert reflect_diagram(rho("2"), 4) == rho("2")

    def test_symmetric_genus_one(self):
        """Only rho2 and rho123 are fixed at genus one."""
        rpmc = realify(split_pmc(1))
        assert enumerate_symmetric(rpmc) == [rho("123"), rho("2")]

    def test_symmetric_enumeration_complete(self):
        """Orbit enumeration finds every fixed basis element."""
        for rpmc in (realify(split_pmc(2)), realify(antipodal_pmc(2))):
            brute = [a for a in StrandsAlgebra(rpmc).generators() if is_symmetric(rpmc, a)]
            assert enumerate_symmetric(rpmc) == sorted(brute)

    def test_midpoint(self):
        """Crossing and splitting at the midpoint."""
        assert crosses_midpoint(rho("123"), 4)
        assert not crosses_midpoint(rho("1"), 4)
        lower, upper = split_at_midpoint(StrandsDiagram.build([(1, 2), (7, 8)]), 8)
        assert lower == StrandsDiagram.build([(1, 2)])
        assert upper == StrandsDiagram.build([(7, 8)])

    def test_complement(self):
        """Complementary idempotents."""
        assert complement_idempotent(split_pmc(2), {0, 3}) == frozenset({1, 2})


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
