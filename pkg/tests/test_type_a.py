"""
Tests for type A modules, bimodules and pairing
"""

import logging

import pytest
from hfr.algebra import StrandsAlgebra, torus_algebra, torus_element
from hfr.az_modules import cfdd_identity, cfdr_az
from hfr.chain_complex import homology_dim, verify_d_squared
from hfr.errors import AlgebraMismatch, IdempotentMismatch, RelationFailure, UnboundedPair
from hfr.pmc import realify, split_pmc
from hfr.satellites import (
    box_typeA,
    staircase_typeA,
    thick_torus_cfdr,
    whitehead_cfdr_framed,
    whitehead_cfdr_unframed,
)
from hfr.type_a import (
    TypeAModule,
    box_A_DD,
    box_AD,
    box_DA_D,
    check_ainfty,
    check_da_relation,
    check_dd_relation,
    close_actions,
    direct_sum,
    identity_da,
    mor_to_d,
)
from hfr.type_d import Generator, TypeDStructure, check_structure_relation, relabel


def rho(label):
    return torus_element(label)


class TestTypeAModule:
    """Tests for the action table."""

    def test_box_closure(self):
        """rho1 then rho2 composes to a single rho12 action."""
        M = box_typeA()
        assert M.act("b22", (rho("1"),)) == ["c12"]
        assert M.act("b22", (rho("12"),)) == ["b02"]
        assert M.complete_to is None

    def test_idempotent_input(self):
        """Strict unitality: the matching idempotent acts as the identity."""
        M = box_typeA()
        assert M.act("b22", (rho("iota0"),)) == ["b22"]
        assert M.act("b22", (rho("iota1"),)) == []

    def test_stored_idempotent_rejected(self):
        """Idempotent inputs may not appear in the table."""
        with pytest.raises(IdempotentMismatch):
            TypeAModule(torus_algebra(), [Generator("x", frozenset({0}))],
                        [("x", (rho("iota0"),), "x")])

    def test_chain_mismatch(self):
        """Inputs must chain through idempotents."""
        gens = [Generator("x", frozenset({0})), Generator("y", frozenset({1}))]
        with pytest.raises(IdempotentMismatch):
            TypeAModule(torus_algebra(), gens, [("x", (rho("2"),), "y")])

    def test_truncated_closure(self):
        """A self-composing operation stops at the depth limit."""
        actions, complete_to = close_actions(torus_algebra(), [("s", (rho("3"), rho("2")), "s")], 5)
        assert complete_to == 5
        assert max(len(seq) for _, seq, _ in actions) <= 5
        assert ("s", (rho("3"), rho("23"), rho("2")), "s") in actions

    def test_unexpected_truncation_warns(self, caplog):
        """A closure cut off at the depth limit is reported as a warning."""
        with caplog.at_level(logging.DEBUG, logger="hfr.type_a"):
            close_actions(torus_algebra(), [("s", (rho("3"), rho("2")), "s")], 5)
        levels = [r.levelno for r in caplog.records if "did not terminate" in r.getMessage()]
        assert levels == [logging.WARNING]

    def test_flat_staircase_truncation_is_debug(self, caplog):
        """The tau = 0 staircase never closes up, so its truncation is only logged at debug."""
        with caplog.at_level(logging.DEBUG, logger="hfr.type_a"):
            assert staircase_typeA(0).complete_to is not None
        levels = [r.levelno for r in caplog.records if "did not terminate" in r.getMessage()]
        assert levels == [logging.DEBUG]

    def test_depth_from_environment(self, monkeypatch):
        """HFR_ACTION_DEPTH bounds staircase_typeA(0)."""
        monkeypatch.setenv("HFR_ACTION_DEPTH", "4")
        assert staircase_typeA(0).complete_to == 4


class TestAInfinityRelations:
    """Tests for check_ainfty."""

    def test_box(self):
        """The box module satisfies the relations."""
        assert check_ainfty(box_typeA(), 4)

    def test_staircases(self):
        """Staircase modules satisfy the relations."""
        for tau in (-1, 0, 1):
            assert check_ainfty(staircase_typeA(tau), 4)

    def test_failure(self):
        """rho1 then rho2 without the composite rho12 action fails."""
        gens = [Generator("x", frozenset({0})), Generator("y", frozenset({1})),
                Generator("z", frozenset({0}))]
        M = TypeAModule(torus_algebra(), gens, [("x", (rho("1"),), "y"), ("y", (rho("2"),), "z")])
        report = check_ainfty(M, 2, strict=False)
        assert not report
        assert report.witness[0] == "x"
        with pytest.raises(RelationFailure):
            check_ainfty(M, 2)


class TestBoxTensor:
    """Tests for box_AD and the morphism complex."""

    def test_box_with_whitehead(self):
        """One box against the framed Whitehead pattern."""
        C = box_AD(box_typeA(), whitehead_cfdr_framed())
        assert len(C) == 12
        assert verify_d_squared(C)
        assert homology_dim(C) == 8

    def test_unbounded_pair(self):
        """A truncated table cannot be paired with a cycle."""
        with pytest.raises(UnboundedPair):
            box_AD(staircase_typeA(0), thick_torus_cfdr())

    def test_algebra_mismatch(self):
        """Both sides must use the same algebra."""
        with pytest.raises(AlgebraMismatch):
            box_AD(box_typeA(), TypeDStructure(StrandsAlgebra(split_pmc(2)), []))

    def test_direct_sum_adds(self):
        """Homology is additive over summands."""
        M = direct_sum(box_typeA(), staircase_typeA(1))
        D = whitehead_cfdr_framed()
        expected = homology_dim(box_AD(box_typeA(), D)) + homology_dim(box_AD(staircase_typeA(1), D))
        assert homology_dim(box_AD(M, D)) == expected

    def test_morphisms_into_thick_torus(self):
        """Mor(AZ(split:1), thick torus) has two-dimensional homology."""
        C = mor_to_d(cfdr_az(realify(split_pmc(1))), thick_torus_cfdr())
        assert homology_dim(C) == 2

    def test_mor_algebra_mismatch(self):
        """Mor needs a common algebra."""
        with pytest.raises(AlgebraMismatch):
            mor_to_d(thick_torus_cfdr(), TypeDStructure(StrandsAlgebra(split_pmc(2)), []))


class TestBimodules:
    """Tests for DA and DD bimodules."""

    def test_identity_da_relation(self):
        """The identity DA bimodule satisfies its relations."""
        assert check_da_relation(identity_da(torus_algebra()), 3)

    def test_identity_da_acts_trivially(self):
        """identity (x) D is D after renaming."""
        for D in (whitehead_cfdr_unframed(), thick_torus_cfdr()):
            R = box_DA_D(identity_da(torus_algebra()), D)
            mapping = {f"id{min(g.idempotent)}⊗{g.name}": g.name for g in D.generators}
            assert relabel(R, mapping) == D
            assert check_structure_relation(R)

    def test_identity_dd_relation(self):
        """Identity DD bimodules satisfy the DD relation."""
        for genus in (1, 2):
            assert check_dd_relation(cfdd_identity(realify(split_pmc(genus))))

    def test_box_a_dd_algebra_mismatch(self):
        """The DD right side is the multiplicity-one algebra."""
        with pytest.raises(AlgebraMismatch):
            box_A_DD(box_typeA(), cfdd_identity(split_pmc(1)))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
