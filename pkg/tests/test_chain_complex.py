"""
Tests for F2 chain complexes and homology
"""

import numpy as np
import pytest
import scipy.sparse as sp
from hfr.chain_complex import (
    ChainComplex,
    homology_dim,
    homology_dim_dense,
    rank_f2,
    rank_f2_dense,
    verify_d_squared,
)
from hfr.errors import DSquaredNonzero


def two_term(rng, a, b, density=0.3):
    """Random complex with generators x0..x{a-1} mapping into y0..y{b-1}."""
    basis = [f"x{i}" for i in range(a)] + [f"y{j}" for j in range(b)]
    arrows = [(f"x{i}", f"y{j}") for i in range(a) for j in range(b) if rng.random() < density]
    return ChainComplex.from_arrows(basis, arrows)


class TestConstruction:
    """Tests for building complexes."""

    def test_empty(self):
        """The zero complex has zero homology."""
        C = ChainComplex([])
        assert len(C) == 0
        assert homology_dim(C) == 0

    def test_repeated_arrows_cancel(self):
        """Arrows are counted mod 2."""
        C = ChainComplex.from_arrows(["a", "b"], [("a", "b"), ("a", "b")])
        assert C.arrows() == []
        assert homology_dim(C) == 2

    def test_duplicate_labels(self):
        """Basis labels must be distinct."""
        with pytest.raises(ValueError):
            ChainComplex(["a", "a"])

    def test_shape_mismatch(self):
        """The boundary must be square in the basis size."""
        with pytest.raises(ValueError):
            ChainComplex(["a", "b"], sp.csc_matrix((3, 3), dtype=np.int64))

    def test_arrows_listing(self):
        """Arrows are reported as (source, target)."""
        C = ChainComplex.from_arrows(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert C.arrows() == [("a", "b"), ("b", "c")]


class TestHomology:
    """Tests for homology dimension."""

    def test_cancelling_pair(self):
        """a -> b is acyclic."""
        C = ChainComplex.from_arrows(["a", "b"], [("a", "b")])
        assert homology_dim(C) == 0

    def test_square(self):
        """Two paths a -> b -> d and a -> c -> d compose to 2 = 0."""
        C = ChainComplex.from_arrows(
            ["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]
        )
        assert verify_d_squared(C)
        assert homology_dim(C) == 0

    def test_d_squared_nonzero(self):
        """a -> b -> c is not a complex."""
        C = ChainComplex.from_arrows(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert not verify_d_squared(C)
        with pytest.raises(DSquaredNonzero):
            homology_dim(C)

    def test_dense_and_sparse_agree(self):
        """Bitset and numpy eliminations give the same homology."""
        rng = np.random.default_rng(2024)
        for _ in range(50):
            C = two_term(rng, int(rng.integers(1, 12)), int(rng.integers(1, 12)))
            assert homology_dim(C) == homology_dim_dense(C)

    def test_rank_matches_dense(self):
        """Sparse rank of random 0/1 matrices matches the dense rank."""
        rng = np.random.default_rng(7)
        for _ in range(30):
            m = rng.integers(0, 2, size=(9, 13))
            assert rank_f2(sp.csc_matrix(m)) == rank_f2_dense(m)

    def test_identity_rank(self):
        """The identity has full rank over F2."""
        assert rank_f2(sp.identity(6, format="csc", dtype=np.int64)) == 6
        assert rank_f2_dense(2 * np.eye(4, dtype=int)) == 0


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
