"""
F2 Chain Complexes

Finite chain complexes with a sparse boundary matrix (column j holds the
boundary of basis element j), square-zero checks and homology dimension by
bitset column elimination.
"""

import logging
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from .errors import DSquaredNonzero

logger = logging.getLogger(__name__)


class ChainComplex:
    """
    A finite F2 vector space with an endomorphism meant to square to zero.

    Basis labels are kept in the order given; `boundary` is a square sparse
    0/1 matrix with entry (i, j) = 1 iff basis[i] appears in d(basis[j]).
    """

    def __init__(self, basis: Sequence[Hashable], boundary: Optional[sp.spmatrix] = None):
        """
        Args:
            basis: Ordered generator labels (must be distinct)
            boundary: Square sparse matrix over F2; zero if omitted
        """
        self.basis: List[Hashable] = list(basis)
        self.index: Dict[Hashable, int] = {b: i for i, b in enumerate(self.basis)}
        if len(self.index) != len(self.basis):
            raise ValueError("chain complex basis labels must be distinct")
        n = len(self.basis)
        if boundary is None:
            boundary = sp.csc_matrix((n, n), dtype=np.int64)
        boundary = sp.csc_matrix(boundary, dtype=np.int64)
        if boundary.shape != (n, n):
            raise ValueError(f"boundary shape {boundary.shape} does not match {n} generators")
        boundary.data %= 2
        boundary.eliminate_zeros()
        self.boundary = boundary

    @classmethod
    def from_arrows(cls, basis: Sequence[Hashable],
                    arrows: Iterable[Tuple[Hashable, Hashable]]) -> "ChainComplex":
        """
        Build from (source, target) pairs; repeated pairs cancel mod 2.
        """
        basis = list(basis)
        index = {b: i for i, b in enumerate(basis)}
        counts: Dict[Tuple[int, int], int] = {}
        for src, tgt in arrows:
            key = (index[tgt], index[src])
            counts[key] = counts.get(key, 0) ^ 1
        entries = [key for key, v in counts.items() if v]
        n = len(basis)
        if entries:
            rows, cols = zip(*entries)
            data = np.ones(len(entries), dtype=np.int64)
            matrix = sp.csc_matrix((data, (rows, cols)), shape=(n, n))
        else:
            matrix = sp.csc_matrix((n, n), dtype=np.int64)
        return cls(basis, matrix)

    def __len__(self) -> int:
        return len(self.basis)

    def arrows(self) -> List[Tuple[Hashable, Hashable]]:
        """Nonzero entries as (source, target) label pairs, sorted by index."""
        coo = self.boundary.tocoo()
        pairs = sorted(zip(coo.col.tolist(), coo.row.tolist()))
        return [(self.basis[c], self.basis[r]) for c, r in pairs]

    def __repr__(self) -> str:
        return f"ChainComplex({len(self.basis)} generators, {self.boundary.nnz} arrows)"


def verify_d_squared(C: ChainComplex) -> bool:
    """True iff the boundary squares to zero over F2."""
    square = C.boundary @ C.boundary
    square = sp.csc_matrix(square)
    return not np.any(square.data % 2)


def _cols_from_sparse_f2(D: sp.spmatrix) -> List[int]:
    """Column bitsets over rows."""
    D = sp.csc_matrix(D)
    cols: List[int] = [0] * D.shape[1]
    for j in range(D.shape[1]):
        bits = 0
        for r in D.indices[D.indptr[j]:D.indptr[j + 1]]:
            bits ^= 1 << int(r)
        cols[j] = bits
    return cols


def rank_f2(D: sp.spmatrix) -> int:
    """
    Rank over F2 by column reduction on int bitsets.

    Pivots are keyed by the lowest set row so the reduction is deterministic.
    """
    pivots: Dict[int, int] = {}
    for col in _cols_from_sparse_f2(D):
        while col:
            low = (col & -col).bit_length() - 1
            if low not in pivots:
                pivots[low] = col
                break
            col ^= pivots[low]
    return len(pivots)


def rank_f2_dense(matrix: np.ndarray) -> int:
    """Rank over F2 by row reduction of a dense uint8 array."""
    work = (np.asarray(matrix, dtype=np.uint8) % 2).copy()
    n_rows, n_cols = work.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        hits = np.nonzero(work[rank:, col])[0]
        if hits.size == 0:
            continue
        pivot = rank + hits[0]
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        below = np.nonzero(work[:, col])[0]
        below = below[below != rank]
        work[below] ^= work[rank]
        rank += 1
    return rank


def homology_dim(C: ChainComplex) -> int:
    """
    dim ker - dim im, i.e. n - 2 * rank(d).

    Raises:
        DSquaredNonzero: if the boundary does not square to zero
    """
    if not verify_d_squared(C):
        raise DSquaredNonzero(f"{C!r} has d^2 != 0")
    rank = rank_f2(C.boundary)
    result = len(C) - 2 * rank
    logger.debug("homology of %r: rank %d, dimension %d", C, rank, result)
    return result


def homology_dim_dense(C: ChainComplex) -> int:
    """Same as homology_dim, computed by dense numpy elimination."""
    if len(C) == 0:
        return 0
    return len(C) - 2 * rank_f2_dense(C.boundary.toarray())
