"""
Pointed Matched Circles

Marked points are numbered 1..4k from the basepoint. A matching pairs them
up; the real refinement adds the reflection i -> 4k+1-i, whose fixed
midpoint w sits between points 2k and 2k+1.
"""

import logging
import re
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import (
    BadCount,
    NonorientableQuotient,
    NotConnectedAfterSurgery,
    NotFixedPointFree,
    NotRealPMC,
    NotSymmetric,
    PMCError,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class PointedMatchedCircle:
    """
    A pointed matched circle with 4k marked points.

    Pairs are stored sorted by their smaller point; pair indices used for
    idempotents refer to this order.
    """

    def __init__(self, n: int, pairs: Iterable[Sequence[int]]):
        """
        Validate and build the circle.

        Args:
            n: Number of marked points (4k)
            pairs: Matched pairs covering 1..n

        Raises:
            BadCount, NotFixedPointFree, NotConnectedAfterSurgery
        """
        if n <= 0 or n % 4 != 0:
            raise BadCount(f"point count {n} is not a positive multiple of 4")

        match: Dict[int, int] = {}
        for raw in pairs:
            if len(raw) != 2:
                raise NotFixedPointFree(f"pair {tuple(raw)} does not have two points")
            p, q = int(raw[0]), int(raw[1])
            if p == q:
                raise NotFixedPointFree(f"point {p} is matched to itself")
            for x in (p, q):
                if not 1 <= x <= n:
                    raise NotFixedPointFree(f"point {x} outside 1..{n}")
                if x in match:
                    raise NotFixedPointFree(f"point {x} appears in two pairs")
            match[p] = q
            match[q] = p
        if len(match) != n:
            missing = sorted(set(range(1, n + 1)) - set(match))
            raise NotFixedPointFree(f"points {missing} are unmatched")

        self.n = n
        self.genus = n // 4
        self.pairs: Tuple[Pair, ...] = tuple(
            sorted((min(p, q), max(p, q)) for p, q in
                   {(min(a, b), max(a, b)) for a, b in match.items()})
        )
        self._match = match
        self._pair_index = {}
        for idx, (p, q) in enumerate(self.pairs):
            self._pair_index[p] = idx
            self._pair_index[q] = idx

        if surgery_cycle_count(n, match) != 1:
            raise NotConnectedAfterSurgery(
                f"surgery on {self.text_form()} gives more than one circle"
            )

    def match(self, point: int) -> int:
        """Matched partner M(point)."""
        return self._match[point]

    def pair_of(self, point: int) -> int:
        """Index of the matched pair containing `point`."""
        return self._pair_index[point]

    def pair_points(self, index: int) -> Pair:
        return self.pairs[index]

    @property
    def num_pairs(self) -> int:
        return 2 * self.genus

    def key(self) -> Tuple[int, Tuple[Pair, ...]]:
        return (self.n, self.pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointedMatchedCircle):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def text_form(self) -> str:
        body = ",".join(f"{p}-{q}" for p, q in self.pairs)
        return f"{self.n};[{body}]"

    def __repr__(self) -> str:
        return f"PointedMatchedCircle({self.text_form()})"


class RealPointedMatchedCircle(PointedMatchedCircle):
    """Pointed matched circle whose matching commutes with the reflection."""

    def __init__(self, n: int, pairs: Iterable[Sequence[int]]):
        super().__init__(n, pairs)
        for p in range(1, n + 1):
            if self.match(self.tau(p)) != self.tau(self.match(p)):
                raise NotSymmetric(
                    f"M(tau({p})) != tau(M({p})) for {self.text_form()}"
                )

    def tau(self, point: int) -> int:
        """The reflection i -> 4k+1-i."""
        return self.n + 1 - point

    def __repr__(self) -> str:
        return f"RealPointedMatchedCircle({self.text_form()})"


def surgery_cycle_count(n: int, match: Dict[int, int]) -> int:
    """
    Number of circles produced by surgery along the matched pairs.

    Walks the gluing permutation on boundary segments: leaving segment j
    (between points j and j+1) through point j+1 crosses the handle to
    M(j+1) and continues on the segment starting there.
    """
    seen = [False] * (n + 1)
    cycles = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            nxt = j + 1 if j < n else 1
            j = match[nxt]
    return cycles


def make_pmc(n: int, matching: Iterable[Sequence[int]]) -> PointedMatchedCircle:
    """Validated pointed matched circle from a pair list."""
    return PointedMatchedCircle(n, matching)


def split_pmc(genus: int) -> PointedMatchedCircle:
    """Split circle: pairs {4j+1,4j+3}, {4j+2,4j+4}."""
    if genus < 1:
        raise BadCount(f"genus must be at least 1, got {genus}")
    pairs = []
    for j in range(genus):
        pairs.append((4 * j + 1, 4 * j + 3))
        pairs.append((4 * j + 2, 4 * j + 4))
    return PointedMatchedCircle(4 * genus, pairs)


def antipodal_pmc(genus: int) -> PointedMatchedCircle:
    """Antipodal circle: pairs {i, i+2k}."""
    if genus < 1:
        raise BadCount(f"genus must be at least 1, got {genus}")
    return PointedMatchedCircle(
        4 * genus, [(i, i + 2 * genus) for i in range(1, 2 * genus + 1)]
    )


def realify(pmc: PointedMatchedCircle) -> RealPointedMatchedCircle:
    """Attach the standard reflection; raises NotSymmetric if M does not respect it."""
    if isinstance(pmc, RealPointedMatchedCircle):
        return pmc
    return RealPointedMatchedCircle(pmc.n, pmc.pairs)


def require_real(pmc: PointedMatchedCircle) -> RealPointedMatchedCircle:
    if not isinstance(pmc, RealPointedMatchedCircle):
        raise NotRealPMC(f"{pmc!r} has no reflection; call realify first")
    return pmc


def quotient_orientable(rpmc: RealPointedMatchedCircle) -> bool:
    """True iff the matching maps {1..2k} to itself."""
    half = 2 * rpmc.genus
    return all(rpmc.match(p) <= half for p in range(1, half + 1))


def lower_half(rpmc: RealPointedMatchedCircle) -> PointedMatchedCircle:
    """
    The half circle Z' on points 1..2k.

    Raises:
        NonorientableQuotient: if the matching does not preserve the lower half
    """
    if not quotient_orientable(rpmc):
        raise NonorientableQuotient(
            f"{rpmc.text_form()} does not preserve points 1..{2 * rpmc.genus}"
        )
    half = 2 * rpmc.genus
    try:
        return PointedMatchedCircle(half, [pq for pq in rpmc.pairs if pq[1] <= half])
    except PMCError as exc:
        raise NonorientableQuotient(f"lower half of {rpmc.text_form()}: {exc}") from exc


def reverse(pmc: PointedMatchedCircle) -> PointedMatchedCircle:
    """Orientation reversal -Z, relabeling i -> n+1-i."""
    n = pmc.n
    pairs = [(n + 1 - q, n + 1 - p) for p, q in pmc.pairs]
    if isinstance(pmc, RealPointedMatchedCircle):
        return RealPointedMatchedCircle(n, pairs)
    return PointedMatchedCircle(n, pairs)


_FAMILY = re.compile(r"^\s*(split|antipodal)\s*:\s*(\d+)\s*$")
_EXPLICIT = re.compile(r"^\s*(\d+)\s*;\s*\[(.*)\]\s*$")


def parse_pmc(text: str) -> PointedMatchedCircle:
    """
    Parse "split:k", "antipodal:k" or "4k;[1-3,2-4,...]".

    Raises:
        PMCError: on unreadable text or invalid circles
    """
    m = _FAMILY.match(text)
    if m:
        family, genus = m.group(1), int(m.group(2))
        return split_pmc(genus) if family == "split" else antipodal_pmc(genus)
    m = _EXPLICIT.match(text)
    if m:
        n = int(m.group(1))
        pairs: List[Pair] = []
        for item in filter(None, (s.strip() for s in m.group(2).split(","))):
            bits = item.split("-")
            if len(bits) != 2 or not all(b.strip().isdigit() for b in bits):
                raise PMCError(f"bad pair {item!r} in {text!r}")
            pairs.append((int(bits[0]), int(bits[1])))
        return make_pmc(n, pairs)
    raise PMCError(f"cannot parse pointed matched circle {text!r}")


def parse_real_pmc(text: str) -> RealPointedMatchedCircle:
    return realify(parse_pmc(text))
