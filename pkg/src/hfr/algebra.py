"""
Strands Algebra

Basis elements of the strands algebra A(Z) in the central summand, the
multiplicity-one quotient A'(Z), F2 sums of basis elements, and the
reflection action on a real pointed matched circle.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import AlgebraMismatch, InvalidDiagram
from .pmc import PointedMatchedCircle, RealPointedMatchedCircle, split_pmc

logger = logging.getLogger(__name__)

Strand = Tuple[int, int]
Idempotent = FrozenSet[int]


@dataclass(frozen=True, order=True)
class StrandsDiagram:
    """
    A strands diagram: moving strands [i,j] (i < j) and horizontal points.

    Horizontal points are stored individually; the owning algebra enforces
    that they come in matched pairs.
    """

    moving: Tuple[Strand, ...] = ()
    horizontal: Tuple[int, ...] = ()

    @staticmethod
    def build(moving: Iterable[Sequence[int]] = (),
              horizontal: Iterable[int] = ()) -> "StrandsDiagram":
        return StrandsDiagram(
            tuple(sorted((int(s), int(t)) for s, t in moving)),
            tuple(sorted(int(h) for h in horizontal)),
        )

    @property
    def starts(self) -> Tuple[int, ...]:
        return tuple(s for s, _ in self.moving)

    @property
    def ends(self) -> Tuple[int, ...]:
        return tuple(t for _, t in self.moving)

    def strands(self) -> List[Strand]:
        """All strands, horizontal points included as [h,h]."""
        return sorted(list(self.moving) + [(h, h) for h in self.horizontal])

    @property
    def is_idempotent(self) -> bool:
        return not self.moving

    def __str__(self) -> str:
        return "{" + ",".join(f"[{s},{t}]" for s, t in self.strands()) + "}"


def inversions(lift: Sequence[Strand]) -> int:
    """Crossing count of a lifted diagram (each horizontal pair lifted to one point)."""
    count = 0
    for i in range(len(lift)):
        s1, t1 = lift[i]
        for j in range(i + 1, len(lift)):
            s2, t2 = lift[j]
            if (s1 - s2) * (t1 - t2) < 0:
                count += 1
    return count


def reflect_diagram(d: StrandsDiagram, n: int) -> StrandsDiagram:
    """Relabel points by i -> n+1-i, reversing strand direction."""
    return StrandsDiagram.build(
        [(n + 1 - t, n + 1 - s) for s, t in d.moving],
        [n + 1 - h for h in d.horizontal],
    )


class StrandsAlgebra:
    """
    The central summand of A(Z), or of A'(Z) when multiplicity_one is set.

    Algebras compare equal when their matched pairs and flag agree.
    """

    def __init__(self, pmc: PointedMatchedCircle, multiplicity_one: bool = False):
        """
        Args:
            pmc: Underlying pointed matched circle
            multiplicity_one: Work in the quotient by multiplicity >= 2 diagrams
        """
        self.pmc = pmc
        self.multiplicity_one = multiplicity_one
        self._generators: Optional[List[StrandsDiagram]] = None

    def key(self) -> Tuple:
        return (self.pmc.key(), self.multiplicity_one)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StrandsAlgebra):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        name = "A'" if self.multiplicity_one else "A"
        return f"{name}({self.pmc.text_form()})"

    # Diagrams

    def horizontal_pairs(self, d: StrandsDiagram) -> List[int]:
        return sorted({self.pmc.pair_of(h) for h in d.horizontal})

    def left_idem(self, d: StrandsDiagram) -> Idempotent:
        pair_of = self.pmc.pair_of
        return frozenset([pair_of(s) for s in d.starts] + [pair_of(h) for h in d.horizontal])

    def right_idem(self, d: StrandsDiagram) -> Idempotent:
        pair_of = self.pmc.pair_of
        return frozenset([pair_of(t) for t in d.ends] + [pair_of(h) for h in d.horizontal])

    def max_multiplicity(self, d: StrandsDiagram) -> int:
        vec = multiplicity_vector(d, self.pmc.n)
        return int(vec.max()) if vec.size else 0

    def validate(self, d: StrandsDiagram) -> None:
        """Raise InvalidDiagram unless `d` is a basis element of this algebra."""
        pmc = self.pmc
        n, k = pmc.n, pmc.genus
        for s, t in d.moving:
            if not 1 <= s < t <= n:
                raise InvalidDiagram(f"{d}: strand [{s},{t}] is not upward inside 1..{n}")
        for h in d.horizontal:
            if not 1 <= h <= n:
                raise InvalidDiagram(f"{d}: horizontal point {h} outside 1..{n}")
        hset = set(d.horizontal)
        if len(hset) != len(d.horizontal):
            raise InvalidDiagram(f"{d}: repeated horizontal point")
        if any(pmc.match(h) not in hset for h in hset):
            raise InvalidDiagram(f"{d}: horizontal set is not closed under the matching")
        start_pairs = [pmc.pair_of(s) for s in d.starts]
        end_pairs = [pmc.pair_of(t) for t in d.ends]
        if len(set(start_pairs)) != len(start_pairs):
            raise InvalidDiagram(f"{d}: initial points are repeated or matched")
        if len(set(end_pairs)) != len(end_pairs):
            raise InvalidDiagram(f"{d}: terminal points are repeated or matched")
        h_pairs = {pmc.pair_of(h) for h in hset}
        if h_pairs & (set(start_pairs) | set(end_pairs)):
            raise InvalidDiagram(f"{d}: horizontal strand meets a moving endpoint pair")
        if len(d.moving) + len(h_pairs) != k:
            raise InvalidDiagram(f"{d}: not in the central summand (needs {k} strands)")
        if self.multiplicity_one and self.max_multiplicity(d) > 1:
            raise InvalidDiagram(f"{d}: multiplicity greater than one")

    def is_valid(self, d: StrandsDiagram) -> bool:
        try:
            self.validate(d)
        except InvalidDiagram:
            return False
        return True

    def diagram(self, moving: Iterable[Sequence[int]] = (),
                horizontal: Iterable[int] = ()) -> StrandsDiagram:
        """Build and validate a diagram."""
        d = StrandsDiagram.build(moving, horizontal)
        self.validate(d)
        return d

    def idempotent(self, idem: Iterable[int]) -> StrandsDiagram:
        points = []
        for idx in idem:
            points.extend(self.pmc.pair_points(idx))
        return StrandsDiagram.build((), points)

    def all_idempotents(self) -> List[Idempotent]:
        return [frozenset(c) for c in
                itertools.combinations(range(self.pmc.num_pairs), self.pmc.genus)]

    def generators(self) -> List[StrandsDiagram]:
        """All basis diagrams, canonically ordered."""
        if self._generators is None:
            self._generators = _enumerate(self)
            logger.info("%r has %d basis elements", self, len(self._generators))
        return list(self._generators)

    # Elements

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, ())

    def element(self, terms: Iterable[StrandsDiagram]) -> "AlgebraElement":
        return AlgebraElement(self, terms)

    # Product and differential

    def multiply(self, a: StrandsDiagram, b: StrandsDiagram) -> "AlgebraElement":
        """
        Product of two basis diagrams.

        Strands of `a` ending at m continue along the strand of `b` starting at
        m (or stay put if m is horizontal in `b`). The product vanishes when
        idempotents disagree, a strand would have to continue from its matched
        partner, or a double crossing appears.
        """
        if self.right_idem(a) != self.left_idem(b):
            return self.zero()
        if self.multiplicity_one and (self.max_multiplicity(a) > 1 or self.max_multiplicity(b) > 1):
            return self.zero()

        b_from = dict(b.moving)
        b_h = set(b.horizontal)
        lift_a: List[Strand] = []
        lift_b: List[Strand] = []
        for s, m in a.moving:
            if m in b_from:
                t = b_from[m]
            elif m in b_h:
                t = m
            else:
                return self.zero()
            lift_a.append((s, m))
            lift_b.append((m, t))

        kept_h: List[int] = []
        for idx in self.horizontal_pairs(a):
            p, q = self.pmc.pair_points(idx)
            if p in b_from:
                lift_a.append((p, p))
                lift_b.append((p, b_from[p]))
            elif q in b_from:
                lift_a.append((q, q))
                lift_b.append((q, b_from[q]))
            else:
                kept_h.extend((p, q))
                lift_a.append((p, p))
                lift_b.append((p, p))

        lift_ab = [(la[0], lb[1]) for la, lb in zip(lift_a, lift_b)]
        if inversions(lift_ab) != inversions(lift_a) + inversions(lift_b):
            return self.zero()

        result = StrandsDiagram.build([st for st in lift_ab if st[0] != st[1]], kept_h)
        if self.multiplicity_one and self.max_multiplicity(result) > 1:
            return self.zero()
        return AlgebraElement(self, (result,))

    def differential(self, a: StrandsDiagram) -> "AlgebraElement":
        """Sum of crossing resolutions that lower the crossing count by exactly one."""
        pmc = self.pmc
        moving = list(a.moving)
        min_lift = [(pmc.pair_points(idx)[0],) * 2 for idx in self.horizontal_pairs(a)]
        base = inversions(moving + min_lift)
        terms: List[StrandsDiagram] = []

        for (s1, t1), (s2, t2) in itertools.combinations(moving, 2):
            if t1 <= t2:
                continue
            rest = [st for st in moving if st not in ((s1, t1), (s2, t2))]
            resolved = rest + [(s1, t2), (s2, t1)]
            if inversions(resolved + min_lift) == base - 1:
                terms.append(StrandsDiagram.build(resolved, a.horizontal))

        for s, t in moving:
            for p in a.horizontal:
                if not s < p < t:
                    continue
                pair = pmc.pair_of(p)
                others = [(pmc.pair_points(idx)[0],) * 2
                          for idx in self.horizontal_pairs(a) if idx != pair]
                rest = [st for st in moving if st != (s, t)]
                before = moving + [(p, p)] + others
                resolved = rest + [(s, p), (p, t)]
                if inversions(resolved + others) == inversions(before) - 1:
                    kept = [h for h in a.horizontal if pmc.pair_of(h) != pair]
                    terms.append(StrandsDiagram.build(resolved, kept))

        return AlgebraElement(self, terms)

    def product(self, x: "AlgebraElement", y: "AlgebraElement") -> "AlgebraElement":
        """Bilinear extension of multiply."""
        self._check_owner(x)
        self._check_owner(y)
        out: List[StrandsDiagram] = []
        for a in x:
            for b in y:
                out.extend(self.multiply(a, b).terms)
        return AlgebraElement(self, out)

    def d(self, x: "AlgebraElement") -> "AlgebraElement":
        self._check_owner(x)
        out: List[StrandsDiagram] = []
        for a in x:
            out.extend(self.differential(a).terms)
        return AlgebraElement(self, out)

    def _check_owner(self, x: "AlgebraElement") -> None:
        if x.algebra != self:
            raise AlgebraMismatch(f"element over {x.algebra!r} used in {self!r}")


class AlgebraElement:
    """An F2 sum of basis diagrams, stored sorted and duplicate-free."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: StrandsAlgebra, terms: Iterable[StrandsDiagram] = ()):
        acc: set = set()
        for t in terms:
            acc ^= {t}
        self.algebra = algebra
        self.terms: Tuple[StrandsDiagram, ...] = tuple(sorted(acc))

    def __iter__(self) -> Iterator[StrandsDiagram]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if other.algebra != self.algebra:
            raise AlgebraMismatch(f"cannot add {self.algebra!r} and {other.algebra!r}")
        return AlgebraElement(self.algebra, self.terms + other.terms)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        if other.algebra != self.algebra:
            raise AlgebraMismatch(f"cannot multiply {self.algebra!r} by {other.algebra!r}")
        return self.algebra.product(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.algebra, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(diagram_label(t, self.algebra.pmc) for t in self.terms)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.algebra!r}, {self})"


def _enumerate(algebra: StrandsAlgebra) -> List[StrandsDiagram]:
    pmc = algebra.pmc
    n, k = pmc.n, pmc.genus
    pair_of = pmc.pair_of
    intervals = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    found: List[StrandsDiagram] = []

    def with_horizontals(chosen: List[Strand], used: set) -> None:
        free = [idx for idx in range(pmc.num_pairs) if idx not in used]
        for hp in itertools.combinations(free, k - len(chosen)):
            points = [x for idx in hp for x in pmc.pair_points(idx)]
            d = StrandsDiagram.build(chosen, points)
            if not algebra.multiplicity_one or algebra.max_multiplicity(d) <= 1:
                found.append(d)

    def extend(first: int, chosen: List[Strand], starts: set, ends: set) -> None:
        with_horizontals(chosen, starts | ends)
        if len(chosen) == k:
            return
        for pos in range(first, len(intervals)):
            s, t = intervals[pos]
            ps, pt = pair_of(s), pair_of(t)
            if ps in starts or pt in ends:
                continue
            chosen.append((s, t))
            starts.add(ps)
            ends.add(pt)
            extend(pos + 1, chosen, starts, ends)
            chosen.pop()
            starts.discard(ps)
            ends.discard(pt)

    extend(0, [], set(), set())
    return sorted(found)


def enumerate_generators(pmc: PointedMatchedCircle,
                         multiplicity_one: bool = False) -> List[StrandsDiagram]:
    """All central-summand diagrams of A(Z) (or A'(Z)), canonically ordered."""
    return StrandsAlgebra(pmc, multiplicity_one).generators()


def enumerate_symmetric(rpmc: RealPointedMatchedCircle,
                        multiplicity_one: bool = False) -> List[StrandsDiagram]:
    """
    Diagrams fixed by the reflection, built from reflection orbits.

    Orbits are fixed strands [i, tau(i)], pairs {[i,j], [tau(j), tau(i)]}
    and horizontal classes closed under both the matching and tau.
    """
    algebra = StrandsAlgebra(rpmc, multiplicity_one)
    n, k, tau = rpmc.n, rpmc.genus, rpmc.tau
    orbits: List[Tuple[int, Tuple[Strand, ...], Tuple[int, ...]]] = []
    for i in range(1, 2 * k + 1):
        orbits.append((1, ((i, tau(i)),), ()))
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if i + j < n + 1:
                orbits.append((2, ((i, j), (tau(j), tau(i))), ()))
    seen = set()
    for p in range(1, n + 1):
        orbit = frozenset({p, rpmc.match(p), tau(p), tau(rpmc.match(p))})
        if orbit not in seen:
            seen.add(orbit)
            orbits.append((len(orbit) // 2, (), tuple(sorted(orbit))))

    found = set()

    def choose(first: int, weight: int, moving: List[Strand], horizontal: List[int]) -> None:
        if weight == k:
            d = StrandsDiagram.build(moving, horizontal)
            if algebra.is_valid(d):
                found.add(d)
            return
        for pos in range(first, len(orbits)):
            w, mv, hz = orbits[pos]
            if weight + w > k:
                continue
            choose(pos + 1, weight + w, moving + list(mv), horizontal + list(hz))

    choose(0, 0, [], [])
    return sorted(found)


def tau_act(rpmc: RealPointedMatchedCircle, a: StrandsDiagram) -> StrandsDiagram:
    """Reflection: [i,j] -> [tau(j), tau(i)], h -> tau(h)."""
    return reflect_diagram(a, rpmc.n)


def is_symmetric(rpmc: RealPointedMatchedCircle, a: StrandsDiagram) -> bool:
    return tau_act(rpmc, a) == a


def multiplicity_vector(a: StrandsDiagram, n: int) -> np.ndarray:
    """Local multiplicity over each unit interval (i, i+1), length n-1."""
    vec = np.zeros(max(n - 1, 0), dtype=int)
    for s, t in a.moving:
        vec[s - 1:t - 1] += 1
    return vec


def complement_idempotent(pmc: PointedMatchedCircle, idem: Iterable[int]) -> Idempotent:
    return frozenset(range(pmc.num_pairs)) - frozenset(idem)


def mirror_antihom(pmc: PointedMatchedCircle, a: StrandsDiagram) -> StrandsDiagram:
    """
    Anti-isomorphism A(Z') -> A(-Z') induced by reflecting the half circle.

    The image lives over reverse(pmc); r(a*b) = r(b)*r(a).
    """
    return reflect_diagram(a, pmc.n)


def crosses_midpoint(a: StrandsDiagram, n: int) -> bool:
    half = n // 2
    return any(s <= half < t for s, t in a.moving)


def split_at_midpoint(a: StrandsDiagram, n: int) -> Tuple[StrandsDiagram, StrandsDiagram]:
    """Lower and upper parts of a diagram with no strand crossing the midpoint."""
    half = n // 2
    lower = StrandsDiagram.build([st for st in a.moving if st[1] <= half],
                                 [h for h in a.horizontal if h <= half])
    upper = StrandsDiagram.build([st for st in a.moving if st[0] > half],
                                 [h for h in a.horizontal if h > half])
    return lower, upper


# Torus algebra names

_SUBSCRIPT = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_PLAIN = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")

TORUS_CHORDS: Dict[str, Strand] = {
    "1": (1, 2), "2": (2, 3), "3": (3, 4),
    "12": (1, 3), "23": (2, 4), "123": (1, 4),
}
TORUS_IDEMPOTENTS: Dict[str, Tuple[int, int]] = {"0": (1, 3), "1": (2, 4)}


def torus_algebra(multiplicity_one: bool = False) -> StrandsAlgebra:
    return StrandsAlgebra(split_pmc(1), multiplicity_one)


def torus_element(name: str) -> StrandsDiagram:
    """
    Parse a torus algebra name: "rho12", "ρ₁₂", "12", "iota0", "ι₀".
    """
    text = name.strip().translate(_PLAIN)
    for prefix in ("iota", "ι", "i"):
        if text.startswith(prefix) and text[len(prefix):] in TORUS_IDEMPOTENTS:
            return StrandsDiagram.build((), TORUS_IDEMPOTENTS[text[len(prefix):]])
    for prefix in ("rho", "ρ", "r"):
        if text.startswith(prefix):
            text = text[len(prefix):]
            break
    if text not in TORUS_CHORDS:
        raise InvalidDiagram(f"unknown torus algebra element {name!r}")
    return StrandsDiagram.build((TORUS_CHORDS[text],))


def torus_name(d: StrandsDiagram) -> Optional[str]:
    """Pretty name for a genus-1 diagram, or None."""
    if not d.moving:
        for label, pts in TORUS_IDEMPOTENTS.items():
            if d.horizontal == pts:
                return "ι" + label.translate(_SUBSCRIPT)
        return None
    if len(d.moving) == 1 and not d.horizontal:
        for label, chord in TORUS_CHORDS.items():
            if d.moving[0] == chord:
                return "ρ" + label.translate(_SUBSCRIPT)
    return None


def diagram_label(d: StrandsDiagram, pmc: PointedMatchedCircle) -> str:
    """Torus names at genus 1, strand lists otherwise."""
    if pmc.n == 4:
        name = torus_name(d)
        if name is not None:
            return name
    return str(d)
