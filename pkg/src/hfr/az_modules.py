"""
AZ Modules

Real type D structures of the AZ and AZ-bar diagrams of a real pointed
matched circle, the multiplicity-one small model, the type A module over
A'(Z) and the identity DD bimodule it pairs with.

Generators are strands diagrams fixed by the reflection. Each term of the
differential comes from one of nine families of domains per diagram; every
family is a separate enumerator below and arrows remember which family
produced them.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .algebra import (
    StrandsAlgebra,
    StrandsDiagram,
    complement_idempotent,
    crosses_midpoint,
    enumerate_symmetric,
    multiplicity_vector,
    reflect_diagram,
    split_at_midpoint,
    torus_name,
)
from .chain_complex import homology_dim
from .pmc import PointedMatchedCircle, RealPointedMatchedCircle, lower_half, require_real, reverse
from .type_a import BiGenerator, TypeAModule, TypeDDBimodule
from .type_d import (
    Arrow,
    ClosureReport,
    Generator,
    TypeDStructure,
    provincial_complex,
    quotient_structure,
    relabel,
    span_substructure,
)

logger = logging.getLogger(__name__)

Strand = Tuple[int, int]

AZ_SUFFIX = "~"
AZBAR_SUFFIX = "*"


class Move(NamedTuple):
    """Strands removed and added by one domain, plus the algebra chord it emits."""

    consumed: Tuple[Strand, ...]
    produced: Tuple[Strand, ...]
    chord: Optional[Strand] = None


class RuleContext:
    """The strands of one symmetric diagram, seen through the reflection."""

    def __init__(self, rpmc: RealPointedMatchedCircle, a: StrandsDiagram):
        self.rpmc = rpmc
        self.a = a
        self.n = rpmc.n
        self.half = 2 * rpmc.genus
        self.strands: List[Strand] = a.strands()
        self._present = set(self.strands)

    def tau(self, p: int) -> int:
        return self.n + 1 - p

    def mirror(self, s: Strand) -> Strand:
        return (self.tau(s[1]), self.tau(s[0]))

    def fixed(self) -> List[Strand]:
        """Strands [i, tau(i)] with i in the lower half."""
        return [s for s in self.strands if s[0] < s[1] and s[1] == self.tau(s[0])]

    def oriented(self) -> List[Tuple[Strand, Strand]]:
        """Each non-fixed strand with its reflection, in both orders."""
        return [(s, self.mirror(s)) for s in self.strands
                if self.mirror(s) != s and self.mirror(s) in self._present]

    def paired(self) -> List[Tuple[Strand, Strand]]:
        """Pairs [i, j], [tau(j), tau(i)] listed once, as the strand with j < tau(i)."""
        return [(s, ts) for s, ts in self.oriented() if s[1] < self.tau(s[0])]

    def empty(self, blocks: Callable[[int, int], bool]) -> bool:
        return not any(blocks(p, q) for p, q in self.strands)

    def apply(self, move: Move, normalize: bool) -> Optional[StrandsDiagram]:
        """
        Replace consumed strands by produced ones.

        A consumed horizontal strand takes its matched point with it. With
        `normalize`, produced strands are read as [min, max] and a produced
        horizontal strand brings its matched point; otherwise a produced
        strand must go strictly upward.
        """
        match = self.rpmc.match
        moving = list(self.a.moving)
        horizontal = set(self.a.horizontal)
        for s, t in move.consumed:
            if s == t:
                horizontal.discard(s)
                horizontal.discard(match(s))
            else:
                moving.remove((s, t))
        for x, y in move.produced:
            if normalize:
                x, y = min(x, y), max(x, y)
            if x == y and normalize:
                if x in horizontal or match(x) in horizontal:
                    return None
                horizontal.update((x, match(x)))
            elif x >= y:
                return None
            else:
                moving.append((x, y))
        return StrandsDiagram.build(moving, horizontal)


RuleFn = Callable[[RuleContext], Iterator[Move]]


def _distinct(*strands: Strand) -> bool:
    return len(set(strands)) == len(strands)


# AZ: state a~ has idempotent complementary to left_idem(a)

def _az_rectangles(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for f1 in ctx.fixed():
        for f2 in ctx.fixed():
            i, j = f1[0], f2[0]
            if i < j and ctx.empty(lambda p, q: i < p < j and t(j) < q < t(i)):
                yield Move((f1, f2), ((i, t(j)), (j, t(i))))


def _az_rectangle_pairs(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for s, ts in ctx.paired():
        for u, tu in ctx.paired():
            if not _distinct(s, u, ts, tu):
                continue
            (i, j), (l, m) = s, u
            if i < l <= m < j < t(l) and ctx.empty(lambda p, q: i < p < l <= m < q < j):
                yield Move((s, u, ts, tu), ((i, m), (l, j), (t(j), t(l)), (t(m), t(i))))


def _az_downward_hexagons(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for s, ts in ctx.paired():
        i, j = s
        for f in ctx.fixed():
            m = f[0]
            if i < t(j) < m < t(m) < j < t(i) and ctx.empty(lambda p, q: i < p < m and t(m) < q < j):
                yield Move((s, ts, f), ((i, t(m)), (t(j), j), (m, t(i))))


def _az_upward_hexagons(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for s, ts in ctx.paired():
        i, j = s
        for f in ctx.fixed():
            m = f[0]
            if m < i <= j < t(m) and ctx.empty(lambda p, q: m < p < i <= j < q < t(m)):
                yield Move((s, ts, f), ((m, j), (t(j), t(m)), (i, t(i))))


def _az_octagons(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for s, ts in ctx.paired():
        for u, tu in ctx.paired():
            if not _distinct(s, u, ts, tu):
                continue
            (i, j), (l, m) = s, u
            if i < t(j) < l < t(m) and ctx.empty(lambda p, q: i < p < l <= m < q < j):
                yield Move((s, ts, u, tu), ((i, m), (t(j), j), (l, t(l)), (t(m), t(i))))


def _az_disjoint_half_strips(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for s, ts in ctx.paired():
        i, j = s
        for l in range(j + 1, t(i)):
            if ctx.empty(lambda p, q: p < i <= j < q < l):
                yield Move((s, ts), ((i, l), (t(l), t(i))), (t(l), t(j)))


def _az_overlapping_half_strips(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for s, ts in ctx.paired():
        i, j = s
        if not j < t(i):
            continue
        for l in range(1, i):
            if ctx.empty(lambda p, q: l < p < i <= j < q):
                yield Move((s, ts), ((l, j), (t(j), t(l))), (l, i))


def _az_noncompact_hexagons(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for f in ctx.fixed():
        i = f[0]
        for l in range(t(i) + 1, ctx.n + 1):
            if ctx.empty(lambda p, q: p < i and t(i) < q < l):
                yield Move((f,), ((t(l), l),), (t(l), i))


def _az_noncompact_octagons(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for s, ts in ctx.paired():
        i, j = s
        if not (i <= j < t(i)):
            continue
        for l in range(t(i) + 1, ctx.n + 1):
            if ctx.empty(lambda p, q: p < i <= j < q < l):
                yield Move((s, ts), ((i, t(i)), (t(l), l)), (t(l), t(j)))


AZ_RULES: Sequence[Tuple[str, RuleFn]] = (
    ("(i)", _az_rectangles),
    ("(ii)", _az_rectangle_pairs),
    ("(iii)", _az_downward_hexagons),
    ("(iv)", _az_upward_hexagons),
    ("(v)", _az_octagons),
    ("(vi)", _az_disjoint_half_strips),
    ("(vii)", _az_overlapping_half_strips),
    ("(viii)", _az_noncompact_hexagons),
    ("(ix)", _az_noncompact_octagons),
)


# AZ-bar: state a* has idempotent complementary to right_idem(a)

def _azbar_rectangles(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for s, ts in ctx.paired():
        i, j = s
        if i < t(j) <= ctx.half and ctx.empty(lambda p, q: i < p < t(j) and j < q < t(i)):
            yield Move((s, ts), ((i, t(i)), (j, t(j))))


def _azbar_rectangle_pairs(ctx: RuleContext) -> Iterator[Move]:
    # (s, u) and (tau u, tau s) bound the same domain; keep the match with i < tau(j2)
    t = ctx.tau
    for s, ts in ctx.oriented():
        for u, tu in ctx.oriented():
            if not _distinct(s, u, ts, tu):
                continue
            (i, j), (i2, j2) = s, u
            if i < i2 <= j < j2 and i < t(j2) and ctx.empty(lambda p, q: i < p < i2 <= j < q < j2):
                yield Move((s, u, ts, tu), ((i, j2), (j, i2), (t(j2), t(i)), (t(i2), t(j))))


def _azbar_downward_hexagons(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for s, ts in ctx.paired():
        i, j = s
        for f in ctx.fixed():
            l = f[0]
            if i < l <= j < t(l) and ctx.empty(lambda p, q: i < p < l <= j < q < t(l)):
                yield Move((s, ts, f), ((i, t(i)), (l, j), (t(l), t(j))))


def _azbar_upward_hexagons(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for s, ts in ctx.paired():
        i, j = s
        for f in ctx.fixed():
            l = f[0]
            if i < l < t(j) < j and ctx.empty(lambda p, q: i < p < t(j) and j < q < t(l)):
                yield Move((s, ts, f), ((t(j), j), (l, t(i)), (i, t(l))))


def _azbar_octagons(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    fixed = ctx.fixed()
    for s, ts in ctx.paired():
        i, j = s
        for f1 in fixed:
            for f2 in fixed:
                l, m = f1[0], f2[0]
                if i < l < m <= j < t(m) and ctx.empty(lambda p, q: i < p < m <= j < q < t(l)):
                    yield Move((s, ts, f1, f2), ((i, t(l)), (l, t(i)), (m, j), (t(j), t(m))))


def _azbar_disjoint_half_strips(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for s, ts in ctx.paired():
        i, j = s
        if not j < t(i):
            continue
        for l in range(i, j):
            if ctx.empty(lambda p, q: p < i <= l < q < j):
                yield Move((s, ts), ((i, l), (t(l), t(i))), (l, j))


def _azbar_overlapping_half_strips(ctx: RuleContext) -> Iterator[Move]:
    # the chord runs from tau(l) up to tau(i): it shortens the top of [tau(j), tau(i)]
    t = ctx.tau
    for s, ts in ctx.paired():
        i, j = s
        if not j < t(i):
            continue
        for l in range(i + 1, j + 1):
            if ctx.empty(lambda p, q: i < p < l <= j < q):
                yield Move((s, ts), ((l, j), (t(j), t(l))), (t(l), t(i)))


def _azbar_noncompact_hexagons(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    for f in ctx.fixed():
        i = f[0]
        for j in range(i + 1, ctx.half + 1):
            if ctx.empty(lambda p, q: i < p < j and t(j) < q):
                yield Move((f,), ((j, t(j)),), (t(j), t(i)))


def _azbar_noncompact_octagons(ctx: RuleContext) -> Iterator[Move]:
    t = ctx.tau
    fixed = ctx.fixed()
    for f1 in fixed:
        for f2 in fixed:
            i, j = f1[0], f2[0]
            if not t(j) < t(i):
                continue
            for l in range(j, t(j)):
                if ctx.empty(lambda p, q: p < j and l < q < t(i)):
                    yield Move((f1, f2), ((j, l), (t(l), t(j))), (l, t(i)))


AZBAR_RULES: Sequence[Tuple[str, RuleFn]] = (
    ("(i)", _azbar_rectangles),
    ("(ii)", _azbar_rectangle_pairs),
    ("(iii)", _azbar_downward_hexagons),
    ("(iv)", _azbar_upward_hexagons),
    ("(v)", _azbar_octagons),
    ("(vi)", _azbar_disjoint_half_strips),
    ("(vii)", _azbar_overlapping_half_strips),
    ("(viii)", _azbar_noncompact_hexagons),
    ("(ix)", _azbar_noncompact_octagons),
)


# Building the structures

def chord_coefficient(algebra: StrandsAlgebra, source: frozenset, chord: Strand,
                      target: frozenset) -> Optional[StrandsDiagram]:
    """
    The algebra element with one moving strand `chord` and left idempotent
    `source`, or None when the idempotents do not allow it.
    """
    x, y = chord
    if not x < y:
        return None
    pmc = algebra.pmc
    start = pmc.pair_of(x)
    if start not in source:
        return None
    points = [p for idx in source if idx != start for p in pmc.pair_points(idx)]
    rho = StrandsDiagram.build([chord], points)
    if not algebra.is_valid(rho) or algebra.right_idem(rho) != target:
        return None
    return rho


def _build(rpmc: RealPointedMatchedCircle, rules: Sequence[Tuple[str, RuleFn]],
           idempotent_of: Callable[[StrandsAlgebra, StrandsDiagram], frozenset],
           suffix: str, normalize: bool) -> TypeDStructure:
    algebra = StrandsAlgebra(rpmc)
    diagrams = enumerate_symmetric(rpmc)
    names = {a: f"{a}{suffix}" for a in diagrams}
    idems = {a: idempotent_of(algebra, a) for a in diagrams}
    generators = [Generator(names[a], idems[a], a) for a in diagrams]

    arrows: List[Arrow] = []
    tags: Dict[Arrow, str] = {}
    for a in diagrams:
        ctx = RuleContext(rpmc, a)
        # domains are counted mod 2
        found: Dict[Arrow, str] = {}
        for tag, rule in rules:
            for move in rule(ctx):
                b = ctx.apply(move, normalize)
                if b is None or b not in idems:
                    continue
                if move.chord is None:
                    if idems[a] != idems[b]:
                        continue
                    coeff = algebra.idempotent(idems[a])
                else:
                    coeff = chord_coefficient(algebra, idems[a], move.chord, idems[b])
                    if coeff is None:
                        continue
                arrow = (names[a], coeff, names[b])
                if arrow in found:
                    del found[arrow]
                else:
                    found[arrow] = tag
        arrows.extend(found)
        tags.update(found)
    result = TypeDStructure(algebra, generators, arrows, tags)
    logger.info("%s model of %s: %r", "AZ" if suffix == AZ_SUFFIX else "AZ-bar",
                rpmc.text_form(), result)
    return result


def _az_idempotent(algebra: StrandsAlgebra, a: StrandsDiagram) -> frozenset:
    return complement_idempotent(algebra.pmc, algebra.left_idem(a))


def _azbar_idempotent(algebra: StrandsAlgebra, a: StrandsDiagram) -> frozenset:
    return complement_idempotent(algebra.pmc, algebra.right_idem(a))


def cfdr_az(rpmc: PointedMatchedCircle) -> TypeDStructure:
    """
    Real type D structure of the AZ diagram over A(Z).

    Generators are the symmetric diagrams a, named "<a>~", with idempotent
    complementary to left_idem(a). Arrow tags record the domain family.

    Raises:
        NotRealPMC: if `rpmc` carries no reflection
    """
    rpmc = require_real(rpmc)
    return _build(rpmc, AZ_RULES, _az_idempotent, AZ_SUFFIX, normalize=False)


def cfdr_azbar(rpmc: PointedMatchedCircle) -> TypeDStructure:
    """
    Real type D structure of the AZ-bar diagram over A(Z).

    Generators are named "<a>*" with idempotent complementary to right_idem(a).

    Raises:
        NotRealPMC: if `rpmc` carries no reflection
    """
    rpmc = require_real(rpmc)
    return _build(rpmc, AZBAR_RULES, _azbar_idempotent, AZBAR_SUFFIX, normalize=True)


# Small model and the multiplicity-two reduction

def symmetrize(rpmc: PointedMatchedCircle, a: StrandsDiagram) -> StrandsDiagram:
    """a together with its reflection, for a diagram supported in the lower half."""
    image = reflect_diagram(a, rpmc.n)
    return StrandsDiagram.build(list(a.moving) + list(image.moving),
                                list(a.horizontal) + list(image.horizontal))


def small_model(rpmc: PointedMatchedCircle) -> TypeDStructure:
    """
    Multiplicity-one model of the AZ structure for an orientable quotient.

    One generator per multiplicity-one diagram a of A'(Z'), named after the
    symmetric diagram a + tau(a) exactly as in cfdr_az. Arrows: d(a) with
    idempotent coefficient, left extensions rho*a with coefficient rho, and
    right extensions a*rho with the reflected chord as coefficient.

    Raises:
        NotRealPMC, NonorientableQuotient
    """
    rpmc = require_real(rpmc)
    half_pmc = lower_half(rpmc)
    full = StrandsAlgebra(rpmc)
    half = StrandsAlgebra(half_pmc, multiplicity_one=True)
    tau = rpmc.tau
    h = half_pmc.n

    def name(a: StrandsDiagram) -> str:
        return f"{symmetrize(rpmc, a)}{AZ_SUFFIX}"

    diagrams = half.generators()
    idems = {a: _az_idempotent(full, symmetrize(rpmc, a)) for a in diagrams}
    generators = [Generator(name(a), idems[a], symmetrize(rpmc, a)) for a in diagrams]
    chords = [(i, j) for i in range(1, h) for j in range(i + 1, h + 1)]

    def completed(chord: Strand, idem: frozenset, end: int) -> Optional[StrandsDiagram]:
        """chord plus the horizontals of `idem` away from pair(end), if that is valid."""
        pair = half_pmc.pair_of(end)
        if pair not in idem:
            return None
        points = [p for idx in idem if idx != pair for p in half_pmc.pair_points(idx)]
        d = StrandsDiagram.build([chord], points)
        return d if half.is_valid(d) else None

    arrows: List[Arrow] = []
    for a in diagrams:
        src = name(a)
        iota = idems[a]
        for c in half.differential(a):
            if idems[c] == iota:
                arrows.append((src, full.idempotent(iota), name(c)))
        for i, j in chords:
            # left extension rho * a
            rho = completed((i, j), half.left_idem(a), j)
            if rho is not None:
                for c in half.multiply(rho, a):
                    coeff = chord_coefficient(full, iota, (i, j), idems[c])
                    if coeff is not None:
                        arrows.append((src, coeff, name(c)))
            # right extension a * rho, emitted as the reflected chord
            start_pair = half_pmc.pair_of(i)
            if start_pair in half.right_idem(a):
                points = [p for idx in half.right_idem(a) if idx != start_pair
                          for p in half_pmc.pair_points(idx)]
                rho = StrandsDiagram.build([(i, j)], points)
                if half.is_valid(rho):
                    for c in half.multiply(a, rho):
                        coeff = chord_coefficient(full, iota, (tau(j), tau(i)), idems[c])
                        if coeff is not None:
                            arrows.append((src, coeff, name(c)))
    result = TypeDStructure(full, generators, arrows)
    logger.info("small model of %s: %r", rpmc.text_form(), result)
    return result


@dataclass
class Mult2Reduction:
    """Split of an AZ structure along the multiplicity-two generators."""

    substructure: TypeDStructure
    quotient: TypeDStructure
    closure: ClosureReport
    contractible: bool


def has_multiplicity_two(g: Generator, n: int) -> bool:
    vec = multiplicity_vector(g.data, n)
    return bool(vec.size) and int(vec.max()) >= 2


def mult2_reduction(D: TypeDStructure) -> Mult2Reduction:
    """
    Separate the generators whose diagram has multiplicity two somewhere.

    The substructure they span is checked for closure and for acyclic
    provincial part; the quotient is the reduced model.
    """
    n = D.algebra.pmc.n
    heavy = lambda g: has_multiplicity_two(g, n)
    sub, closure = span_substructure(D, heavy, strict=False)
    quotient = quotient_structure(D, heavy)
    contractible = closure.closed and homology_dim(provincial_complex(sub)) == 0
    if not closure.closed:
        logger.warning("multiplicity-two generators are not closed: %d arrows leave",
                       len(closure.leaving))
    logger.info("multiplicity-two reduction: %d -> %d generators (contractible=%s)",
                len(D), len(quotient), contractible)
    return Mult2Reduction(sub, quotient, closure, contractible)


# Type A module and the identity DD bimodule

def cfar_az(rpmc: PointedMatchedCircle) -> TypeAModule:
    """
    Right type A module over A'(Z) for an orientable quotient.

    Generators are the multiplicity-one diagrams a of A'(Z'), with idempotent
    right_idem(a + tau(a)). m1 is the differential of A'(Z'); m2(a, b) is
    zero when b crosses the midpoint and tau(b'') * a * b' otherwise, where
    b' and b'' are the lower and upper parts of b.

    Raises:
        NotRealPMC, NonorientableQuotient
    """
    rpmc = require_real(rpmc)
    n = rpmc.n
    half = StrandsAlgebra(lower_half(rpmc), multiplicity_one=True)
    algebra = StrandsAlgebra(rpmc, multiplicity_one=True)
    diagrams = half.generators()
    gens = {a: Generator(str(a), algebra.right_idem(symmetrize(rpmc, a)), a) for a in diagrams}

    by_left: Dict[frozenset, List[StrandsDiagram]] = {}
    for b in algebra.generators():
        if not b.is_idempotent and not crosses_midpoint(b, n):
            by_left.setdefault(algebra.left_idem(b), []).append(b)

    actions = []
    for a, g in gens.items():
        for c in half.differential(a):
            actions.append((g.name, (), gens[c].name))
        for b in by_left.get(g.idempotent, ()):
            lower, upper = split_at_midpoint(b, n)
            front = reflect_diagram(upper, n)
            if not (half.is_valid(front) and half.is_valid(lower)):
                continue
            product = half.product(half.product(half.element((front,)), half.element((a,))),
                                   half.element((lower,)))
            for c in product:
                actions.append((g.name, (b,), gens[c].name))
    module = TypeAModule(algebra, list(gens.values()), actions)
    logger.info("CFAR of %s: %r", rpmc.text_form(), module)
    return module


def cfdd_identity(pmc: PointedMatchedCircle) -> TypeDDBimodule:
    """
    Identity DD bimodule with left side A(Z) and right side A'(-Z).

    Generator x_I has left idempotent I and right idempotent r(comp I), r the
    relabeling i -> n+1-i. Each chord [i, j] leaving I gives one arrow with
    coefficients the chord on the left and its relabeling on the right.
    """
    n = pmc.n
    mirror = reverse(pmc)
    left = StrandsAlgebra(pmc)
    right = StrandsAlgebra(mirror, multiplicity_one=True)
    r_pair = lambda idx: mirror.pair_of(n + 1 - pmc.pair_points(idx)[0])

    gens: Dict[frozenset, BiGenerator] = {}
    for idem in left.all_idempotents():
        label = "x" + "".join(str(i) for i in sorted(idem))
        gens[idem] = BiGenerator(label, idem, frozenset(r_pair(i) for i in
                                                         complement_idempotent(pmc, idem)))
    arrows = []
    for idem, g in gens.items():
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                p, q = pmc.pair_of(i), pmc.pair_of(j)
                if p not in idem or q in idem:
                    continue
                target = gens[(idem - {p}) | {q}]
                a = StrandsDiagram.build(
                    [(i, j)], [x for idx in idem - {p} for x in pmc.pair_points(idx)])
                b = StrandsDiagram.build(
                    [(n + 1 - j, n + 1 - i)],
                    [x for idx in g.right - {r_pair(q)} for x in mirror.pair_points(idx)])
                if left.is_valid(a) and right.is_valid(b):
                    arrows.append((g.name, a, b, target.name))
    result = TypeDDBimodule(left, right, list(gens.values()), arrows)
    logger.info("identity DD bimodule of %s: %r", pmc.text_form(), result)
    return result


def pairing_names(D: TypeDStructure, rpmc: PointedMatchedCircle) -> TypeDStructure:
    """Rename box_A_DD(cfar_az, cfdd_identity) generators to small-model names."""
    mapping = {g.name: f"{symmetrize(rpmc, g.data[0])}{AZ_SUFFIX}" for g in D.generators}
    return relabel(D, mapping)


def display_name(name: str, pmc: PointedMatchedCircle) -> str:
    """Genus-one generator names as rho~ / rho*; others unchanged."""
    for suffix in (AZ_SUFFIX, AZBAR_SUFFIX):
        if not name.endswith(suffix) or pmc.n != 4:
            continue
        body = name[:-len(suffix)]
        points = [int(x) for x in body.replace("{", "").replace("}", "").replace("[", "")
                  .replace("]", ",").split(",") if x.strip()]
        if len(points) != 2:
            return name
        label = torus_name(StrandsDiagram.build([tuple(points)]))
        if label is None:
            return name
        return "ρ̃" + label[1:] if suffix == AZ_SUFFIX else label + "*"
    return name
