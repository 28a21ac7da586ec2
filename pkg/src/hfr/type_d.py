"""
Type D Structures

Generators carry idempotents; delta^1 is a finite F2 set of arrows
(source, coefficient, target) with the coefficient's left idempotent equal
to the source idempotent and its right idempotent equal to the target's.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from . import config
from .algebra import StrandsAlgebra, StrandsDiagram, diagram_label
from .chain_complex import ChainComplex
from .errors import AlgebraMismatch, CapExceeded, IdempotentMismatch, InvalidDiagram, NotClosed

logger = logging.getLogger(__name__)

Arrow = Tuple[str, StrandsDiagram, str]


@dataclass(frozen=True)
class Generator:
    """A named generator with its idempotent (a set of pair indices)."""

    name: str
    idempotent: FrozenSet[int]
    data: Any = field(default=None, compare=False, hash=False)


def toggle_arrows(arrows: Iterable[Arrow]) -> List[Arrow]:
    """Reduce a list of arrows mod 2 and sort it."""
    acc: set = set()
    for arrow in arrows:
        acc ^= {arrow}
    return sorted(acc, key=lambda a: (a[0], a[2], a[1]))


class TypeDStructure:
    """
    A type D structure over a strands algebra.

    Arrows are given as triples and reduced mod 2. An optional `tags` map
    records where each arrow came from (for example the rule that produced it).
    """

    def __init__(self, algebra: StrandsAlgebra, generators: Sequence[Generator],
                 arrows: Iterable[Arrow] = (), tags: Optional[Dict[Arrow, str]] = None):
        self.algebra = algebra
        self.generators: List[Generator] = list(generators)
        self._by_name: Dict[str, Generator] = {}
        for g in self.generators:
            if g.name in self._by_name:
                raise IdempotentMismatch(f"duplicate generator name {g.name!r}")
            if len(g.idempotent) != algebra.pmc.genus:
                raise IdempotentMismatch(
                    f"generator {g.name!r} idempotent {sorted(g.idempotent)} "
                    f"does not have {algebra.pmc.genus} pairs")
            self._by_name[g.name] = g

        self.arrows: List[Arrow] = toggle_arrows(arrows)
        self._out: Dict[str, List[Tuple[StrandsDiagram, str]]] = {g.name: [] for g in self.generators}
        self._in: Dict[str, List[Tuple[StrandsDiagram, str]]] = {g.name: [] for g in self.generators}
        for src, coeff, tgt in self.arrows:
            self._check_arrow(src, coeff, tgt)
            self._out[src].append((coeff, tgt))
            self._in[tgt].append((coeff, src))
        present = set(self.arrows)
        self.tags: Dict[Arrow, str] = {a: t for a, t in (tags or {}).items() if a in present}

    def _check_arrow(self, src: str, coeff: StrandsDiagram, tgt: str) -> None:
        if src not in self._by_name or tgt not in self._by_name:
            raise IdempotentMismatch(f"arrow {src!r} -> {tgt!r} names an unknown generator")
        try:
            self.algebra.validate(coeff)
        except InvalidDiagram as exc:
            raise IdempotentMismatch(f"arrow {src!r} -> {tgt!r}: {exc}") from exc
        if self.algebra.left_idem(coeff) != self._by_name[src].idempotent:
            raise IdempotentMismatch(
                f"arrow {src!r} -{coeff}-> {tgt!r}: left idempotent differs from source")
        if self.algebra.right_idem(coeff) != self._by_name[tgt].idempotent:
            raise IdempotentMismatch(
                f"arrow {src!r} -{coeff}-> {tgt!r}: right idempotent differs from target")

    def generator(self, name: str) -> Generator:
        return self._by_name[name]

    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def outgoing(self, name: str) -> List[Tuple[StrandsDiagram, str]]:
        return list(self._out[name])

    def incoming(self, name: str) -> List[Tuple[StrandsDiagram, str]]:
        return list(self._in[name])

    def tag(self, arrow: Arrow) -> Optional[str]:
        return self.tags.get(arrow)

    def signature(self) -> Tuple:
        gens = tuple(sorted((g.name, tuple(sorted(g.idempotent))) for g in self.generators))
        return (self.algebra.key(), gens, tuple(self.arrows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TypeDStructure):
            return NotImplemented
        return self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __len__(self) -> int:
        return len(self.generators)

    def describe_arrow(self, arrow: Arrow) -> str:
        src, coeff, tgt = arrow
        return f"{src} —{diagram_label(coeff, self.algebra.pmc)}→ {tgt}"

    def __repr__(self) -> str:
        return f"TypeDStructure({self.algebra!r}, {len(self.generators)} generators, {len(self.arrows)} arrows)"


@dataclass
class RelationReport:
    """Outcome of a structure-relation check; failures map a generator to residual terms."""

    passed: bool
    failures: Dict[str, List[Tuple[str, str]]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


def check_structure_relation(D: TypeDStructure) -> RelationReport:
    """
    Check that sum a1*a2 (x) z over two-step paths plus d(a) (x) y over arrows vanishes.

    Returns:
        RelationReport, falsy when some generator has a nonzero residual.
    """
    algebra = D.algebra
    failures: Dict[str, List[Tuple[str, str]]] = {}
    for x in D.names():
        acc: set = set()
        for a1, y in D.outgoing(x):
            for b in algebra.differential(a1):
                acc ^= {(b, y)}
            for a2, z in D.outgoing(y):
                for c in algebra.multiply(a1, a2):
                    acc ^= {(c, z)}
        if acc:
            failures[x] = sorted((str(c), z) for c, z in acc)
    if failures:
        logger.info("structure relation fails at %d generators of %r", len(failures), D)
    return RelationReport(not failures, failures)


def _arrow_graph(D: TypeDStructure) -> sp.csr_matrix:
    index = {name: i for i, name in enumerate(D.names())}
    n = len(index)
    pairs = {(index[s], index[t]) for s, _, t in D.arrows}
    if not pairs:
        return sp.csr_matrix((n, n), dtype=np.int8)
    rows, cols = zip(*sorted(pairs))
    return sp.csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))


def _kahn(graph: sp.csr_matrix) -> Tuple[List[int], List[int]]:
    """Topological order of an acyclic graph with the longest path ending at each node."""
    n = graph.shape[0]
    indeg = np.asarray(graph.sum(axis=0)).ravel().astype(int)
    order = [i for i in range(n) if indeg[i] == 0]
    longest = [0] * n
    graph = graph.tocsr()
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for v in graph.indices[graph.indptr[u]:graph.indptr[u + 1]]:
            longest[v] = max(longest[v], longest[u] + 1)
            indeg[v] -= 1
            if indeg[v] == 0:
                order.append(int(v))
    return order, longest


def _has_cycle(D: TypeDStructure, graph: sp.csr_matrix) -> bool:
    if any(s == t for s, _, t in D.arrows):
        return True
    n_comp, _ = connected_components(graph, directed=True, connection="strong")
    return n_comp < len(D)


def bounded_depth(D: TypeDStructure, cap: Optional[int] = None) -> Optional[int]:
    """
    Smallest k with delta^k = 0, or None when the arrow graph has a cycle.

    Raises:
        CapExceeded: if k exceeds the cap
    """
    cap = config.max_bound_cap() if cap is None else cap
    if len(D) == 0:
        return 1
    graph = _arrow_graph(D)
    if _has_cycle(D, graph):
        return None
    _, longest = _kahn(graph)
    depth = max(longest) + 1
    if depth > cap:
        raise CapExceeded(f"delta^k does not vanish for k <= {cap} (needs {depth}); likely unbounded")
    return depth


def topological_order(D: TypeDStructure) -> Optional[List[str]]:
    """Generator names with every arrow pointing forward, or None on a cycle."""
    if len(D) == 0:
        return []
    graph = _arrow_graph(D)
    if _has_cycle(D, graph):
        return None
    names = D.names()
    order, _ = _kahn(graph)
    return [names[i] for i in order]


def is_bounded(D: TypeDStructure, cap: Optional[int] = None) -> bool:
    """True iff iterated delta vanishes within the cap; cycles mean unbounded."""
    return bounded_depth(D, cap) is not None


def _is_idempotent_arrow(coeff: StrandsDiagram) -> bool:
    return coeff.is_idempotent


def _times(algebra: StrandsAlgebra, left: set, right: set) -> set:
    acc: set = set()
    for a in left:
        for b in right:
            for c in algebra.multiply(a, b):
                acc ^= {c}
    return acc


def _unit_inverse(algebra: StrandsAlgebra, coeffs: set) -> set:
    """
    Inverse of iota + r, where iota is the idempotent in `coeffs`.

    r has no idempotent terms, so it is nilpotent and the inverse is the
    finite sum iota + r + r^2 + ...

    Raises:
        CapExceeded: if the powers of r do not vanish within the bound cap
    """
    unit = {c for c in coeffs if c.is_idempotent}
    rest = coeffs - unit
    inverse = set(unit)
    power = set(rest)
    for _ in range(config.max_bound_cap()):
        if not power:
            return inverse
        inverse ^= power
        power = _times(algebra, power, rest)
    raise CapExceeded(f"coefficient {sorted(map(str, coeffs))} is not a unit within the bound cap")


def simplify(D: TypeDStructure) -> TypeDStructure:
    """
    Cancel arrows whose coefficient is a unit until none remain.

    The pivot is the first arrow x -> y (in (source, target) order) whose
    coefficient c = iota + r contains an idempotent; every w -a-> y and
    x -b-> z then contributes w -(a * c^-1 * b)-> z. For c = iota this is
    the usual zig-zag a*b.
    """
    algebra = D.algebra
    gens = {g.name: g for g in D.generators}
    out: Dict[str, Dict[str, set]] = {name: {} for name in gens}
    for src, coeff, tgt in D.arrows:
        out[src].setdefault(tgt, set()).add(coeff)

    cancelled = 0
    while True:
        pivot = None
        for src in sorted(out):
            for tgt in sorted(out[src]):
                if src != tgt and any(_is_idempotent_arrow(c) for c in out[src][tgt]):
                    pivot = (src, tgt)
                    break
            if pivot:
                break
        if pivot is None:
            break
        x, y = pivot
        inverse = _unit_inverse(algebra, out[x][y])
        into_y = [(w, _times(algebra, set(targets[y]), inverse)) for w, targets in out.items()
                  if y in targets and w not in (x, y)]
        from_x = [(z, set(c)) for z, c in out[x].items() if z not in (x, y)]
        for w, a_wy in into_y:
            for z, b_xz in from_x:
                bucket = out[w].setdefault(z, set())
                bucket ^= _times(algebra, a_wy, b_xz)
                if not bucket:
                    del out[w][z]
        del out[x]
        del out[y]
        for targets in out.values():
            targets.pop(x, None)
            targets.pop(y, None)
        cancelled += 1
        logger.debug("cancelled %s -> %s", x, y)

    kept = [g for g in D.generators if g.name in out]
    arrows = [(s, c, t) for s, targets in out.items() for t, cs in targets.items() for c in cs]
    result = TypeDStructure(algebra, kept, arrows)
    logger.info("simplify: %d cancellations, %d -> %d generators", cancelled, len(D), len(result))
    return result


def provincial_complex(D: TypeDStructure) -> ChainComplex:
    """Chain complex of the idempotent-coefficient arrows."""
    arrows = [(s, t) for s, c, t in D.arrows if c.is_idempotent]
    return ChainComplex.from_arrows(D.names(), arrows)


@dataclass
class ClosureReport:
    """Arrows leaving a generator subset."""

    closed: bool
    leaving: List[Arrow] = field(default_factory=list)


def span_substructure(D: TypeDStructure, predicate: Callable[[Generator], bool],
                      strict: bool = True) -> Tuple[TypeDStructure, ClosureReport]:
    """
    Restrict to generators satisfying `predicate`.

    Raises:
        NotClosed: if strict and some arrow leaves the subset
    """
    chosen = {g.name for g in D.generators if predicate(g)}
    leaving = [a for a in D.arrows if a[0] in chosen and a[2] not in chosen]
    report = ClosureReport(not leaving, leaving)
    if leaving and strict:
        raise NotClosed(f"{len(leaving)} arrows leave the chosen subset", leaving)
    sub = TypeDStructure(
        D.algebra, [g for g in D.generators if g.name in chosen],
        [a for a in D.arrows if a[0] in chosen and a[2] in chosen],
        {a: t for a, t in D.tags.items() if a[0] in chosen and a[2] in chosen},
    )
    return sub, report


def quotient_structure(D: TypeDStructure, predicate: Callable[[Generator], bool]) -> TypeDStructure:
    """Quotient by the generators satisfying `predicate` (arrows into them are dropped)."""
    dropped = {g.name for g in D.generators if predicate(g)}
    return TypeDStructure(
        D.algebra, [g for g in D.generators if g.name not in dropped],
        [a for a in D.arrows if a[0] not in dropped and a[2] not in dropped],
        {a: t for a, t in D.tags.items() if a[0] not in dropped and a[2] not in dropped},
    )


def idempotent_components(D: TypeDStructure) -> List[List[str]]:
    """Direct-summand decomposition: weakly connected components of the arrow graph."""
    names = D.names()
    if not names:
        return []
    n_comp, labels = connected_components(_arrow_graph(D), directed=True, connection="weak")
    groups: Dict[int, List[str]] = {}
    for name, label in zip(names, labels):
        groups.setdefault(int(label), []).append(name)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def relabel(D: TypeDStructure, mapping: Dict[str, str]) -> TypeDStructure:
    """Rename generators; names missing from `mapping` are kept."""
    rename = lambda name: mapping.get(name, name)
    gens = [Generator(rename(g.name), g.idempotent, g.data) for g in D.generators]
    arrows = [(rename(s), c, rename(t)) for s, c, t in D.arrows]
    tags = {(rename(s), c, rename(t)): tag for (s, c, t), tag in D.tags.items()}
    return TypeDStructure(D.algebra, gens, arrows, tags)


def direct_sum_d(*structures: TypeDStructure) -> TypeDStructure:
    """Direct sum; generator names become '<summand index>:<name>'."""
    if not structures:
        raise ValueError("direct_sum_d needs at least one structure")
    algebra = structures[0].algebra
    gens: List[Generator] = []
    arrows: List[Arrow] = []
    for i, D in enumerate(structures):
        if D.algebra != algebra:
            raise AlgebraMismatch(f"summand {i} is over {D.algebra!r}, expected {algebra!r}")
        prefix = f"{i}:"
        gens.extend(Generator(prefix + g.name, g.idempotent, g.data) for g in D.generators)
        arrows.extend((prefix + s, c, prefix + t) for s, c, t in D.arrows)
    return TypeDStructure(algebra, gens, arrows)


def change_basis(D: TypeDStructure, x: str, y: str) -> TypeDStructure:
    """
    Conjugate by the isomorphism x -> x + y.

    x and y must share an idempotent. The new structure is isomorphic to D,
    so the structure relation and provincial homology are unchanged.
    """
    if x == y:
        raise ValueError("change_basis needs two distinct generators")
    if D.generator(x).idempotent != D.generator(y).idempotent:
        raise IdempotentMismatch(f"{x!r} and {y!r} have different idempotents")
    arrows: List[Arrow] = []
    for g in D.names():
        terms = D.outgoing(g) + (D.outgoing(y) if g == x else [])
        for coeff, h in terms:
            arrows.append((g, coeff, h))
            if h == x:
                arrows.append((g, coeff, y))
    return TypeDStructure(D.algebra, D.generators, arrows)
