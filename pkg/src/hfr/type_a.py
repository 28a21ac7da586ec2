"""
Type A Modules, Bimodules and Pairing

A-infinity right modules, DA and DD bimodules over strands algebras, their
structure-relation checks, the box tensor products and the morphism complex
between type D structures. Everything is over F2 and strictly unital:
idempotent inputs are never stored.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from . import config
from .algebra import StrandsAlgebra, StrandsDiagram
from .chain_complex import ChainComplex
from .errors import (
    AlgebraMismatch,
    CapExceeded,
    IdempotentMismatch,
    InvalidDiagram,
    RelationFailure,
    UnboundedPair,
)
from .type_d import Generator, TypeDStructure, bounded_depth

logger = logging.getLogger(__name__)

Inputs = Tuple[StrandsDiagram, ...]
Action = Tuple[str, Inputs, str]
DAEntry = Tuple[str, Inputs, StrandsDiagram, str]
DDArrow = Tuple[str, StrandsDiagram, StrandsDiagram, str]


@dataclass(frozen=True)
class BiGenerator:
    """Bimodule generator with left and right idempotents."""

    name: str
    left: FrozenSet[int]
    right: FrozenSet[int]
    data: object = field(default=None, compare=False, hash=False)


def _toggle(items: Iterable) -> List:
    acc: set = set()
    for item in items:
        acc ^= {item}
    return sorted(acc, key=repr)


def _check_chain(algebra: StrandsAlgebra, start: FrozenSet[int], inputs: Inputs,
                 end: FrozenSet[int], where: str) -> None:
    """Idempotents along a right-module input chain."""
    current = start
    for a in inputs:
        try:
            algebra.validate(a)
        except InvalidDiagram as exc:
            raise IdempotentMismatch(f"{where}: {exc}") from exc
        if a.is_idempotent:
            raise IdempotentMismatch(f"{where}: idempotent inputs are implicit (strict unitality)")
        if algebra.left_idem(a) != current:
            raise IdempotentMismatch(f"{where}: input {a} does not start at the current idempotent")
        current = algebra.right_idem(a)
    if current != end:
        raise IdempotentMismatch(f"{where}: input chain does not end at the target idempotent")


class _Tables:
    """Per-algebra lookup tables used to enumerate relation candidates."""

    def __init__(self, algebra: StrandsAlgebra):
        basis = [a for a in algebra.generators() if not a.is_idempotent]
        self.d_preimage: Dict[StrandsDiagram, List[StrandsDiagram]] = {}
        self.factors: Dict[StrandsDiagram, List[Tuple[StrandsDiagram, StrandsDiagram]]] = {}
        by_left: Dict[FrozenSet[int], List[StrandsDiagram]] = {}
        for a in basis:
            by_left.setdefault(algebra.left_idem(a), []).append(a)
            for c in algebra.differential(a):
                self.d_preimage.setdefault(c, []).append(a)
        for a in basis:
            for b in by_left.get(algebra.right_idem(a), ()):
                for c in algebra.multiply(a, b):
                    self.factors.setdefault(c, []).append((a, b))


_TABLES: Dict[Tuple, _Tables] = {}


def _tables(algebra: StrandsAlgebra) -> _Tables:
    if algebra.key() not in _TABLES:
        _TABLES[algebra.key()] = _Tables(algebra)
    return _TABLES[algebra.key()]


def _candidates(entries: Iterable[Tuple[str, Inputs, str]], sources: Iterable[str],
                max_inputs: int, tables: _Tables) -> Set[Tuple[str, Inputs]]:
    """
    Inputs (x, a1..an) where a structure relation can have a nonzero term:
    concatenations of two entries, and entries with one input replaced by a
    d-preimage or split into two factors.
    """
    entries = list(entries)
    by_src: Dict[str, List[Tuple[Inputs, str]]] = {}
    for src, seq, tgt in entries:
        by_src.setdefault(src, []).append((seq, tgt))
    found: Set[Tuple[str, Inputs]] = {(x, ()) for x in sources}
    for src, seq, tgt in entries:
        if len(seq) <= max_inputs:
            found.add((src, seq))
        for seq2, _ in by_src.get(tgt, ()):
            if len(seq) + len(seq2) <= max_inputs:
                found.add((src, seq + seq2))
        for j, c in enumerate(seq):
            if len(seq) <= max_inputs:
                for a in tables.d_preimage.get(c, ()):
                    found.add((src, seq[:j] + (a,) + seq[j + 1:]))
            if len(seq) + 1 <= max_inputs:
                for s1, s2 in tables.factors.get(c, ()):
                    found.add((src, seq[:j] + (s1, s2) + seq[j + 1:]))
    return found


@dataclass
class ActionReport:
    """Outcome of an A-infinity / DA / DD relation check."""

    passed: bool
    checked: int = 0
    max_inputs: int = 0
    witness: Optional[Tuple] = None

    def __bool__(self) -> bool:
        return self.passed


class TypeAModule:
    """
    A strictly unital right A-infinity module with a finite action table.

    `complete_to` is None when the table is exact, otherwise the input length
    up to which the table is known to be complete.
    """

    def __init__(self, algebra: StrandsAlgebra, generators: Sequence[Generator],
                 actions: Iterable[Action] = (), complete_to: Optional[int] = None):
        self.algebra = algebra
        self.generators: List[Generator] = list(generators)
        self._by_name = {g.name: g for g in self.generators}
        if len(self._by_name) != len(self.generators):
            raise IdempotentMismatch("duplicate generator names in type A module")
        self.actions: List[Action] = _toggle(actions)
        self.complete_to = complete_to
        self._table: Dict[Tuple[str, Inputs], List[str]] = {}
        for src, seq, tgt in self.actions:
            if src not in self._by_name or tgt not in self._by_name:
                raise IdempotentMismatch(f"action {src!r} -> {tgt!r} names an unknown generator")
            _check_chain(algebra, self._by_name[src].idempotent, seq,
                         self._by_name[tgt].idempotent, f"action {src!r} -> {tgt!r}")
            self._table.setdefault((src, seq), []).append(tgt)

    @property
    def max_inputs(self) -> int:
        return max((len(seq) for _, seq, _ in self.actions), default=0)

    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def generator(self, name: str) -> Generator:
        return self._by_name[name]

    def act(self, x: str, inputs: Inputs) -> List[str]:
        """m_{n+1}(x, a1, ..., an) as a list of targets (mod 2)."""
        if any(a.is_idempotent for a in inputs):
            if len(inputs) == 1 and self.algebra.left_idem(inputs[0]) == self._by_name[x].idempotent:
                return [x]
            return []
        return list(self._table.get((x, tuple(inputs)), ()))

    def signature(self) -> Tuple:
        gens = tuple(sorted((g.name, tuple(sorted(g.idempotent))) for g in self.generators))
        return (self.algebra.key(), gens, tuple(self.actions), self.complete_to)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TypeAModule):
            return NotImplemented
        return self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"TypeAModule({self.algebra!r}, {len(self.generators)} generators, {len(self.actions)} actions)"


def close_actions(algebra: StrandsAlgebra, generating: Iterable[Action],
                  depth_limit: Optional[int] = None,
                  expect_truncation: bool = False) -> Tuple[List[Action], Optional[int]]:
    """
    Close a generating set of operations under composition.

    Operations x -A-> y and y -B-> z compose when last(A)*first(B) != 0,
    giving A[:-1] + (product,) + B[1:]. Each composable path contributes one
    action. Returns the actions and the completeness bound (None when the
    closure terminates). With `expect_truncation` a non-terminating closure is
    logged at debug level instead of as a warning.
    """
    limit = config.action_depth() if depth_limit is None else depth_limit
    generating = list(generating)
    by_src: Dict[str, List[Tuple[Inputs, str]]] = {}
    for src, seq, tgt in generating:
        by_src.setdefault(src, []).append((tuple(seq), tgt))

    found: List[Action] = []
    truncated = False
    stack = [(src, tuple(seq), tgt) for src, seq, tgt in generating]
    while stack:
        src, seq, tgt = stack.pop()
        found.append((src, seq, tgt))
        for seq2, tgt2 in by_src.get(tgt, ()):
            for prod in algebra.multiply(seq[-1], seq2[0]):
                merged = seq[:-1] + (prod,) + seq2[1:]
                if len(merged) > limit:
                    truncated = True
                    continue
                stack.append((src, merged, tgt2))
    if truncated:
        log = logger.debug if expect_truncation else logger.warning
        log("type A closure did not terminate; complete up to %d inputs", limit)
    return found, (limit if truncated else None)


def check_ainfty(M: TypeAModule, max_inputs: int, strict: bool = True) -> ActionReport:
    """
    Verify the A-infinity relations with total input length <= max_inputs.

    Raises:
        RelationFailure: with the first failing (generator, inputs) as witness,
            when strict
    """
    if M.complete_to is not None and max_inputs > M.complete_to:
        logger.warning("clamping check to %d inputs (table completeness)", M.complete_to)
        max_inputs = M.complete_to
    algebra = M.algebra
    cands = sorted(_candidates(M.actions, M.names(), max_inputs, _tables(algebra)), key=repr)
    for x, seq in cands:
        acc: set = set()
        n = len(seq)
        for i in range(n + 1):
            for y in M.act(x, seq[:i]):
                for z in M.act(y, seq[i:]):
                    acc ^= {z}
        for j in range(n):
            for c in algebra.differential(seq[j]):
                for z in M.act(x, seq[:j] + (c,) + seq[j + 1:]):
                    acc ^= {z}
        for j in range(n - 1):
            for c in algebra.multiply(seq[j], seq[j + 1]):
                for z in M.act(x, seq[:j] + (c,) + seq[j + 2:]):
                    acc ^= {z}
        if acc:
            witness = (x, tuple(str(a) for a in seq), sorted(acc))
            if strict:
                raise RelationFailure(f"A-infinity relation fails at {witness}", witness)
            return ActionReport(False, len(cands), max_inputs, witness)
    return ActionReport(True, len(cands), max_inputs)


def direct_sum(*modules: TypeAModule) -> TypeAModule:
    """Direct sum; generator names become '<summand index>:<name>'."""
    if not modules:
        raise ValueError("direct_sum needs at least one module")
    algebra = modules[0].algebra
    gens: List[Generator] = []
    actions: List[Action] = []
    bounds = []
    for i, M in enumerate(modules):
        if M.algebra != algebra:
            raise AlgebraMismatch(f"summand {i} is over {M.algebra!r}, expected {algebra!r}")
        prefix = f"{i}:"
        gens.extend(Generator(prefix + g.name, g.idempotent, g.data) for g in M.generators)
        actions.extend((prefix + s, seq, prefix + t) for s, seq, t in M.actions)
        if M.complete_to is not None:
            bounds.append(M.complete_to)
    return TypeAModule(algebra, gens, actions, min(bounds) if bounds else None)


def _chain_bound(D_depth: Optional[int], complete_to: Optional[int], max_inputs: int) -> int:
    """Longest delta chain that must be followed in a box tensor product."""
    if D_depth is not None:
        needed = D_depth - 1
        if complete_to is not None and needed > complete_to:
            raise UnboundedPair(
                f"type D side needs chains of length {needed}; module is complete only to {complete_to}")
        return needed
    if complete_to is None:
        return max_inputs
    raise UnboundedPair("type D side is unbounded and the module side has no finite action table")


def _depth_or_none(D: TypeDStructure) -> Optional[int]:
    try:
        return bounded_depth(D)
    except CapExceeded:
        logger.info("boundedness undecided within the cap; treating %r as unbounded", D)
        return None


def _delta_chains(D: TypeDStructure, y: str, max_len: int):
    """Yield (coefficients, end) for every delta chain from y with at most max_len arrows."""
    stack: List[Tuple[Inputs, str]] = [((), y)]
    while stack:
        coeffs, end = stack.pop()
        yield coeffs, end
        if len(coeffs) < max_len:
            for a, z in D.outgoing(end):
                stack.append((coeffs + (a,), z))


def box_AD(M: TypeAModule, D: TypeDStructure) -> ChainComplex:
    """
    Box tensor product of a type A module with a type D structure.

    Generators x(x)y with equal idempotents; d(x(x)y) sums m(x, a1..an)(x)yn
    over delta chains y -a1-> ... -an-> yn.

    Raises:
        AlgebraMismatch, UnboundedPair
    """
    if M.algebra != D.algebra:
        raise AlgebraMismatch(f"module over {M.algebra!r}, type D structure over {D.algebra!r}")
    bound = _chain_bound(_depth_or_none(D), M.complete_to, M.max_inputs)
    basis: List[Tuple[str, str]] = []
    for x in M.generators:
        for y in D.generators:
            if x.idempotent == y.idempotent:
                basis.append((x.name, y.name))
    present = set(basis)
    arrows = []
    for x, y in basis:
        for coeffs, end in _delta_chains(D, y, bound):
            for z in M.act(x, coeffs):
                if (z, end) in present:
                    arrows.append(((x, y), (z, end)))
    labels = [f"{x}⊗{y}" for x, y in basis]
    complex_ = ChainComplex.from_arrows(labels, [(f"{s[0]}⊗{s[1]}", f"{t[0]}⊗{t[1]}") for s, t in arrows])
    logger.info("box_AD: %d generators", len(complex_))
    return complex_


# DA bimodules

class TypeDABimodule:
    """
    A type DA bimodule: delta^1_{n+1}(x, a1..an) = sum of b (x) y.

    Left idempotents live over `algebra_out`, right ones over `algebra_in`.
    """

    def __init__(self, algebra_out: StrandsAlgebra, algebra_in: StrandsAlgebra,
                 generators: Sequence[BiGenerator], entries: Iterable[DAEntry] = (),
                 complete_to: Optional[int] = None):
        self.algebra_out = algebra_out
        self.algebra_in = algebra_in
        self.generators: List[BiGenerator] = list(generators)
        self._by_name = {g.name: g for g in self.generators}
        if len(self._by_name) != len(self.generators):
            raise IdempotentMismatch("duplicate generator names in DA bimodule")
        self.entries: List[DAEntry] = _toggle(entries)
        self.complete_to = complete_to
        self._table: Dict[Tuple[str, Inputs], List[Tuple[StrandsDiagram, str]]] = {}
        for src, seq, out, tgt in self.entries:
            if src not in self._by_name or tgt not in self._by_name:
                raise IdempotentMismatch(f"entry {src!r} -> {tgt!r} names an unknown generator")
            gs, gt = self._by_name[src], self._by_name[tgt]
            _check_chain(algebra_in, gs.right, seq, gt.right, f"entry {src!r} -> {tgt!r}")
            try:
                algebra_out.validate(out)
            except InvalidDiagram as exc:
                raise IdempotentMismatch(f"entry {src!r} -> {tgt!r}: {exc}") from exc
            if algebra_out.left_idem(out) != gs.left or algebra_out.right_idem(out) != gt.left:
                raise IdempotentMismatch(f"entry {src!r} -> {tgt!r}: output idempotents disagree")
            self._table.setdefault((src, seq), []).append((out, tgt))

    @property
    def max_inputs(self) -> int:
        return max((len(seq) for _, seq, _, _ in self.entries), default=0)

    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def generator(self, name: str) -> BiGenerator:
        return self._by_name[name]

    def act(self, x: str, inputs: Inputs) -> List[Tuple[StrandsDiagram, str]]:
        if any(a.is_idempotent for a in inputs):
            g = self._by_name[x]
            if len(inputs) == 1 and self.algebra_in.left_idem(inputs[0]) == g.right:
                return [(self.algebra_out.idempotent(g.left), x)]
            return []
        return list(self._table.get((x, tuple(inputs)), ()))

    def signature(self) -> Tuple:
        gens = tuple(sorted((g.name, tuple(sorted(g.left)), tuple(sorted(g.right))) for g in self.generators))
        return (self.algebra_out.key(), self.algebra_in.key(), gens, tuple(self.entries), self.complete_to)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TypeDABimodule):
            return NotImplemented
        return self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        return f"TypeDABimodule({len(self.generators)} generators, {len(self.entries)} entries)"


def identity_da(algebra: StrandsAlgebra) -> TypeDABimodule:
    """Identity DA bimodule: one generator per idempotent, delta_2(i, a) = a (x) j."""
    gens = {}
    for idem in algebra.all_idempotents():
        name = "id" + "".join(str(i) for i in sorted(idem))
        gens[idem] = BiGenerator(name, idem, idem)
    entries = []
    for a in algebra.generators():
        if a.is_idempotent:
            continue
        left, right = algebra.left_idem(a), algebra.right_idem(a)
        entries.append((gens[left].name, (a,), a, gens[right].name))
    return TypeDABimodule(algebra, algebra, list(gens.values()), entries)


def check_da_relation(B: TypeDABimodule, max_inputs: int, strict: bool = True) -> ActionReport:
    """
    Verify the DA structure relations up to max_inputs inputs.

    Raises:
        RelationFailure: when strict
    """
    if B.complete_to is not None and max_inputs > B.complete_to:
        max_inputs = B.complete_to
    out_alg, in_alg = B.algebra_out, B.algebra_in
    entries = [(s, seq, t) for s, seq, _, t in B.entries]
    cands = sorted(_candidates(entries, B.names(), max_inputs, _tables(in_alg)), key=repr)
    for x, seq in cands:
        acc: set = set()
        n = len(seq)
        for i in range(n + 1):
            for b1, y in B.act(x, seq[:i]):
                for b2, z in B.act(y, seq[i:]):
                    for c in out_alg.multiply(b1, b2):
                        acc ^= {(c, z)}
        for b, z in B.act(x, seq):
            for c in out_alg.differential(b):
                acc ^= {(c, z)}
        for j in range(n):
            for c in in_alg.differential(seq[j]):
                for b, z in B.act(x, seq[:j] + (c,) + seq[j + 1:]):
                    acc ^= {(b, z)}
        for j in range(n - 1):
            for c in in_alg.multiply(seq[j], seq[j + 1]):
                for b, z in B.act(x, seq[:j] + (c,) + seq[j + 2:]):
                    acc ^= {(b, z)}
        if acc:
            witness = (x, tuple(str(a) for a in seq), sorted((str(b), z) for b, z in acc))
            if strict:
                raise RelationFailure(f"DA relation fails at {witness}", witness)
            return ActionReport(False, len(cands), max_inputs, witness)
    return ActionReport(True, len(cands), max_inputs)


def box_DA_D(B: TypeDABimodule, D: TypeDStructure) -> TypeDStructure:
    """
    Box tensor product of a DA bimodule with a type D structure.

    Raises:
        AlgebraMismatch, UnboundedPair
    """
    if B.algebra_in != D.algebra:
        raise AlgebraMismatch(f"bimodule input algebra {B.algebra_in!r} differs from {D.algebra!r}")
    bound = _chain_bound(_depth_or_none(D), B.complete_to, B.max_inputs)
    pairs = [(x, y) for x in B.generators for y in D.generators if x.right == y.idempotent]
    name = lambda x, y: f"{x}⊗{y}"
    present = {(x.name, y.name) for x, y in pairs}
    gens = [Generator(name(x.name, y.name), x.left, (x.name, y.name)) for x, y in pairs]
    arrows = []
    for x, y in pairs:
        for coeffs, end in _delta_chains(D, y.name, bound):
            for b, z in B.act(x.name, coeffs):
                if (z, end) in present:
                    arrows.append((name(x.name, y.name), b, name(z, end)))
    result = TypeDStructure(B.algebra_out, gens, arrows)
    logger.info("box_DA_D: %r", result)
    return result


# DD bimodules

class TypeDDBimodule:
    """A type DD bimodule: arrows carry a left and a right algebra coefficient."""

    def __init__(self, left_algebra: StrandsAlgebra, right_algebra: StrandsAlgebra,
                 generators: Sequence[BiGenerator], arrows: Iterable[DDArrow] = ()):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.generators: List[BiGenerator] = list(generators)
        self._by_name = {g.name: g for g in self.generators}
        if len(self._by_name) != len(self.generators):
            raise IdempotentMismatch("duplicate generator names in DD bimodule")
        self.arrows: List[DDArrow] = _toggle(arrows)
        self._out: Dict[str, List[Tuple[StrandsDiagram, StrandsDiagram, str]]] = {
            g.name: [] for g in self.generators}
        for src, a, b, tgt in self.arrows:
            if src not in self._by_name or tgt not in self._by_name:
                raise IdempotentMismatch(f"arrow {src!r} -> {tgt!r} names an unknown generator")
            gs, gt = self._by_name[src], self._by_name[tgt]
            for alg, coeff, si, ti in ((left_algebra, a, gs.left, gt.left),
                                       (right_algebra, b, gs.right, gt.right)):
                try:
                    alg.validate(coeff)
                except InvalidDiagram as exc:
                    raise IdempotentMismatch(f"arrow {src!r} -> {tgt!r}: {exc}") from exc
                if alg.left_idem(coeff) != si or alg.right_idem(coeff) != ti:
                    raise IdempotentMismatch(f"arrow {src!r} -> {tgt!r}: coefficient {coeff} "
                                             "does not match generator idempotents")
            self._out[src].append((a, b, tgt))

    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def generator(self, name: str) -> BiGenerator:
        return self._by_name[name]

    def outgoing(self, name: str) -> List[Tuple[StrandsDiagram, StrandsDiagram, str]]:
        return list(self._out[name])

    def signature(self) -> Tuple:
        gens = tuple(sorted((g.name, tuple(sorted(g.left)), tuple(sorted(g.right))) for g in self.generators))
        return (self.left_algebra.key(), self.right_algebra.key(), gens, tuple(self.arrows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TypeDDBimodule):
            return NotImplemented
        return self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        return f"TypeDDBimodule({len(self.generators)} generators, {len(self.arrows)} arrows)"


def check_dd_relation(DD: TypeDDBimodule) -> ActionReport:
    """Two-step compositions plus d on either side must cancel at every generator."""
    la, ra = DD.left_algebra, DD.right_algebra
    for x in DD.names():
        acc: set = set()
        for a1, b1, y in DD.outgoing(x):
            for c in la.differential(a1):
                acc ^= {(c, b1, y)}
            for c in ra.differential(b1):
                acc ^= {(a1, c, y)}
            for a2, b2, z in DD.outgoing(y):
                for ca in la.multiply(a1, a2):
                    for cb in ra.multiply(b1, b2):
                        acc ^= {(ca, cb, z)}
        if acc:
            witness = (x, sorted((str(a), str(b), z) for a, b, z in acc))
            return ActionReport(False, len(DD.generators), 2, witness)
    return ActionReport(True, len(DD.generators), 2)


def box_A_DD(M: TypeAModule, DD: TypeDDBimodule) -> TypeDStructure:
    """
    Box tensor product of a type A module with the right side of a DD bimodule.

    d(x(x)y) = sum (a1...an) (x) m(x, b1..bn) (x) yn over DD chains.

    Raises:
        AlgebraMismatch, UnboundedPair
    """
    if M.algebra != DD.right_algebra:
        raise AlgebraMismatch(f"module over {M.algebra!r}, DD right side over {DD.right_algebra!r}")
    if M.complete_to is not None:
        raise UnboundedPair("box_A_DD needs a module with an exact action table")
    bound = M.max_inputs
    left = DD.left_algebra
    pairs = [(x, y) for x in M.generators for y in DD.generators if x.idempotent == y.right]
    present = {(x.name, y.name) for x, y in pairs}
    name = lambda x, y: f"{x}⊗{y}"
    gens = [Generator(name(x.name, y.name), y.left, (x.data, y.name)) for x, y in pairs]
    arrows = []
    for x, y in pairs:
        stack: List[Tuple[Inputs, Inputs, str]] = [((), (), y.name)]
        while stack:
            outs, ins, end = stack.pop()
            targets = M.act(x.name, ins)
            if targets:
                product = left.element((outs[0] if outs else left.idempotent(y.left),))
                for c in outs[1:]:
                    product = left.product(product, left.element((c,)))
                for z in targets:
                    if (z, end) in present:
                        for term in product:
                            arrows.append((name(x.name, y.name), term, name(z, end)))
            if len(ins) < bound:
                for a, b, w in DD.outgoing(end):
                    stack.append((outs + (a,), ins + (b,), w))
    result = TypeDStructure(left, gens, arrows)
    logger.info("box_A_DD: %r", result)
    return result


# Morphism complex

def mor_to_d(D1: TypeDStructure, D2: TypeDStructure) -> ChainComplex:
    """
    Morphism complex Mor(D1, D2).

    Basis triples (x1, a, x2) with left_idem(a) = idem(x1) and
    right_idem(a) = idem(x2); d(f) = f followed by delta_2, plus delta_1
    followed by f, plus d(a).

    Raises:
        AlgebraMismatch
    """
    if D1.algebra != D2.algebra:
        raise AlgebraMismatch(f"{D1.algebra!r} differs from {D2.algebra!r}")
    algebra = D1.algebra
    by_idems: Dict[Tuple[FrozenSet[int], FrozenSet[int]], List[StrandsDiagram]] = {}
    for a in algebra.generators():
        by_idems.setdefault((algebra.left_idem(a), algebra.right_idem(a)), []).append(a)
    basis = []
    for x1 in D1.generators:
        for x2 in D2.generators:
            for a in by_idems.get((x1.idempotent, x2.idempotent), ()):
                basis.append((x1.name, a, x2.name))
    arrows = []
    for f in basis:
        x1, a, x2 = f
        for b, z in D2.outgoing(x2):
            for c in algebra.multiply(a, b):
                arrows.append((f, (x1, c, z)))
        for b, w in D1.incoming(x1):
            for c in algebra.multiply(b, a):
                arrows.append((f, (w, c, x2)))
        for c in algebra.differential(a):
            arrows.append((f, (x1, c, x2)))
    complex_ = ChainComplex.from_arrows(basis, arrows)
    logger.info("mor_to_d: %r", complex_)
    return complex_
