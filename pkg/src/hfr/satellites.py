"""
Satellites of Alternating Knots

Genus-1 fixtures and the satellite pipeline:
- pattern type D structures for the Whitehead double and the (2,1) cable
- staircase and box summands of the knot complex of an alternating knot,
  as type D structures and as type A modules
- the dimension of the real Floer homology of the branched double cover of
  a satellite, computed by box tensor product
- closed-form values used to cross-check the pipeline

Everything lives over the full torus algebra A(T^2).
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebra import torus_algebra, torus_element
from .chain_complex import homology_dim
from .errors import InvariantViolation
from .type_a import Action, TypeAModule, box_AD, close_actions, direct_sum
from .type_d import Generator, TypeDStructure, change_basis, direct_sum_d, topological_order

logger = logging.getLogger(__name__)

# Generator spec: (name, idempotent index); arrow spec: (source, chord label, target).
GenSpec = Tuple[str, int]
ArrowSpec = Tuple[str, str, str]

# Type D chord labels read as type A input sequences (rho1 and rho3 swap).
TYPE_A_INPUTS: Dict[str, Tuple[str, ...]] = {
    "1": ("3",),
    "2": ("2",),
    "3": ("1",),
    "12": ("3", "2"),
    "23": ("2", "1"),
    "123": ("3", "2", "1"),
}

PATTERNS = ("whitehead", "cable21")


@dataclass(frozen=True)
class AlternatingKnotData:
    """
    The two numbers that determine the knot complex of an alternating knot.

    Args:
        det: Knot determinant (positive, odd)
        tau: Ozsvath-Szabo concordance invariant

    Raises:
        InvariantViolation: det is not odd and positive, det < 2|tau|+1, or
            det - (2|tau|+1) is not a multiple of 4
    """

    det: int
    tau: int

    def __post_init__(self):
        if self.det <= 0 or self.det % 2 == 0:
            raise InvariantViolation(f"det must be a positive odd integer, got {self.det}")
        floor = 2 * abs(self.tau) + 1
        if self.det < floor:
            raise InvariantViolation(f"det={self.det} is below 2|tau|+1={floor}")
        if (self.det - floor) % 4:
            raise InvariantViolation(
                f"det={self.det} and tau={self.tau}: det - (2|tau|+1) is not divisible by 4")

    @property
    def box_count(self) -> int:
        return (self.det - (2 * abs(self.tau) + 1)) // 4

    @property
    def staircase_sign(self) -> int:
        return (self.tau > 0) - (self.tau < 0)

    def doubled(self) -> "AlternatingKnotData":
        """Data of K # rK: determinant squared, tau doubled."""
        return AlternatingKnotData(self.det * self.det, 2 * self.tau)


def valid_knot_data(max_det: int, max_tau: int) -> List[AlternatingKnotData]:
    """Every valid (det, tau) with det <= max_det and |tau| <= max_tau."""
    found = []
    for det in range(1, max_det + 1, 2):
        for tau in range(-max_tau, max_tau + 1):
            floor = 2 * abs(tau) + 1
            if det >= floor and (det - floor) % 4 == 0:
                found.append(AlternatingKnotData(det, tau))
    return found


# Building blocks

def _type_d(gens: Sequence[GenSpec], arrows: Sequence[ArrowSpec]) -> TypeDStructure:
    algebra = torus_algebra()
    generators = [Generator(name, frozenset({idx})) for name, idx in gens]
    return TypeDStructure(algebra, generators,
                          [(src, torus_element(label), tgt) for src, label, tgt in arrows])


def _type_a(gens: Sequence[GenSpec], arrows: Sequence[ArrowSpec],
             expect_truncation: bool = False) -> TypeAModule:
    algebra = torus_algebra()
    generators = [Generator(name, frozenset({idx})) for name, idx in gens]
    generating: List[Action] = [
        (src, tuple(torus_element(c) for c in TYPE_A_INPUTS[label]), tgt)
        for src, label, tgt in arrows
    ]
    actions, complete_to = close_actions(algebra, generating, expect_truncation=expect_truncation)
    module = TypeAModule(algebra, generators, actions, complete_to)
    logger.info("type A module: %d generators, %d actions", len(module), len(module.actions))
    return module


def _staircase_spec(tau: int) -> Tuple[List[GenSpec], List[ArrowSpec]]:
    """
    Generators and arrows of the staircase of length 2|tau|.

    Solid generators s0..s_{2t} sit at iota0. Hollow generators sit at iota1:
    one v_k per vertical step, one h_k per horizontal step, and the chain
    u_1..u_{2t} that closes the staircase up.
    """
    if tau == 0:
        return [("s0", 0)], [("s0", "12", "s0")]
    t = abs(tau)
    gens: List[GenSpec] = [(f"s{i}", 0) for i in range(2 * t + 1)]
    gens += [(f"v{k}", 1) for k in range(t)]
    gens += [(f"h{k}", 1) for k in range(t)]
    gens += [(f"u{j}", 1) for j in range(1, 2 * t + 1)]

    arrows: List[ArrowSpec] = []
    if tau < 0:
        for k in range(t):
            arrows += [
                (f"s{2 * k}", "1", f"v{k}"),
                (f"s{2 * k + 1}", "123", f"v{k}"),
                (f"s{2 * k + 2}", "3", f"h{k}"),
                (f"h{k}", "2", f"s{2 * k + 1}"),
            ]
        arrows.append((f"s{2 * t}", "123", "u1"))
        arrows += [(f"u{j}", "23", f"u{j + 1}") for j in range(1, 2 * t)]
        arrows.append((f"u{2 * t}", "2", "s0"))
    else:
        for k in range(t):
            arrows += [
                (f"s{2 * k + 1}", "3", f"h{k}"),
                (f"h{k}", "2", f"s{2 * k}"),
                (f"s{2 * k + 1}", "1", f"v{k}"),
                (f"s{2 * k + 2}", "123", f"v{k}"),
            ]
        arrows.append((f"s{2 * t}", "3", "u1"))
        arrows += [(f"u{j}", "23", f"u{j + 1}") for j in range(1, 2 * t)]
        arrows.append(("s0", "1", f"u{2 * t}"))
    return gens, arrows


_BOX_GENS: List[GenSpec] = [
    ("b00", 0), ("b20", 0), ("b02", 0), ("b22", 0),
    ("c10", 1), ("c01", 1), ("c21", 1), ("c12", 1),
]
_BOX_ARROWS: List[ArrowSpec] = [
    ("b22", "3", "c12"), ("b20", "3", "c10"),
    ("b22", "1", "c21"), ("b02", "1", "c01"),
    ("c12", "2", "b02"), ("c10", "2", "b00"),
    ("b00", "123", "c01"), ("b20", "123", "c21"),
]


def staircase_typeD(tau: int) -> TypeDStructure:
    """Type D structure of the staircase summand with invariant tau."""
    return _type_d(*_staircase_spec(tau))


def box_typeD() -> TypeDStructure:
    """Type D structure of a 1x1 box summand."""
    return _type_d(_BOX_GENS, _BOX_ARROWS)


def staircase_typeA(tau: int) -> TypeAModule:
    """
    Type A module of the staircase summand.

    For tau = 0 the single generator carries a (rho3, rho2) self-operation
    and the closure does not terminate; the table is then complete up to
    HFR_ACTION_DEPTH inputs.
    """
    return _type_a(*_staircase_spec(tau), expect_truncation=tau == 0)


def box_typeA() -> TypeAModule:
    return _type_a(_BOX_GENS, _BOX_ARROWS)


# Patterns

def thick_torus_cfdr() -> TypeDStructure:
    """Both generators at iota0; y carries the rho12 self-loop."""
    return _type_d([("x", 0), ("y", 0)], [("y", "12", "y")])


def whitehead_cfdr_framed() -> TypeDStructure:
    return _type_d([("r", 1), ("s", 0), ("t", 1)], [("s", "1", "t")])


def whitehead_cfdr_unframed() -> TypeDStructure:
    return _type_d(
        [("p1y", 0), ("p1x1", 1), ("p1x2", 1), ("p2x1", 1), ("p2x2", 1)],
        [("p1y", "3", "p1x1"), ("p1x1", "23", "p2x1"), ("p1y", "1", "p2x2")],
    )


def cable21_cfdr_framed() -> TypeDStructure:
    return _type_d([("x", 1), ("y", 0)], [("x", "2", "y")])


def cable21_cfdr_unframed() -> TypeDStructure:
    return _type_d([("p", 1), ("b", 0), ("a", 0)], [("p", "2", "b"), ("b", "12", "a")])


_FRAMED: Dict[str, Callable[[], TypeDStructure]] = {
    "whitehead": whitehead_cfdr_framed,
    "cable21": cable21_cfdr_framed,
}


def pattern_module(pattern: str) -> TypeDStructure:
    """Framed type D structure for a named pattern."""
    try:
        return _FRAMED[pattern]()
    except KeyError:
        raise InvariantViolation(
            f"unknown pattern {pattern!r}; expected one of {', '.join(PATTERNS)}") from None


FIXTURES: Dict[str, Callable[[], TypeDStructure]] = {
    "thick-torus": thick_torus_cfdr,
    "whitehead-framed": whitehead_cfdr_framed,
    "whitehead-unframed": whitehead_cfdr_unframed,
    "cable21-framed": cable21_cfdr_framed,
    "cable21-unframed": cable21_cfdr_unframed,
    "box": box_typeD,
}


def fixture_names() -> List[str]:
    return sorted(FIXTURES) + ["staircase:<tau>"]


def fixture(name: str) -> TypeDStructure:
    """Look up a genus-1 fixture; "staircase:<tau>" builds a staircase."""
    if name.startswith("staircase:"):
        try:
            tau = int(name.split(":", 1)[1])
        except ValueError:
            raise InvariantViolation(f"bad staircase fixture {name!r}") from None
        return staircase_typeD(tau)
    if name not in FIXTURES:
        raise InvariantViolation(f"unknown fixture {name!r}")
    return FIXTURES[name]()


# Pipeline

def knot_typeA(K: AlternatingKnotData) -> TypeAModule:
    """Staircase plus box_count boxes."""
    summands = [staircase_typeA(K.tau)] + [box_typeA() for _ in range(K.box_count)]
    return direct_sum(*summands)


def hfr_satellite_dim(pattern: str, K: AlternatingKnotData) -> int:
    """
    dim of real Floer homology of the branched double cover of P(K).

    Args:
        pattern: "whitehead" or "cable21"
        K: alternating knot data

    Returns:
        Homology dimension of the knot's type A module boxed with the framed
        pattern module
    """
    complex_ = box_AD(knot_typeA(K), pattern_module(pattern))
    dim = homology_dim(complex_)
    logger.info("%s satellite of (det=%d, tau=%d): %d generators, homology %d",
                pattern, K.det, K.tau, len(complex_), dim)
    return dim


def staircase_contribution(pattern: str, tau: int) -> int:
    return homology_dim(box_AD(staircase_typeA(tau), pattern_module(pattern)))


def box_contribution(pattern: str) -> int:
    return homology_dim(box_AD(box_typeA(), pattern_module(pattern)))


def ledger_contribution(pattern: str, tau: Optional[int] = None) -> int:
    """Closed-form contribution of one staircase (tau given) or one box (tau None)."""
    if pattern not in PATTERNS:
        raise InvariantViolation(f"unknown pattern {pattern!r}")
    if pattern == "whitehead":
        if tau is None:
            return 8
        if tau > 0:
            return 8 * tau - 1
        return 8 * abs(tau) + 1 if tau < 0 else 1
    if tau is None:
        return 4
    if tau > 0:
        return 4 * tau + 1
    return 4 * abs(tau) - 1 if tau < 0 else 1


# Closed forms

def oracle_hf_surgery_one(K: AlternatingKnotData) -> int:
    """dim HF of +1 surgery on an alternating knot."""
    shift = {1: -7, 0: 1, -1: -3}[K.staircase_sign]
    return (K.det + 6 * abs(K.tau) + shift) // 2


def oracle_hf_surgery_half(K: AlternatingKnotData) -> int:
    """dim HF of +1/2 surgery on an alternating knot."""
    shift = {1: -6, 0: 0, -1: -4}[K.staircase_sign]
    return K.det + 6 * abs(K.tau) + shift


def surgery_ledger_one(K: AlternatingKnotData) -> int:
    """+1 surgery summed summand by summand: 2 per box plus the staircase term."""
    t = abs(K.tau)
    stair = {1: 4 * t - 3, 0: 1, -1: 4 * t - 1}[K.staircase_sign]
    return 2 * K.box_count + stair


def surgery_ledger_half(K: AlternatingKnotData) -> int:
    t = abs(K.tau)
    stair = {1: 8 * t - 5, 0: 1, -1: 8 * t - 3}[K.staircase_sign]
    return 4 * K.box_count + stair


def oracle_hfr_whitehead(K: AlternatingKnotData) -> int:
    if K.tau > 0:
        return 2 * K.det + 4 * K.tau - 3
    return 2 * K.det + 4 * abs(K.tau) - 1


def oracle_hf_whitehead(K: AlternatingKnotData) -> int:
    """The branched double cover is +1/2 surgery on K # rK."""
    return oracle_hf_surgery_half(K.doubled())


def oracle_hfr_cable(K: AlternatingKnotData) -> int:
    if K.tau >= 0:
        return K.det + 2 * K.tau
    return K.det + 2 * abs(K.tau) - 2


def oracle_hf_cable(K: AlternatingKnotData) -> int:
    """The branched double cover is +1 surgery on K # rK."""
    return oracle_hf_surgery_one(K.doubled())


ORACLES: Dict[str, Tuple[Callable[[AlternatingKnotData], int], Callable[[AlternatingKnotData], int]]] = {
    "whitehead": (oracle_hfr_whitehead, oracle_hf_whitehead),
    "cable21": (oracle_hfr_cable, oracle_hf_cable),
}


# Randomized bounded structures

def cancelling_pair(idempotent: int) -> TypeDStructure:
    """Two generators joined by an idempotent arrow; contractible."""
    return _type_d([("p", idempotent), ("q", idempotent)], [("p", f"iota{idempotent}", "q")])


def random_bounded_structure(rng: np.random.Generator, max_generators: int = 100,
                             max_changes: int = 10) -> TypeDStructure:
    """
    A random bounded type D structure over the torus algebra.

    A direct sum of bounded fixtures and cancelling pairs, conjugated by a
    few random changes of basis x -> x + y with x before y in a topological
    order (so the arrow graph stays acyclic).
    """
    builders: List[Callable[[], TypeDStructure]] = [
        box_typeD,
        whitehead_cfdr_framed,
        whitehead_cfdr_unframed,
        cable21_cfdr_framed,
        cable21_cfdr_unframed,
        lambda: staircase_typeD(int(rng.choice([-2, -1, 1, 2]))),
        lambda: cancelling_pair(int(rng.integers(0, 2))),
        lambda: cancelling_pair(int(rng.integers(0, 2))),
    ]
    target = int(rng.integers(2, max(2, max_generators) + 1))
    summands: List[TypeDStructure] = []
    size = 0
    for _ in range(4 * target):
        D = builders[int(rng.integers(0, len(builders)))]()
        if size + len(D) <= target:
            summands.append(D)
            size += len(D)
    if not summands:
        summands.append(cancelling_pair(int(rng.integers(0, 2))))
    D = direct_sum_d(*summands)

    position = {name: i for i, name in enumerate(topological_order(D))}
    groups: Dict[frozenset, List[str]] = {}
    for g in D.generators:
        groups.setdefault(g.idempotent, []).append(g.name)
    choices = [names for names in groups.values() if len(names) >= 2]
    for _ in range(int(rng.integers(0, max_changes + 1)) if choices else 0):
        names = choices[int(rng.integers(0, len(choices)))]
        x, y = rng.choice(len(names), size=2, replace=False)
        x, y = sorted((names[int(x)], names[int(y)]), key=position.__getitem__)
        D = change_basis(D, x, y)
    return D
