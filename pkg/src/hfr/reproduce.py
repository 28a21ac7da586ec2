"""
Acceptance Runner

Ten checks that reproduce every worked number the package is built around:
1. Genus-one AZ module
2. Genus-one AZ-bar module
3. Structure relation of the AZ and AZ-bar modules up to genus three
4. Worked genus-two differential
5. Small model and the multiplicity-two reduction
6. Pairing of the type A module with the identity DD bimodule
7. Per-summand satellite contributions
8. Closed forms and strict inequalities over a (det, tau) grid
9. Thick-torus splitting
10. Property suites (simplification, box tensor products, interchange)

Each check returns a CheckResult; `format_report` renders a table.
"""

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import interchange
from .algebra import diagram_label, torus_algebra
from .az_modules import (
    cfar_az,
    cfdd_identity,
    cfdr_az,
    cfdr_azbar,
    display_name,
    mult2_reduction,
    pairing_names,
    small_model,
)
from .chain_complex import homology_dim, verify_d_squared
from .errors import HFRError
from .pmc import parse_real_pmc
from .satellites import (
    FIXTURES,
    ORACLES,
    PATTERNS,
    box_contribution,
    box_typeA,
    fixture,
    hfr_satellite_dim,
    ledger_contribution,
    oracle_hf_surgery_half,
    oracle_hf_surgery_one,
    pattern_module,
    random_bounded_structure,
    staircase_contribution,
    staircase_typeA,
    surgery_ledger_half,
    surgery_ledger_one,
    thick_torus_cfdr,
    valid_knot_data,
)
from .type_a import box_A_DD, box_AD, box_DA_D, identity_da
from .type_d import (
    TypeDStructure,
    check_structure_relation,
    idempotent_components,
    provincial_complex,
    simplify,
)

logger = logging.getLogger(__name__)

RELATION_PMCS = ("split:1", "split:2", "antipodal:2", "split:3", "antipodal:3")
PAIRING_PMCS = ("split:2",)
EXTENDED_PAIRING_PMCS = ("split:2", "split:4")


@dataclass
class CheckResult:
    """Outcome of one acceptance check."""

    number: int
    title: str
    passed: bool
    details: List[str] = field(default_factory=list)
    seconds: float = 0.0


def _expect(details: List[str], label: str, got, want) -> bool:
    ok = got == want
    details.append(f"{label}: {got} (expected {want}){'' if ok else '  <-- MISMATCH'}")
    return ok


def _arrow_text(D: TypeDStructure, arrow) -> str:
    src, coeff, tgt = arrow
    pmc = D.algebra.pmc
    return D.describe_arrow((display_name(src, pmc), coeff, display_name(tgt, pmc)))


def _terms_text(D: TypeDStructure, name: str) -> List[str]:
    pmc = D.algebra.pmc
    return [f"{diagram_label(c, pmc)} ⊗ {display_name(t, pmc)}" for c, t in D.outgoing(name)]


def check_1_genus_one_az() -> CheckResult:
    """cfdr_az(split:1): two generators, one arrow."""
    D = cfdr_az(parse_real_pmc("split:1"))
    details: List[str] = []
    ok = _expect(details, "generators", len(D), 2)
    ok &= _expect(details, "arrows", [_arrow_text(D, a) for a in D.arrows], ["ρ̃₂ —ρ₁→ ρ̃₁₂₃"])
    idems = {display_name(g.name, D.algebra.pmc): sorted(g.idempotent) for g in D.generators}
    ok &= _expect(details, "idempotents", idems, {"ρ̃₂": [0], "ρ̃₁₂₃": [1]})
    return CheckResult(1, "genus-one AZ module", ok, details)


def check_2_genus_one_azbar() -> CheckResult:
    """cfdr_azbar(split:1): delta(rho123*) = rho3 (x) rho2*."""
    D = cfdr_azbar(parse_real_pmc("split:1"))
    details: List[str] = []
    ok = _expect(details, "generators", sorted(display_name(n, D.algebra.pmc) for n in D.names()),
                 ["ρ₁₂₃*", "ρ₂*"])
    ok &= _expect(details, "arrows", [_arrow_text(D, a) for a in D.arrows], ["ρ₁₂₃* —ρ₃→ ρ₂*"])
    idems = {display_name(g.name, D.algebra.pmc): sorted(g.idempotent) for g in D.generators}
    ok &= _expect(details, "idempotents", idems, {"ρ₂*": [1], "ρ₁₂₃*": [0]})
    return CheckResult(2, "genus-one AZ-bar module", ok, details)


def check_3_structure_relation(pmcs: Sequence[str] = RELATION_PMCS) -> CheckResult:
    details: List[str] = []
    ok = True
    for text in pmcs:
        pmc = parse_real_pmc(text)
        for label, build in (("AZ", cfdr_az), ("AZ-bar", cfdr_azbar)):
            D = build(pmc)
            report = check_structure_relation(D)
            details.append(f"{label} {text}: {len(D)} generators, {len(D.arrows)} arrows, "
                           f"relation {'holds' if report else 'FAILS'}")
            ok &= report.passed
    return CheckResult(3, "structure relation of the AZ modules", ok, details)


def check_4_genus_two_differential() -> CheckResult:
    D = cfdr_az(parse_real_pmc("split:2"))
    details: List[str] = []
    source = "{[2,2],[4,4],[5,5],[7,7]}~"
    terms = [(c, t) for c, t in D.outgoing(source)]
    ok = _expect(details, f"terms of delta({source})", len(terms), 8)
    tags = Counter(D.tag((source, c, t)) for c, t in terms)
    ok &= _expect(details, "domain families", dict(sorted(tags.items())),
                  {"(vi)": 2, "(vii)": 3, "(ix)": 3})
    second = [(str(c), t) for c, t in D.outgoing("{[3,6],[4,5]}~")]
    want = [(str(D.algebra.idempotent(D.generator("{[3,6],[4,5]}~").idempotent)), "{[3,5],[4,6]}~")]
    ok &= _expect(details, "delta({[3,6],[4,5]}~)", second, want)
    return CheckResult(4, "worked genus-two differential", ok, details)


def check_5_small_model() -> CheckResult:
    details: List[str] = []
    pmc = parse_real_pmc("split:2")
    model = small_model(pmc)
    ok = _expect(details, "small_model(split:2) generators", len(model), 8)
    reduction = mult2_reduction(cfdr_az(pmc))
    ok &= _expect(details, "simplified quotient equals small model",
                  simplify(reduction.quotient) == model, True)
    ok &= _expect(details, "multiplicity-two part contractible (split:2)", reduction.contractible, True)
    other = mult2_reduction(cfdr_az(parse_real_pmc("antipodal:2")))
    ok &= _expect(details, "multiplicity-two part contractible (antipodal:2)", other.contractible, True)
    return CheckResult(5, "small model", ok, details)


def check_6_cfar_pairing(pmcs: Sequence[str] = PAIRING_PMCS) -> CheckResult:
    details: List[str] = []
    ok = True
    for text in pmcs:
        pmc = parse_real_pmc(text)
        paired = pairing_names(box_A_DD(cfar_az(pmc), cfdd_identity(pmc)), pmc)
        ok &= _expect(details, f"CFAR ⊠ identity DD = small model ({text})",
                      paired == small_model(pmc), True)
    return CheckResult(6, "CFAR pairing", ok, details)


def check_7_contribution_ledger() -> CheckResult:
    details: List[str] = []
    ok = True
    for pattern in PATTERNS:
        for tau in (1, -1, 0):
            ok &= _expect(details, f"{pattern} staircase tau={tau:+d}",
                          staircase_contribution(pattern, tau), ledger_contribution(pattern, tau))
        ok &= _expect(details, f"{pattern} box", box_contribution(pattern), ledger_contribution(pattern))
    return CheckResult(7, "satellite contribution ledger", ok, details)


def check_8_closed_forms(max_det: int = 13, max_tau: int = 3) -> CheckResult:
    details: List[str] = []
    grid = valid_knot_data(max_det, max_tau)
    mismatches: List[Tuple[str, int, int, int, int]] = []
    not_strict: List[Tuple[str, int, int]] = []
    surgery: List[Tuple[int, int]] = []
    for K in grid:
        for pattern in PATTERNS:
            hfr_oracle, hf_oracle = ORACLES[pattern]
            got, want = hfr_satellite_dim(pattern, K), hfr_oracle(K)
            if got != want:
                mismatches.append((pattern, K.det, K.tau, got, want))
            strict = hfr_oracle(K) < hf_oracle(K)
            if strict == ((K.det, K.tau) == (1, 0)):
                not_strict.append((pattern, K.det, K.tau))
        if (surgery_ledger_one(K) != oracle_hf_surgery_one(K)
                or surgery_ledger_half(K) != oracle_hf_surgery_half(K)):
            surgery.append((K.det, K.tau))
    details.append(f"{len(grid)} knots with det <= {max_det}, |tau| <= {max_tau}")
    ok = _expect(details, "pipeline/closed-form mismatches", mismatches, [])
    ok &= _expect(details, "strictness failures (equality only at det=1, tau=0)", not_strict, [])
    ok &= _expect(details, "surgery ledger mismatches", surgery, [])
    return CheckResult(8, "closed-form agreement and strictness", ok, details)


def check_9_thick_torus() -> CheckResult:
    D = thick_torus_cfdr()
    details: List[str] = []
    ok = _expect(details, "components", idempotent_components(D), [["x"], ["y"]])
    ok &= _expect(details, "delta(x)", _terms_text(D, "x"), [])
    ok &= _expect(details, "delta(y)", _terms_text(D, "y"), ["ρ₁₂ ⊗ y"])
    ok &= _expect(details, "relation", check_structure_relation(D).passed, True)
    return CheckResult(9, "thick-torus splitting", ok, details)


def check_10_property_suites(n_random: int = 1000, seed: int = 0) -> CheckResult:
    details: List[str] = []
    rng = np.random.default_rng(seed)
    bad_simplify = 0
    for _ in range(n_random):
        D = random_bounded_structure(rng)
        S = simplify(D)
        if (homology_dim(provincial_complex(S)) != homology_dim(provincial_complex(D))
                or not check_structure_relation(S).passed):
            bad_simplify += 1
    ok = _expect(details, f"simplify failures over {n_random} random structures", bad_simplify, 0)

    modules = [staircase_typeA(t) for t in (-2, -1, 1, 2)] + [box_typeA()]
    bad_box = [i for i, M in enumerate(modules) for p in PATTERNS
               if not verify_d_squared(box_AD(M, pattern_module(p)))]
    ok &= _expect(details, "box_AD outputs with d^2 != 0", bad_box, [])

    identity = identity_da(torus_algebra())
    names = sorted(FIXTURES) + ["staircase:1", "staircase:-2"]
    bad_da = [n for n in names if not check_structure_relation(box_DA_D(identity, fixture(n))).passed]
    ok &= _expect(details, "box_DA_D outputs failing the relation", bad_da, [])

    bad_io = []
    for n in names:
        text = interchange.dumps(fixture(n))
        if interchange.dumps(interchange.loads(text)) != text:
            bad_io.append(n)
    external = interchange.loads(interchange.dumps(identity))
    if interchange.dumps(external) != interchange.dumps(identity):
        bad_io.append("identity DA")
    ok &= _expect(details, "interchange round trips that change bytes", bad_io, [])
    return CheckResult(10, "property suites", ok, details)


CHECKS: Dict[int, Callable[[], CheckResult]] = {
    1: check_1_genus_one_az,
    2: check_2_genus_one_azbar,
    3: check_3_structure_relation,
    4: check_4_genus_two_differential,
    5: check_5_small_model,
    6: check_6_cfar_pairing,
    7: check_7_contribution_ledger,
    8: check_8_closed_forms,
    9: check_9_thick_torus,
    10: check_10_property_suites,
}

TITLES: Dict[int, str] = {
    1: "genus-one AZ module",
    2: "genus-one AZ-bar module",
    3: "structure relation of the AZ modules",
    4: "worked genus-two differential",
    5: "small model",
    6: "CFAR pairing",
    7: "satellite contribution ledger",
    8: "closed-form agreement and strictness",
    9: "thick-torus splitting",
    10: "property suites",
}


def run_checks(selected: Optional[Sequence[int]] = None, extended: bool = False,
               n_random: int = 1000) -> List[CheckResult]:
    """
    Run the selected checks (all by default).

    Library errors inside a check are reported as a failure of that check.
    """
    numbers = sorted(CHECKS) if not selected else sorted(set(selected))
    results = []
    for number in numbers:
        if number not in CHECKS:
            raise KeyError(f"no acceptance check {number}")
        if number == 6 and extended:
            call = lambda: check_6_cfar_pairing(EXTENDED_PAIRING_PMCS)
        elif number == 10:
            call = lambda: check_10_property_suites(n_random)
        else:
            call = CHECKS[number]
        start = time.perf_counter()
        try:
            result = call()
        except HFRError as exc:
            result = CheckResult(number, TITLES[number], False, [f"error: {type(exc).__name__}: {exc}"])
        result.seconds = time.perf_counter() - start
        logger.info("check %d (%s): %s in %.2fs", number, result.title,
                    "pass" if result.passed else "FAIL", result.seconds)
        results.append(result)
    return results


def format_report(results: Sequence[CheckResult]) -> str:
    """Deterministic text report (no timings)."""
    lines = ["=" * 70, "ACCEPTANCE CHECKS", "=" * 70]
    for r in results:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.number:2d}. {r.title}")
        lines.extend(f"       {d}" for d in r.details)
    passed = sum(r.passed for r in results)
    lines += ["=" * 70, f"{passed}/{len(results)} checks passed", "=" * 70]
    return "\n".join(lines) + "\n"


def results_document(results: Sequence[CheckResult]) -> Dict[str, Dict]:
    return {
        f"check_{r.number}": {
            "title": r.title,
            "passed": bool(r.passed),
            "details": list(r.details),
            "seconds": round(r.seconds, 3),
        }
        for r in results
    }
