"""
Command-line front end.

    hfr az --pmc split:1 --side az
    hfr check --structure az:split:2
    hfr simplify --structure whitehead-unframed --dump out.hfr.json
    hfr tensor --module box-typeA --structure whitehead-framed
    hfr mor --source az:split:1 --target thick-torus
    hfr satellite --pattern whitehead --det 3 --tau 1 --compare-oracle
    hfr fixtures --list
    hfr reproduce --all

Structures are named by an interchange file (*.json), a family spec
("az:<pmc>", "azbar:<pmc>", "small:<pmc>", "cfar:<pmc>", "identity-dd:<pmc>",
"staircase-typeA:<tau>", "box-typeA") or a fixture name.
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from . import __version__, interchange
from .algebra import torus_algebra
from .az_modules import cfar_az, cfdd_identity, cfdr_az, cfdr_azbar, display_name, mult2_reduction, small_model
from .chain_complex import ChainComplex, homology_dim, verify_d_squared
from .errors import HFRError, UsageError
from .pmc import parse_pmc, parse_real_pmc
from .reproduce import format_report, run_checks
from .satellites import (
    ORACLES,
    PATTERNS,
    AlternatingKnotData,
    box_typeA,
    fixture,
    fixture_names,
    hfr_satellite_dim,
    staircase_typeA,
)
from .type_a import (
    TypeAModule,
    TypeDABimodule,
    TypeDDBimodule,
    box_AD,
    box_DA_D,
    check_ainfty,
    check_da_relation,
    check_dd_relation,
    identity_da,
    mor_to_d,
)
from .type_d import TypeDStructure, check_structure_relation, is_bounded, simplify

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports usage problems as UsageError."""

    def error(self, message: str):
        raise UsageError(message)


def load_structure(spec: str):
    """Resolve a structure argument (file, family spec or fixture name)."""
    if spec.endswith(".json"):
        return interchange.load(spec)
    family, _, arg = spec.partition(":")
    builders = {
        "az": lambda: cfdr_az(parse_real_pmc(arg)),
        "azbar": lambda: cfdr_azbar(parse_real_pmc(arg)),
        "small": lambda: small_model(parse_real_pmc(arg)),
        "cfar": lambda: cfar_az(parse_real_pmc(arg)),
        "identity-dd": lambda: cfdd_identity(parse_pmc(arg)),
        "identity-da": lambda: identity_da(torus_algebra()),
        "staircase-typeA": lambda: staircase_typeA(int(arg)),
        "box-typeA": box_typeA,
    }
    if family in builders and (arg or family in ("box-typeA", "identity-da")):
        try:
            return builders[family]()
        except ValueError as exc:
            raise UsageError(f"bad structure spec {spec!r}: {exc}") from exc
    return fixture(spec)


def _describe_d(D: TypeDStructure) -> List[str]:
    pmc = D.algebra.pmc
    arrows = [D.describe_arrow((display_name(s, pmc), c, display_name(t, pmc))) for s, c, t in D.arrows]
    head = (f"{len(D)} generator{'s' if len(D) != 1 else ''}, "
            f"{len(arrows)} arrow{'s' if len(arrows) != 1 else ''}")
    if 0 < len(arrows) <= 3:
        return [f"{head}: " + "; ".join(arrows)]
    return [head] + [f"  {a}" for a in arrows[:50]] + (["  ..."] if len(arrows) > 50 else [])


def _dump(structure, path: Optional[str]) -> List[str]:
    if not path:
        return []
    written = interchange.save(structure, path)
    return [f"wrote {written} bytes to {path}"]


def cmd_az(args) -> List[str]:
    pmc = parse_real_pmc(args.pmc)
    if args.side == "az":
        D = cfdr_az(pmc)
    elif args.side == "azbar":
        D = cfdr_azbar(pmc)
    elif args.side == "small":
        D = small_model(pmc)
    else:
        reduction = mult2_reduction(cfdr_az(pmc))
        D = reduction.quotient
        lines = [f"multiplicity-two generators: {len(reduction.substructure)}, "
                 f"closed: {reduction.closure.closed}, contractible: {reduction.contractible}"]
        return lines + _describe_d(D) + _dump(D, args.dump)
    return _describe_d(D) + _dump(D, args.dump)


def cmd_check(args) -> List[str]:
    s = load_structure(args.structure)
    if isinstance(s, TypeDStructure):
        report = check_structure_relation(s)
        lines = [f"{s!r}", f"structure relation: {'holds' if report else 'fails'}"]
        lines += [f"  {g}: {terms}" for g, terms in sorted(report.failures.items())]
        lines.append(f"bounded: {is_bounded(s)}")
        return lines
    if isinstance(s, TypeAModule):
        report = check_ainfty(s, args.max_inputs, strict=False)
    elif isinstance(s, TypeDABimodule):
        report = check_da_relation(s, args.max_inputs, strict=False)
    elif isinstance(s, TypeDDBimodule):
        report = check_dd_relation(s)
    elif isinstance(s, ChainComplex):
        return [f"{s!r}", f"d^2 = 0: {verify_d_squared(s)}"]
    else:
        raise UsageError(f"nothing to check for {type(s).__name__}")
    lines = [f"{s!r}", f"relations up to {report.max_inputs} inputs: {'hold' if report else 'fail'}"]
    if report.witness is not None:
        lines.append(f"  witness: {report.witness}")
    return lines


def cmd_simplify(args) -> List[str]:
    D = load_structure(args.structure)
    if not isinstance(D, TypeDStructure):
        raise UsageError("simplify needs a type D structure")
    S = simplify(D)
    return [f"{len(D)} -> {len(S)} generators"] + _describe_d(S) + _dump(S, args.dump)


def cmd_tensor(args) -> List[str]:
    M = load_structure(args.module)
    D = load_structure(args.structure)
    if not isinstance(D, TypeDStructure):
        raise UsageError("--structure must be a type D structure")
    if isinstance(M, TypeAModule):
        C = box_AD(M, D)
        return [f"{C!r}", f"dim H = {homology_dim(C)}"] + _dump(C, args.dump)
    if isinstance(M, TypeDABimodule):
        R = box_DA_D(M, D)
        return _describe_d(R) + _dump(R, args.dump)
    raise UsageError("--module must be a type A module or a DA bimodule")


def cmd_mor(args) -> List[str]:
    D1, D2 = load_structure(args.source), load_structure(args.target)
    if not (isinstance(D1, TypeDStructure) and isinstance(D2, TypeDStructure)):
        raise UsageError("mor needs two type D structures")
    C = mor_to_d(D1, D2)
    return [f"{C!r}", f"dim H = {homology_dim(C)}"] + _dump(C, args.dump)


def cmd_satellite(args) -> List[str]:
    K = AlternatingKnotData(args.det, args.tau)
    dim = hfr_satellite_dim(args.pattern, K)
    lines = [f"dim HFR = {dim}"]
    if args.compare_oracle:
        hfr_oracle, hf_oracle = ORACLES[args.pattern]
        lines.append(f"closed form = {hfr_oracle(K)} ({'agrees' if hfr_oracle(K) == dim else 'DISAGREES'})")
        lines.append(f"dim HF of the branched double cover = {hf_oracle(K)}")
    return lines


def cmd_fixtures(args) -> List[str]:
    if args.show:
        s = load_structure(args.show)
        return _describe_d(s) if isinstance(s, TypeDStructure) else [repr(s)]
    return fixture_names()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hfr", description="Real bordered Floer computations over F2.")
    parser.add_argument("--version", action="version", version=f"hfr {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="More logging on stderr (-v info, -vv debug).")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("az", help="AZ / AZ-bar modules and the small model.")
    p.add_argument("--pmc", required=True, help='"split:k", "antipodal:k" or "4k;[1-3,...]".')
    p.add_argument("--side", choices=["az", "azbar", "small", "mult2"], default="az")
    p.add_argument("--dump", metavar="FILE")
    p.set_defaults(func=cmd_az)

    p = sub.add_parser("check", help="Check structure relations.")
    p.add_argument("--structure", required=True)
    p.add_argument("--max-inputs", type=int, default=4)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("simplify", help="Cancel idempotent arrows.")
    p.add_argument("--structure", required=True)
    p.add_argument("--dump", metavar="FILE")
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("tensor", help="Box tensor product with a type D structure.")
    p.add_argument("--module", required=True, help="Type A module or DA bimodule.")
    p.add_argument("--structure", required=True)
    p.add_argument("--dump", metavar="FILE")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("mor", help="Homology of the morphism complex.")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--dump", metavar="FILE")
    p.set_defaults(func=cmd_mor)

    p = sub.add_parser("satellite", help="Satellites of alternating knots.")
    p.add_argument("--pattern", choices=PATTERNS, required=True)
    p.add_argument("--det", type=int, required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--compare-oracle", action="store_true")
    p.set_defaults(func=cmd_satellite)

    p = sub.add_parser("fixtures", help="List or show genus-one fixtures.")
    p.add_argument("--list", action="store_true")
    p.add_argument("--show", metavar="NAME")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("reproduce", help="Run the acceptance checks.")
    p.add_argument("--all", action="store_true")
    p.add_argument("--check", type=int, action="append", metavar="N")
    p.add_argument("--extended", action="store_true", help="Also pair at split:4 (slow).")
    p.add_argument("--random", type=int, default=1000, metavar="N",
                   help="Random structures in the property suite.")
    p.set_defaults(func=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: UsageError: {exc}", file=sys.stderr)
        return 2

    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(asctime)s %(name)s %(levelname)s: %(message)s")

    if args.command is None:
        parser.print_help()
        return 2
    try:
        if args.command == "reproduce":
            if not args.all and not args.check:
                raise UsageError("reproduce needs --all or --check N")
            results = run_checks(None if args.all else args.check, args.extended, args.random)
            sys.stdout.write(format_report(results))
            return 0 if all(r.passed for r in results) else 1
        for line in args.func(args):
            print(line)
    except HFRError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: UsageError: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
