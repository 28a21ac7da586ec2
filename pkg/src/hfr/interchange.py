"""
Interchange Format

Canonical JSON documents ("hfr-interchange/1") for circles, algebra
elements, type D structures, type A modules, DA and DD bimodules and chain
complexes. Documents are written with sorted keys and sorted record lists,
so identical structures always produce identical bytes. Loading rebuilds
the structure through its constructor, which re-checks every invariant.
"""

import json
import logging
import os
from typing import Any, Dict, List, Sequence, Union

from .algebra import AlgebraElement, StrandsAlgebra, StrandsDiagram
from .chain_complex import ChainComplex, verify_d_squared
from .errors import (
    HFRError,
    ParseError,
    SinkFailure,
    ValidationError,
)
from .pmc import PointedMatchedCircle, RealPointedMatchedCircle
from .type_a import BiGenerator, TypeAModule, TypeDABimodule, TypeDDBimodule
from .type_d import Generator, TypeDStructure

logger = logging.getLogger(__name__)

FORMAT = "hfr-interchange/1"
EXTENSION = ".hfr.json"

Structure = Union[PointedMatchedCircle, AlgebraElement, TypeDStructure, TypeAModule,
                  TypeDABimodule, TypeDDBimodule, ChainComplex]


# Encoding

def _canonical(records: List[Any]) -> List[Any]:
    return sorted(records, key=lambda r: json.dumps(r, sort_keys=True, ensure_ascii=False))


def _pmc_doc(pmc: PointedMatchedCircle) -> Dict[str, Any]:
    return {
        "n": pmc.n,
        "pairs": [list(p) for p in pmc.pairs],
        "real": isinstance(pmc, RealPointedMatchedCircle),
    }


def _algebra_doc(algebra: StrandsAlgebra) -> Dict[str, Any]:
    return {"pmc": _pmc_doc(algebra.pmc), "multiplicity_one": algebra.multiplicity_one}


def _diagram_doc(d: StrandsDiagram) -> Dict[str, Any]:
    return {"moving": [list(s) for s in d.moving], "horizontal": list(d.horizontal)}


def _gen_doc(g: Generator) -> Dict[str, Any]:
    return {"name": g.name, "idempotent": sorted(g.idempotent)}


def _bigen_doc(g: BiGenerator) -> Dict[str, Any]:
    return {"name": g.name, "left": sorted(g.left), "right": sorted(g.right)}


def to_document(structure: Structure) -> Dict[str, Any]:
    """
    Document form of a structure.

    Raises:
        TypeError: for objects the format does not cover
    """
    doc: Dict[str, Any] = {"format": FORMAT}
    if isinstance(structure, PointedMatchedCircle):
        doc.update(kind="pmc", pmc=_pmc_doc(structure))
    elif isinstance(structure, AlgebraElement):
        doc.update(kind="element", algebra=_algebra_doc(structure.algebra),
                   terms=_canonical([_diagram_doc(t) for t in structure]))
    elif isinstance(structure, TypeDStructure):
        doc.update(
            kind="type_d",
            algebra=_algebra_doc(structure.algebra),
            generators=[_gen_doc(g) for g in structure.generators],
            arrows=_canonical([[s, _diagram_doc(a), t] for s, a, t in structure.arrows]),
            tags=_canonical([[s, _diagram_doc(a), t, tag]
                             for (s, a, t), tag in structure.tags.items()]),
        )
    elif isinstance(structure, TypeAModule):
        doc.update(
            kind="type_a",
            algebra=_algebra_doc(structure.algebra),
            generators=[_gen_doc(g) for g in structure.generators],
            actions=_canonical([[s, [_diagram_doc(a) for a in seq], t]
                                for s, seq, t in structure.actions]),
            complete_to=structure.complete_to,
        )
    elif isinstance(structure, TypeDABimodule):
        doc.update(
            kind="type_da",
            algebra_out=_algebra_doc(structure.algebra_out),
            algebra_in=_algebra_doc(structure.algebra_in),
            generators=[_bigen_doc(g) for g in structure.generators],
            entries=_canonical([[s, [_diagram_doc(a) for a in seq], _diagram_doc(b), t]
                                for s, seq, b, t in structure.entries]),
            complete_to=structure.complete_to,
        )
    elif isinstance(structure, TypeDDBimodule):
        doc.update(
            kind="type_dd",
            left_algebra=_algebra_doc(structure.left_algebra),
            right_algebra=_algebra_doc(structure.right_algebra),
            generators=[_bigen_doc(g) for g in structure.generators],
            arrows=_canonical([[s, _diagram_doc(a), _diagram_doc(b), t]
                               for s, a, b, t in structure.arrows]),
        )
    elif isinstance(structure, ChainComplex):
        # labels become strings
        doc.update(
            kind="complex",
            basis=[str(b) for b in structure.basis],
            arrows=_canonical([[str(s), str(t)] for s, t in structure.arrows()]),
        )
    else:
        raise TypeError(f"cannot serialize {type(structure).__name__}")
    return doc


def _encode(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dumps(structure: Structure) -> str:
    """Canonical text of a structure's document."""
    return _encode(to_document(structure))


def save(structure: Structure, sink) -> int:
    """
    Write a structure to a path or a writable binary/text stream.

    Returns:
        Number of bytes written

    Raises:
        SinkFailure: when the sink cannot be written
    """
    doc = to_document(structure)
    data = _encode(doc).encode("utf-8")
    try:
        if isinstance(sink, (str, os.PathLike)):
            with open(sink, "wb") as f:
                f.write(data)
        elif hasattr(sink, "encoding"):
            sink.write(data.decode("utf-8"))
        else:
            sink.write(data)
    except (OSError, ValueError, TypeError) as exc:
        raise SinkFailure(f"cannot write interchange document: {exc}") from exc
    logger.info("saved %s document (%d bytes)", doc["kind"], len(data))
    return len(data)


# Decoding

def _field(doc: Dict[str, Any], key: str) -> Any:
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    return doc[key]


def _ints(values: Any, what: str) -> List[int]:
    if not isinstance(values, list) or not all(isinstance(v, int) and not isinstance(v, bool)
                                               for v in values):
        raise ParseError(f"{what} must be a list of integers")
    return values


def _read_pmc(doc: Any) -> PointedMatchedCircle:
    if not isinstance(doc, dict):
        raise ParseError("pmc must be an object")
    n = _field(doc, "n")
    pairs = _field(doc, "pairs")
    if not isinstance(n, int) or not isinstance(pairs, list):
        raise ParseError("pmc needs an integer n and a pair list")
    pairs = [_ints(p, "pmc pair") for p in pairs]
    cls = RealPointedMatchedCircle if doc.get("real") else PointedMatchedCircle
    return cls(n, pairs)


def _read_algebra(doc: Any) -> StrandsAlgebra:
    if not isinstance(doc, dict):
        raise ParseError("algebra must be an object")
    return StrandsAlgebra(_read_pmc(_field(doc, "pmc")), bool(doc.get("multiplicity_one", False)))


def _read_diagram(doc: Any) -> StrandsDiagram:
    if not isinstance(doc, dict):
        raise ParseError("diagram must be an object")
    moving = _field(doc, "moving")
    if not isinstance(moving, list):
        raise ParseError("diagram moving strands must be a list")
    strands = [_ints(s, "strand") for s in moving]
    if any(len(s) != 2 for s in strands):
        raise ParseError("strands are [start, end] pairs")
    return StrandsDiagram.build(strands, _ints(_field(doc, "horizontal"), "horizontal points"))


def _read_name(value: Any) -> str:
    if not isinstance(value, str):
        raise ParseError(f"generator names must be strings, got {value!r}")
    return value


def _read_gens(records: Any) -> List[Generator]:
    if not isinstance(records, list):
        raise ParseError("generators must be a list")
    return [Generator(_read_name(_field(r, "name")), frozenset(_ints(_field(r, "idempotent"), "idempotent")))
            for r in records]


def _read_bigens(records: Any) -> List[BiGenerator]:
    if not isinstance(records, list):
        raise ParseError("generators must be a list")
    return [BiGenerator(_read_name(_field(r, "name")),
                        frozenset(_ints(_field(r, "left"), "left idempotent")),
                        frozenset(_ints(_field(r, "right"), "right idempotent")))
            for r in records]


def _records(doc: Dict[str, Any], key: str, width: int) -> List[Sequence[Any]]:
    records = _field(doc, key)
    if not isinstance(records, list) or not all(isinstance(r, list) and len(r) == width for r in records):
        raise ParseError(f"{key} must be a list of {width}-element records")
    return records


def _sequence(values: Any) -> tuple:
    if not isinstance(values, list):
        raise ParseError("input sequences must be lists")
    return tuple(_read_diagram(v) for v in values)


def _complete_to(doc: Dict[str, Any]) -> Any:
    value = doc.get("complete_to")
    if value is not None and not isinstance(value, int):
        raise ParseError("complete_to must be an integer or null")
    return value


def _build(doc: Dict[str, Any]) -> Structure:
    kind = _field(doc, "kind")
    if kind == "pmc":
        return _read_pmc(_field(doc, "pmc"))
    if kind == "element":
        algebra = _read_algebra(_field(doc, "algebra"))
        terms = [_read_diagram(t) for t in _field(doc, "terms")]
        for t in terms:
            algebra.validate(t)
        return algebra.element(terms)
    if kind == "type_d":
        arrows = [(_read_name(s), _read_diagram(a), _read_name(t))
                  for s, a, t in _records(doc, "arrows", 3)]
        tags = {(_read_name(s), _read_diagram(a), _read_name(t)): str(tag)
                for s, a, t, tag in (_records(doc, "tags", 4) if "tags" in doc else [])}
        return TypeDStructure(_read_algebra(_field(doc, "algebra")),
                              _read_gens(_field(doc, "generators")), arrows, tags)
    if kind == "type_a":
        actions = [(_read_name(s), _sequence(seq), _read_name(t))
                   for s, seq, t in _records(doc, "actions", 3)]
        return TypeAModule(_read_algebra(_field(doc, "algebra")),
                           _read_gens(_field(doc, "generators")), actions, _complete_to(doc))
    if kind == "type_da":
        entries = [(_read_name(s), _sequence(seq), _read_diagram(b), _read_name(t))
                   for s, seq, b, t in _records(doc, "entries", 4)]
        return TypeDABimodule(_read_algebra(_field(doc, "algebra_out")),
                              _read_algebra(_field(doc, "algebra_in")),
                              _read_bigens(_field(doc, "generators")), entries, _complete_to(doc))
    if kind == "type_dd":
        arrows = [(_read_name(s), _read_diagram(a), _read_diagram(b), _read_name(t))
                  for s, a, b, t in _records(doc, "arrows", 4)]
        return TypeDDBimodule(_read_algebra(_field(doc, "left_algebra")),
                              _read_algebra(_field(doc, "right_algebra")),
                              _read_bigens(_field(doc, "generators")), arrows)
    if kind == "complex":
        basis = [_read_name(b) for b in _field(doc, "basis")]
        known = set(basis)
        pairs = [(_read_name(s), _read_name(t)) for s, t in _records(doc, "arrows", 2)]
        for s, t in pairs:
            if s not in known or t not in known:
                raise ValidationError("UnknownGenerator", f"arrow {s!r} -> {t!r}")
        try:
            complex_ = ChainComplex.from_arrows(basis, pairs)
        except ValueError as exc:
            raise ValidationError("DuplicateGenerator", str(exc)) from exc
        if not verify_d_squared(complex_):
            raise ValidationError("DSquaredNonzero", "boundary does not square to zero")
        return complex_
    raise ParseError(f"unknown document kind {kind!r}")


def from_document(doc: Any) -> Structure:
    """
    Rebuild and validate a structure from its document form.

    Raises:
        ParseError: malformed document
        ValidationError: an invariant fails; `invariant` names it
    """
    if not isinstance(doc, dict):
        raise ParseError("interchange document must be a JSON object")
    if doc.get("format") != FORMAT:
        raise ParseError(f"unsupported format {doc.get('format')!r}; expected {FORMAT!r}")
    try:
        return _build(doc)
    except (ParseError, ValidationError):
        raise
    except HFRError as exc:
        raise ValidationError(type(exc).__name__, str(exc)) from exc
    except (TypeError, ValueError, KeyError) as exc:
        raise ParseError(f"malformed document: {exc}") from exc


def loads(text: Union[str, bytes]) -> Structure:
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    return from_document(doc)


def load(source) -> Structure:
    """Read a structure from a path or a readable stream."""
    if isinstance(source, (str, os.PathLike)):
        try:
            with open(source, "rb") as f:
                text = f.read()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc}") from exc
    else:
        text = source.read()
    structure = loads(text)
    logger.info("loaded %r", structure)
    return structure
