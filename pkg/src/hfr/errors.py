"""
Exception hierarchy for hfr.

Every error raised by the library derives from HFRError so callers (and the
command-line front end) can catch the whole family at once.
"""

from typing import Any, Optional


class HFRError(Exception):
    """Base class for all hfr errors."""


# Pointed matched circles

class PMCError(HFRError):
    """Invalid pointed matched circle data."""


class BadCount(PMCError):
    """Number of marked points is not a positive multiple of 4."""


class NotFixedPointFree(PMCError):
    """Matching is not a fixed-point-free involution on the marked points."""


class NotConnectedAfterSurgery(PMCError):
    """Surgery along the matched pairs does not yield a single circle."""


class NotSymmetric(PMCError):
    """Matching does not commute with the reflection i -> 4k+1-i."""


class NonorientableQuotient(PMCError):
    """The construction needs a matching that preserves the lower half."""


class NotRealPMC(PMCError):
    """A real pointed matched circle was required."""


# Algebra and structures

class InvalidDiagram(HFRError):
    """Strands diagram violates the central-summand constraints."""


class AlgebraMismatch(HFRError):
    """Operands live over different algebras."""


class IdempotentMismatch(HFRError):
    """An arrow or action is not compatible with generator idempotents."""


class NotClosed(HFRError):
    """Arrows leave a generator subset that was expected to be closed."""

    def __init__(self, message: str, leaving: Optional[list] = None):
        super().__init__(message)
        self.leaving = leaving or []


class CapExceeded(HFRError):
    """Boundedness could not be decided within the iteration cap."""


class DSquaredNonzero(HFRError):
    """A differential does not square to zero."""


class UnboundedPair(HFRError):
    """Neither side of a box tensor product is bounded."""


class RelationFailure(HFRError):
    """A structure relation fails; `witness` holds the offending input."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class InvariantViolation(HFRError):
    """Input data violates a documented invariant."""


# Interchange and front end

class InterchangeError(HFRError):
    """Base class for interchange format errors."""


class ParseError(InterchangeError):
    """Document is not well-formed."""


class ValidationError(InterchangeError):
    """Document is well-formed but violates a structure invariant."""

    def __init__(self, invariant: str, detail: str = ""):
        message = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(message)
        self.invariant = invariant


class SinkFailure(InterchangeError):
    """Output could not be written."""


class UsageError(HFRError):
    """Bad command-line usage."""
