"""Exception hierarchy for the reflect3 package."""


class Reflect3Error(Exception):
    """Base class for all package errors."""


class FieldError(Reflect3Error):
    """Arithmetic attempted across incompatible fields or on bad data."""


class DivisionByZero(FieldError):
    """Division by the zero element of a field."""


class DegenerateParams(Reflect3Error):
    """Parameter values outside the admissible range (zero, or cos value out of (0,4))."""


class DegenerateBasis(Reflect3Error):
    """A change of basis was requested but the system is degenerate (gamma = 4)."""


class NotAReflection(Reflect3Error):
    """A matrix expected to be a reflection is not one."""


class ExtractionFailed(Reflect3Error):
    """Parameter extraction from a triple of reflections broke down."""


class ResourceCap(Reflect3Error):
    """A search exceeded its configured radius or element cap."""


class BadWord(Reflect3Error):
    """A generator word contains an index outside 1..3."""


class BadInput(Reflect3Error):
    """Malformed configuration or report data."""


class PreconditionFailed(Reflect3Error):
    """A check was invoked on a system that does not satisfy its hypothesis
    (wrong parity, nonzero reducibility indicator, ...)."""
