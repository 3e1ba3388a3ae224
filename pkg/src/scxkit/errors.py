"""Exception hierarchy shared by every scxkit module."""


class ScxError(Exception):
    """Base class for all scxkit errors."""


# finite fields
class NotPrimePower(ScxError, ValueError):
    pass


class FieldMismatch(ScxError, TypeError):
    pass


class DivisionByZero(ScxError, ZeroDivisionError):
    pass


class IndexOutOfRange(ScxError, IndexError):
    pass


# polynomials / sequences
class TooLarge(ScxError, ValueError):
    """An enumeration or check would exceed its configured size guard."""


class NotFound(ScxError, LookupError):
    pass


class NotPrimitive(ScxError, ValueError):
    pass


class ZeroSeed(ScxError, ValueError):
    pass


class NotPeriodic(ScxError, ValueError):
    """The sequence is only eventually periodic (singular feedback)."""


# complexes and the scx file format
class ParseError(ScxError, ValueError):
    pass


class BadHeader(ParseError):
    pass


class FacetSizeMismatch(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class DuplicateFacet(ParseError):
    pass


class MalformedFacet(ParseError):
    """Facet line that is not a strictly increasing list of integers."""


class EmptyComplex(ScxError, ValueError):
    pass


class Disconnected(ScxError, ValueError):
    pass


# constructions
class NoPolynomial(ScxError, LookupError):
    pass


class NotACorridor(ScxError, ValueError):
    pass


class NotAClosedCorridor(ScxError, ValueError):
    pass


class TooSmall(ScxError, ValueError):
    pass


class UnusedVertices(ScxError, ValueError):
    pass


class NoValidGlueChoice(ScxError, ValueError):
    pass


class ConstructionCheckFailed(ScxError, RuntimeError):
    pass
