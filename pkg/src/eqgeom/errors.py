"""Exception hierarchy shared by all modules."""


class GeometryError(Exception):
    """Base class for errors raised by eqgeom."""


class RangeError(GeometryError, ValueError):
    """A coordinate index lies outside ``[1, n]``."""


class DimensionError(GeometryError, ValueError):
    """Operands have incompatible lengths or dimensions."""


class ArgumentError(GeometryError, ValueError):
    """An argument violates the operation's precondition."""


class NoLinesError(GeometryError, ValueError):
    """The requested geometry would contain no lines (``3m > n``)."""


class SizeError(GeometryError, ValueError):
    """The instance exceeds a desk-scale cap."""


class StructureError(GeometryError, ValueError):
    """A code lacks the structure an operation requires (e.g. not equidistant)."""


class InconsistencyError(GeometryError, RuntimeError):
    """An internal consistency check failed. This signals a bug, not bad input."""


class ClassificationError(InconsistencyError):
    """An automorphism admits none of the expected decompositions."""


class WellDefinednessError(InconsistencyError):
    """The closure extension depends on the chosen pair of points."""


class NoPathError(GeometryError, ValueError):
    """Two vertices lie in different components."""
