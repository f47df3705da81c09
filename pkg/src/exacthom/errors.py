"""Exception types shared across the package."""


class ExactHomError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(ExactHomError):
    """Dimension, degree, or shape mismatch in a linear-algebra operation."""


class InvalidComplexError(ExactHomError):
    """A differential whose square is not zero."""


class CellComplexError(ExactHomError):
    """Malformed cell data: dangling ids, bad incidence dimensions, d*d != 0."""


class RepresentationError(ExactHomError):
    """Invalid representation, quiver mismatch, or unsupported quiver."""


class UnsupportedDifferentialError(ExactHomError):
    """The hom-complex differential is not defined for this quiver."""


class ClassificationError(ExactHomError):
    """Invariants incompatible with a closed orientable surface."""


class FormatError(ExactHomError):
    """Malformed input file or unknown builtin name."""
