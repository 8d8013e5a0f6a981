"""Exception types shared across the package.

Every error raised on bad input derives from :class:`QsimplexError`, so CLI
and library callers can catch one base class.
"""


class QsimplexError(ValueError):
    """Base class for all input/usage errors raised by this package."""


class MixedDimensionError(QsimplexError):
    """Facets of different sizes were supplied for a pure complex."""


class VertexOutOfRangeError(QsimplexError):
    """A vertex index falls outside the declared vertex universe."""


class DimensionOutOfRangeError(QsimplexError):
    """A face dimension is not available in this complex."""


class FaceNotInComplexError(QsimplexError):
    """The given face is not a face of the complex."""


class VertexInsideFaceError(QsimplexError):
    """An outside-vertex argument actually belongs to the face."""


class TooLargeError(QsimplexError):
    """Input exceeds a configured brute-force cap."""


class TooFewVerticesError(QsimplexError):
    """Not enough vertices for the requested construction."""


class CycleTooShortError(QsimplexError):
    """A cycle needs at least three distinct vertices."""


class UniverseMismatchError(QsimplexError):
    """The vertex universe does not have the required size."""


class WrongVertexCountError(QsimplexError):
    """The operation only applies to complexes on a specific vertex count."""
