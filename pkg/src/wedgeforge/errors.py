"""Exception hierarchy shared by all wedgeforge modules.

Every error raised on bad input derives from :class:`WedgeforgeError` so the
CLI can map them uniformly to exit code 2.  :class:`TheoremViolation` is
different in kind: it signals that an internal consistency check which is
mathematically guaranteed to hold has failed, i.e. an implementation defect.
"""

__all__ = [
    "WedgeforgeError",
    "EmptyVertexSet",
    "DuplicateVertexLabel",
    "UnknownVertex",
    "FaceNotInComplex",
    "VertexLabelCollision",
    "NotPure",
    "LengthMismatch",
    "NonPositiveEntry",
    "ParseError",
    "NotSquare",
    "IndexOutOfRange",
    "ShapeMismatch",
    "InvalidBase",
    "NotComparable",
    "ChainComplexInconsistent",
    "AmbientTooLarge",
    "DegreeTooLarge",
    "TheoremViolation",
]


class WedgeforgeError(Exception):
    """Base class for all input and precondition errors."""


class EmptyVertexSet(WedgeforgeError):
    """A declared vertex appears in no facet, or no facets were given."""


class DuplicateVertexLabel(WedgeforgeError):
    """The same vertex label was declared twice."""


class UnknownVertex(WedgeforgeError):
    """A vertex label does not belong to the complex."""


class FaceNotInComplex(WedgeforgeError):
    """The given vertex set is not a face of the complex."""


class VertexLabelCollision(WedgeforgeError):
    """Join operands share a vertex label."""


class NotPure(WedgeforgeError):
    """The operation requires all facets to have the same dimension."""


class LengthMismatch(WedgeforgeError):
    """A weight vector or pair family has the wrong length for the complex."""


class NonPositiveEntry(WedgeforgeError):
    """Weight vectors must consist of positive integers."""


class ParseError(WedgeforgeError):
    """Malformed textual input."""


class NotSquare(WedgeforgeError):
    """Determinants require a square matrix."""


class IndexOutOfRange(WedgeforgeError):
    """A row/column/group index is outside the valid range."""


class ShapeMismatch(WedgeforgeError):
    """Matrix dimensions do not match the complex or each other."""


class InvalidBase(WedgeforgeError):
    """The base pair (complex, matrix) fails the characteristic condition."""


class NotComparable(WedgeforgeError):
    """The two weight vectors are not strictly ordered componentwise."""


class ChainComplexInconsistent(WedgeforgeError):
    """Boundary-of-boundary is nonzero; the chain complex is defective."""


class AmbientTooLarge(WedgeforgeError):
    """Cubical ambient dimension exceeds the configured guard."""


class DegreeTooLarge(WedgeforgeError):
    """Requested grading degree exceeds the configured guard."""


class TheoremViolation(WedgeforgeError):
    """A consistency check that must hold by theory failed.

    Reaching this exception means the library itself is buggy, not the input.
    """
