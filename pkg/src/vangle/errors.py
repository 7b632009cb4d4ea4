"""Exception types shared across the package.

Everything derives from GeometryError (itself a ValueError) so callers can
catch one base class, or ValueError if they do not care about the detail.
"""


class GeometryError(ValueError):
    """Base class for domain errors raised by this package."""


class CoincidentPoints(GeometryError):
    """Two points that were required to be distinct coincide."""


class ParallelLines(GeometryError):
    """Line intersection requested for (numerically) parallel lines."""


class CollinearPoints(GeometryError):
    """Circumcenter requested for collinear points."""


class DegenerateTuple(GeometryError):
    """A tuple of points required to be pairwise distinct has a repeat."""


class DegeneratePair(GeometryError):
    """An operation on a point pair got a == b."""


class PoleInput(GeometryError):
    """A Moebius map was evaluated at (or too near) its pole."""


class NotInHalfPlane(GeometryError):
    """A point required to lie in the open upper half plane does not."""


class OutsideDisk(GeometryError):
    """A point required to lie in the open unit disk does not."""


class VerticalGeodesicError(GeometryError):
    """Raised where a vertical geodesic (equal real parts) has no finite
    normalization.  Carries the finite boundary foot of the geodesic."""

    def __init__(self, foot: float, message: str | None = None):
        self.foot = foot
        super().__init__(message or f"vertical geodesic with foot {foot}")


class EqualHeights(GeometryError):
    """The affine map through a pair needs Im(a) != Im(b)."""


class UnitViolation(GeometryError):
    """A point required to lie on the unit circle is too far off it."""


class OutOfRange(ValueError):
    """A real parameter is outside its documented domain."""


class UnknownSuite(ValueError):
    """Verification suite name not recognized."""


class UnknownFigure(ValueError):
    """Figure name not recognized."""


class ParseError(ValueError):
    """A CLI literal could not be parsed."""
