"""Complex-plane primitives: line intersections, circumcenters, the chordal
metric and absolute cross ratio, circle inversion, reflections, and the unit
disk automorphism.

Points are plain Python complex numbers.  The point at infinity is the
module-level sentinel INFINITY (a tagged object, never a float inf), accepted
only by the functions whose docstrings say so.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    CoincidentPoints,
    CollinearPoints,
    DegenerateTuple,
    OutsideDisk,
    ParallelLines,
    PoleInput,
)

__all__ = [
    "INFINITY",
    "Circle",
    "sgn",
    "lis",
    "circumcenter",
    "chordal",
    "cross_ratio",
    "invert_in_circle",
    "reflect_in_line",
    "disk_automorphism",
    "vertex_angle",
    "chord_second_intersection",
]

PARALLEL_TOL = 1e-14  # scaled by max input magnitude squared


class _Infinity:
    """Sentinel for the point at infinity on the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

Point = complex  # finite point
PointOrInf = object  # complex or INFINITY


def sgn(x: float) -> float:
    """Sign with the convention sgn(0) = +1.

    The construction formulas multiply this sign by a term that vanishes in
    the symmetric case, so the choice only matters for continuity.
    """
    return 1.0 if x >= 0 else -1.0


@dataclass(frozen=True)
class Circle:
    """A Euclidean circle with positive radius."""

    center: complex
    radius: float

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError(f"circle radius must be positive, got {self.radius}")


def _as_complex(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite point {z}")
    return z


def lis(a: complex, b: complex, c: complex, d: complex) -> complex:
    """Intersection of the lines through a,b and through c,d.

    Raises CoincidentPoints when either defining pair coincides and
    ParallelLines when the denominator is below 1e-14 * scale**2 (the
    denominator is quadratic in the coordinates, so the tolerance is too).
    """
    a, b, c, d = map(_as_complex, (a, b, c, d))
    if a == b or c == d:
        raise CoincidentPoints("lis needs two distinct points per line")
    scale = max(abs(a), abs(b), abs(c), abs(d), 1.0)
    den = (a.conjugate() - b.conjugate()) * (c - d) - (a - b) * (c.conjugate() - d.conjugate())
    if abs(den) <= PARALLEL_TOL * scale * scale:
        raise ParallelLines(f"lines through {a},{b} and {c},{d} are parallel")
    num = (a.conjugate() * b - a * b.conjugate()) * (c - d) - (a - b) * (
        c.conjugate() * d - c * d.conjugate()
    )
    return num / den


def circumcenter(a: complex, b: complex, c: complex) -> complex:
    """Center of the circle through three non-collinear points."""
    a, b, c = map(_as_complex, (a, b, c))
    if a == b or b == c or a == c:
        raise CoincidentPoints("circumcenter needs three distinct points")
    scale = max(abs(a), abs(b), abs(c), 1.0)
    den = (
        a * (c.conjugate() - b.conjugate())
        + b * (a.conjugate() - c.conjugate())
        + c * (b.conjugate() - a.conjugate())
    )
    if abs(den) <= PARALLEL_TOL * scale * scale:
        raise CollinearPoints(f"{a}, {b}, {c} are collinear")
    num = abs(a) ** 2 * (b - c) + abs(b) ** 2 * (c - a) + abs(c) ** 2 * (a - b)
    return num / den


def chordal(a, b) -> float:
    """Chordal distance on the Riemann sphere; accepts INFINITY for either
    argument.  Always in [0, 1] with this normalization."""
    a_inf = a is INFINITY
    b_inf = b is INFINITY
    if a_inf and b_inf:
        return 0.0
    if a_inf or b_inf:
        z = _as_complex(b if a_inf else a)
        return 1.0 / math.hypot(1.0, abs(z))
    a = _as_complex(a)
    b = _as_complex(b)
    return abs(a - b) / (math.hypot(1.0, abs(a)) * math.hypot(1.0, abs(b)))


def cross_ratio(a, b, c, d) -> float:
    """Absolute cross ratio |a,b,c,d| = q(a,c) q(b,d) / (q(a,b) q(c,d)).

    All four points must be pairwise distinct; any one may be INFINITY.
    The value is a positive real and is Moebius invariant.
    """
    pts = [a, b, c, d]
    for i in range(4):
        for j in range(i + 1, 4):
            same = (pts[i] is INFINITY and pts[j] is INFINITY) or (
                pts[i] is not INFINITY and pts[j] is not INFINITY and complex(pts[i]) == complex(pts[j])
            )
            if same:
                raise DegenerateTuple("cross_ratio needs pairwise distinct points")
    return (chordal(a, c) * chordal(b, d)) / (chordal(a, b) * chordal(c, d))


def invert_in_circle(z, circle: Circle):
    """Inversion in the given circle: z -> q + r^2 / conj(z - q).

    The center maps to INFINITY and INFINITY maps to the center; points on
    the circle are fixed.
    """
    q, r = circle.center, circle.radius
    if z is INFINITY:
        return q
    z = _as_complex(z)
    if z == q:
        return INFINITY
    return q + (r * r) / (z.conjugate() - q.conjugate())


def reflect_in_line(z: complex, a: complex, b: complex) -> complex:
    """Reflection of z across the line through a and b."""
    z, a, b = map(_as_complex, (z, a, b))
    if a == b:
        raise CoincidentPoints("reflect_in_line needs a != b")
    dc = a.conjugate() - b.conjugate()
    return (a - b) / dc * z.conjugate() - (a * b.conjugate() - a.conjugate() * b) / dc


def disk_automorphism(a: complex, z: complex) -> complex:
    """The unit disk automorphism T_a(z) = (z - a) / (1 - conj(a) z).

    Requires |a| < 1.  Defined on the closed disk; the pole 1/conj(a) lies
    outside it.
    """
    a = _as_complex(a)
    z = _as_complex(z)
    if abs(a) >= 1.0:
        raise OutsideDisk(f"|a| = {abs(a)} must be < 1")
    den = 1.0 - a.conjugate() * z
    if abs(den) <= 1e-14 * max(1.0, abs(z)):
        raise PoleInput(f"z = {z} is at the pole of T_a")
    return (z - a) / den


def vertex_angle(a: complex, x: complex, b: complex) -> float:
    """Undirected angle at vertex x between the rays to a and b, in [0, pi]."""
    a, x, b = map(_as_complex, (a, x, b))
    if a == x or b == x:
        raise CoincidentPoints("vertex_angle needs a, b distinct from the vertex")
    return abs(cmath.phase((a - x) / (b - x)))


def chord_second_intersection(z: complex, k: complex) -> complex:
    """Second intersection with the unit circle of the line through z and k,
    where z lies on the unit circle.  Returns z itself for a tangent line."""
    z = _as_complex(z)
    k = _as_complex(k)
    if z == k:
        raise CoincidentPoints("chord needs two distinct points")
    w = k - z
    t = -2.0 * (z.conjugate() * w).real / (abs(w) ** 2)
    return z + t * w
