"""Hyperbolic distances in the unit disk and the upper half plane, geodesic
endpoint extraction, hyperbolic midpoints, and the normalizing maps used to
move an arbitrary pair onto the unit circle.

Conventions: the half plane is open (Im > 0); geodesics are semicircles
centered on the real axis, except vertical lines, which are reported as a
separate tagged result because they have only one finite endpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import (
    DegeneratePair,
    EqualHeights,
    NotInHalfPlane,
    OutOfRange,
    OutsideDisk,
    PoleInput,
    VerticalGeodesicError,
)
from .geom import cross_ratio

__all__ = [
    "GeodesicData",
    "VerticalGeodesic",
    "NormalizedPair",
    "rho_disk",
    "rho_half_plane",
    "geodesic_endpoints",
    "rho_via_cross_ratio",
    "hyp_midpoint",
    "half_point",
    "similarity_to_unit",
    "half_plane_mobius",
    "similarity_through_pair",
]

# th(rho/2) is clamped here so artanh never sees 1.0 on near-ideal pairs
_TH_CLAMP = 1.0 - 1e-16


@dataclass(frozen=True)
class GeodesicData:
    """Boundary endpoints and Euclidean center/radius of the semicircle
    through a point pair.  a_star is the endpoint nearer a, so the four
    points occur in the order a_star, a, b, b_star along the arc."""

    a_star: float
    b_star: float
    euclid_center: float
    euclid_radius: float


@dataclass(frozen=True)
class VerticalGeodesic:
    """Tagged result for pairs with equal real parts: the geodesic is the
    vertical line through `foot`, whose second endpoint is infinity."""

    foot: float


class NormalizedPair(NamedTuple):
    """Image of a pair under z -> scale * (z - shift), landing on the unit
    circle, together with the map parameters."""

    a: complex
    b: complex
    shift: float
    scale: float


def require_half_plane(*points: complex) -> None:
    for z in points:
        if not complex(z).imag > 0:
            raise NotInHalfPlane(f"{z} is not in the open upper half plane")


def rho_disk(a: complex, b: complex) -> float:
    """Hyperbolic distance in the unit disk."""
    a, b = complex(a), complex(b)
    if abs(a) >= 1 or abs(b) >= 1:
        raise OutsideDisk("rho_disk needs |a| < 1 and |b| < 1")
    if a == b:
        return 0.0
    den = math.sqrt((1 - abs(a)) * (1 + abs(a)) * (1 - abs(b)) * (1 + abs(b)))
    return 2.0 * math.asinh(abs(a - b) / den)


def rho_half_plane(a: complex, b: complex) -> float:
    """Hyperbolic distance in the upper half plane, via
    th(rho/2) = |a - b| / |a - conj(b)|."""
    a, b = complex(a), complex(b)
    require_half_plane(a, b)
    if a == b:
        return 0.0
    t = min(abs(a - b) / abs(a - b.conjugate()), _TH_CLAMP)
    return 2.0 * math.atanh(t)


def geodesic_endpoints(a: complex, b: complex) -> Union[GeodesicData, VerticalGeodesic]:
    """Endpoints on the real axis of the geodesic through a and b.

    Returns GeodesicData for a semicircular geodesic, ordered so that
    a_star, a, b, b_star follow each other along the arc, or a
    VerticalGeodesic tag when Re(a) = Re(b).
    """
    a, b = complex(a), complex(b)
    require_half_plane(a, b)
    if a == b:
        raise DegeneratePair("geodesic through a single point is not determined")
    if a.real == b.real:
        return VerticalGeodesic(foot=a.real)
    big_a = abs(a) ** 2 - abs(b) ** 2
    big_b = abs(a - b) * abs(a - b.conjugate())
    big_c = 2.0 * (a - b).real
    # The endpoints are (big_a +- big_b) / big_c.  Evaluate the additive
    # combination that cannot cancel, and recover the other root from the
    # product gamma / alpha of the endpoint quadratic; near-vertical pairs
    # would otherwise lose the finite endpoint entirely.
    gamma = abs(a) ** 2 * b.real - abs(b) ** 2 * a.real
    if big_a >= 0.0:
        a_star = (big_a + big_b) / big_c
        b_star = 2.0 * gamma / (big_a + big_b)
    else:
        b_star = (big_a - big_b) / big_c
        a_star = 2.0 * gamma / (big_a - big_b)
    return GeodesicData(
        a_star=a_star,
        b_star=b_star,
        euclid_center=0.5 * (a_star + b_star),
        euclid_radius=0.5 * abs(a_star - b_star),
    )


def rho_via_cross_ratio(a: complex, b: complex) -> float:
    """Distance as log of the absolute cross ratio of (a_star, a, b, b_star).

    Falls back to |log(Im b / Im a)| on vertical geodesics, where the ideal
    endpoints are the foot and infinity.
    """
    a, b = complex(a), complex(b)
    require_half_plane(a, b)
    if a == b:
        return 0.0
    ends = geodesic_endpoints(a, b)
    if isinstance(ends, VerticalGeodesic):
        return abs(math.log(b.imag / a.imag))
    return math.log(cross_ratio(complex(ends.a_star), a, b, complex(ends.b_star)))


def hyp_midpoint(a: complex, b: complex) -> complex:
    """The point on the geodesic through a and b equidistant from both."""
    a, b = complex(a), complex(b)
    require_half_plane(a, b)
    if a == b:
        return a
    num = (a * b).imag + 1j * abs(a - b.conjugate()) * math.sqrt(a.imag * b.imag)
    return num / (a + b).imag


def half_point(r: float) -> float:
    """For r in [0, 1): the point on [0, r] at half the hyperbolic distance
    from 0 to r in the unit disk, r / (1 + sqrt(1 - r^2))."""
    if not (0.0 <= r < 1.0):
        raise OutOfRange(f"half_point needs 0 <= r < 1, got {r}")
    return r / (1.0 + math.sqrt((1.0 - r) * (1.0 + r)))


def similarity_to_unit(a: complex, b: complex) -> NormalizedPair:
    """Map a pair onto the unit circle by z -> scale * (z - shift).

    shift is the midpoint of the geodesic endpoints and scale = 1/|a - shift|,
    so both images land on S(0,1) in the upper half plane.  Vertical pairs
    admit no such similarity and raise VerticalGeodesicError.
    """
    a, b = complex(a), complex(b)
    require_half_plane(a, b)
    ends = geodesic_endpoints(a, b)
    if isinstance(ends, VerticalGeodesic):
        raise VerticalGeodesicError(ends.foot, "no similarity maps a vertical pair to the unit circle")
    shift = ends.euclid_center
    scale = 1.0 / abs(a - shift)
    return NormalizedPair(a=scale * (a - shift), b=scale * (b - shift), shift=shift, scale=scale)


def half_plane_mobius(tau: float, z: complex) -> complex:
    """The Moebius automorphism h(z) = (z - tau) / (1 - tau z) for real tau
    in (-1, 1).  Maps the upper half plane onto itself and the upper unit
    semicircle onto itself."""
    tau = float(tau)
    if not abs(tau) < 1.0:
        raise OutOfRange(f"half_plane_mobius needs |tau| < 1, got {tau}")
    z = complex(z)
    den = 1.0 - tau * z
    if abs(den) <= 1e-14 * max(1.0, abs(z)):
        raise PoleInput(f"z = {z} is at the pole of the map")
    return (z - tau) / den


def similarity_through_pair(a: complex, b: complex, z: complex) -> complex:
    """The orientation-preserving similarity of the half plane fixing the
    boundary line and sending a to b:
    z -> (Im b / Im a) z + Im(a conj(b)) / Im a."""
    a, b, z = complex(a), complex(b), complex(z)
    require_half_plane(a, b)
    if a.imag == b.imag:
        raise EqualHeights("the dilation factor Im(b)/Im(a) must differ from 1")
    return (b.imag / a.imag) * z + (a * b.conjugate()).imag / a.imag
