"""The boundary visual angle metric on the upper half plane.

For a pair a, b the metric is the supremum over real boundary points x of
the Euclidean angle at x subtended by a and b.  The supremum is attained at
the tangency point d of a circle through a and b tangent to the real axis,
which gives a closed form; this module computes that closed form, the full
catalog of auxiliary construction points around it, and a brute-force
grid-plus-golden-section oracle used to validate the closed form.

Closed forms are evaluated in cancellation-free arrangements:

* the two tangency points d and f are the roots of a quadratic, and the
  root whose numerator suffers subtractive cancellation is recovered from
  the root product instead (both arrangements are exact algebra);
* the tangent circle centers p and q are computed from the tangency point
  and the radius ((x_a - d)^2 + y_a^2) / (2 y_a) rather than by dividing
  by Im(a - b) a second time.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DegeneratePair, OutOfRange, UnitViolation
from .geom import circumcenter, lis, sgn, vertex_angle
from .hyperbolic import (
    VerticalGeodesic,
    geodesic_endpoints,
    half_plane_mobius,
    require_half_plane,
    rho_half_plane,
    similarity_to_unit,
)

__all__ = [
    "Branch",
    "PointCatalog",
    "VisualAngleResult",
    "catalog_general",
    "catalog_unit",
    "catalog_constructed",
    "visual_angle",
    "visual_angle_oracle",
    "visual_angle_bounds",
    "sin_identity_rhs",
    "vhquot_ratio",
]

UNIT_TOL = 1e-9  # how far off the unit circle a "unit" point may sit
# Below this, the unit-pair radical forms lose too many digits to the
# 1/(1+ab) amplification and we route through the general forms instead.
UNIT_FORM_GUARD = 1e-2


class Branch(enum.Enum):
    """Which evaluation case produced a visual angle."""

    ACUTE_FORMULA = "acute-formula"
    OBTUSE_FORMULA = "obtuse-formula"
    VERTICAL_CASE = "vertical-case"
    HORIZONTAL_CASE = "horizontal-case"


@dataclass(frozen=True)
class PointCatalog:
    """Construction points for a pair (a, b).

    Real boundary points are floats, interior points are complex, and a
    field is None when the construction does not exist for the pair
    (vertical pairs have no finite geodesic endpoints; horizontal pairs
    have no second tangent circle; g is only named for unit pairs).
    """

    a_star: Optional[float]
    b_star: Optional[float]
    u1: Optional[float]
    u: Optional[float]
    c: Optional[float]
    d: Optional[float]
    f: Optional[float]
    g: Optional[float]
    m: Optional[complex]
    p: Optional[complex]
    q: Optional[complex]
    s: Optional[complex]
    v: Optional[complex]

    def as_dict(self) -> dict:
        """Defined fields only, keyed by name."""
        full = {
            "a_star": self.a_star,
            "b_star": self.b_star,
            "u1": self.u1,
            "u": self.u,
            "c": self.c,
            "d": self.d,
            "f": self.f,
            "g": self.g,
            "m": self.m,
            "p": self.p,
            "q": self.q,
            "s": self.s,
            "v": self.v,
        }
        return {k: v for k, v in full.items() if v is not None}


@dataclass(frozen=True)
class VisualAngleResult:
    """The angle, the boundary point attaining it, and the branch taken.

    t is th(rho/2) for the pair; T is the closed-form value of sin(angle),
    clamped to 1 when rounding pushes it a few ulp above.
    """

    angle: float
    attaining_point: float
    branch: Branch
    t: float
    T: float


def _require_distinct(a: complex, b: complex) -> tuple[complex, complex]:
    a, b = complex(a), complex(b)
    require_half_plane(a, b)
    if a == b:
        raise DegeneratePair("visual angle constructions need two distinct points")
    return a, b


def _require_unit(*points: complex) -> None:
    for z in points:
        if abs(abs(complex(z)) - 1.0) > UNIT_TOL:
            raise UnitViolation(f"|{z}| = {abs(complex(z))} is not on the unit circle")


def _tangent_points(a: complex, b: complex) -> tuple[float, float]:
    """Both tangency points (d, f) on the real axis of circles through a and
    b tangent to it, for pairs with Im(a) != Im(b).  d attains the larger
    subtended angle.  The cancelling root is recovered from the root product
    R/w = d*f to keep both accurate near horizontal pairs."""
    xa, ya, xb, yb = a.real, a.imag, b.real, b.imag
    w = ya - yb
    t1 = ya * xb - xa * yb
    t2 = sgn(xa - xb) * abs(a - b) * math.sqrt(ya * yb)
    r_prod = xb * xb * ya - xa * xa * yb - ya * yb * w
    if t1 * t2 >= 0:
        d = (t1 + t2) / w
        f = r_prod / (w * d)
    else:
        f = (t1 - t2) / w
        d = r_prod / (w * f)
    return d, f


def _tangent_center(z: complex, d: float) -> complex:
    """Center of the circle through z tangent to the real axis at d."""
    return complex(d, ((z.real - d) ** 2 + z.imag * z.imag) / (2.0 * z.imag))


def _s_v_points(a: complex, b: complex) -> tuple[complex, complex]:
    """The crossing points s (rays through opposite endpoints) and v (rays
    through own endpoints), in closed form."""
    base = 2 * a * b - abs(a) ** 2 - abs(b) ** 2
    rad = abs(a - b) * abs(a - b.conjugate())
    den = 2j * (a + b).imag
    return (base + rad) / den, (base - rad) / den


def catalog_general(a: complex, b: complex) -> PointCatalog:
    """Closed-form construction catalog for an arbitrary pair.

    Vertical pairs (equal real parts) omit a_star, b_star, u1; horizontal
    pairs (equal imaginary parts) omit c, f, q.  g is a unit-pair name and
    is always None here.
    """
    a, b = _require_distinct(a, b)
    xa, ya, xb, yb = a.real, a.imag, b.real, b.imag
    s_pt, v_pt = _s_v_points(a, b)
    m = ((a * b).imag + 1j * abs(a - b.conjugate()) * math.sqrt(ya * yb)) / (a + b).imag
    u = (a * b).imag / (a + b).imag

    if xa == xb:
        root = sgn(ya - yb) * math.sqrt(ya * yb)
        d = xa + root
        f = xa - root
        return PointCatalog(
            a_star=None, b_star=None, u1=None, u=u, c=xa, d=d, f=f, g=None,
            m=m, p=_tangent_center(a, d), q=_tangent_center(a, f), s=s_pt, v=v_pt,
        )

    ends = geodesic_endpoints(a, b)
    u1 = ends.euclid_center

    if ya == yb:
        d = 0.5 * (xa + xb)
        return PointCatalog(
            a_star=ends.a_star, b_star=ends.b_star, u1=u1, u=u, c=None, d=d,
            f=None, g=None, m=m, p=_tangent_center(a, d), q=None, s=s_pt, v=v_pt,
        )

    c = (ya * xb - xa * yb) / (ya - yb)
    d, f = _tangent_points(a, b)
    return PointCatalog(
        a_star=ends.a_star, b_star=ends.b_star, u1=u1, u=u, c=c, d=d, f=f, g=None,
        m=m, p=_tangent_center(a, d), q=_tangent_center(a, f), s=s_pt, v=v_pt,
    )


def catalog_unit(a: complex, b: complex) -> PointCatalog:
    """Catalog for a pair on the unit circle, via the specialized radical
    forms.  Pairs too close to the degenerate configurations ab = -1 or
    a + b = 0 (where the radical forms divide by a vanishing quantity) are
    routed through the general forms, which stay conditioned there."""
    a, b = _require_distinct(a, b)
    _require_unit(a, b)
    ab = a * b
    apb = a + b
    a_star = sgn((a - b).real)

    if abs(1 + ab) <= UNIT_FORM_GUARD or abs(apb) <= UNIT_FORM_GUARD:
        general = catalog_general(a, b)
        return PointCatalog(
            a_star=a_star, b_star=-a_star, u1=0.0, u=general.u, c=general.c,
            d=general.d, f=general.f, g=general.f, m=general.m, p=general.p,
            q=general.q, s=general.s, v=general.v,
        )

    # sgn(Re(a+b)) * principal sqrt(ab ...) is the half-angle root
    # e^{i(arg a + arg b)/2} regardless of which side of the branch cut
    # ab falls on, so the combination below is branch-safe.
    rad = 2.0 * sgn(apb.real) * cmath.sqrt(ab * a.imag * b.imag)
    c = (apb / (1 + ab)).real
    d = ((apb - rad) / (1 + ab)).real
    g = ((apb + rad) / (1 + ab)).real
    u = ((1 + ab) / apb).real
    root = math.sqrt(max(0.0, (1.0 - u) * (1.0 + u)))
    p = 2 * ab / (apb * (1.0 + root))
    q = (2 * ab / (1 + ab)) * g
    m = ((a * b).imag + 1j * abs(a - b.conjugate()) * math.sqrt(a.imag * b.imag)) / apb.imag
    sg = sgn((a - b).real)
    v_pt = (2 * ab - sg * (a - b)) / apb
    s_pt = (2 * ab + sg * (a - b)) / apb
    return PointCatalog(
        a_star=a_star, b_star=-a_star, u1=0.0, u=u, c=c, d=d, f=g, g=g,
        m=m, p=p, q=q, s=s_pt, v=v_pt,
    )


def _rho_equal_point_on_arc(a: complex, b: complex) -> complex:
    """Hyperbolically equidistant point on the geodesic arc, by bisection.
    Used only as the definitional route for m."""
    if a.real == b.real:
        lo, hi = sorted((math.log(a.imag), math.log(b.imag)))
        make = lambda t: complex(a.real, math.exp(t))
    else:
        ends = geodesic_endpoints(a, b)
        cen, rad = ends.euclid_center, ends.euclid_radius
        th_a = math.atan2(a.imag, a.real - cen)
        th_b = math.atan2(b.imag, b.real - cen)
        lo, hi = min(th_a, th_b), max(th_a, th_b)
        make = lambda t: complex(cen + rad * math.cos(t), rad * math.sin(t))
    g_lo = rho_half_plane(a, make(lo + 1e-12 * (hi - lo))) - rho_half_plane(b, make(lo + 1e-12 * (hi - lo)))
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        g = rho_half_plane(a, make(mid)) - rho_half_plane(b, make(mid))
        if (g > 0) == (g_lo > 0):
            lo, g_lo = mid, g
        else:
            hi = mid
    return make(0.5 * (lo + hi))


def catalog_constructed(a: complex, b: complex) -> PointCatalog:
    """The catalog recomputed from geometric definitions (line
    intersections, circumcenters, equal tangent lengths, arc bisection)
    instead of closed forms.  Independent route used to cross-check
    catalog_general; fields whose construction degenerates are None."""
    a, b = _require_distinct(a, b)
    vertical = a.real == b.real
    horizontal = a.imag == b.imag
    bis1 = (a + b) / 2
    bis2 = bis1 + 1j * (b - a)

    a_star = b_star = u1 = u = c = d = f = None
    p = q = s_pt = v_pt = None

    if not vertical:
        cen = circumcenter(a, b, a.conjugate())
        rad = abs(a - cen)
        e_right, e_left = cen.real + rad, cen.real - rad
        if (a - b).real > 0:
            a_star, b_star = e_right, e_left
        else:
            a_star, b_star = e_left, e_right
        u1 = lis(0, 1, bis1, bis2).real
        s_pt = lis(a, complex(b_star, 0.0), b, complex(a_star, 0.0))
        v_pt = lis(a, complex(a_star, 0.0), b, complex(b_star, 0.0))

    if not vertical and not horizontal:
        u = lis(a, b.conjugate(), b, a.conjugate()).real

    if horizontal:
        d = lis(bis1, bis2, 0, 1).real
        p = circumcenter(a, b, complex(d, 0.0))
    else:
        c = lis(a, b, 0, 1).real
        tangent_len = math.sqrt(abs(a - c) * abs(b - c))
        lo_pt, hi_pt = c - tangent_len, c + tangent_len
        ang_lo = vertex_angle(a, complex(lo_pt, 0.0), b)
        ang_hi = vertex_angle(a, complex(hi_pt, 0.0), b)
        if abs(ang_hi - ang_lo) <= 1e-14:
            # symmetric tie: both tangency points subtend the same angle;
            # take the same side as the closed-form convention sgn(0) = +1
            d = c + sgn((a - b).imag) * tangent_len
        elif ang_hi > ang_lo:
            d = hi_pt
        else:
            d = lo_pt
        f = 2 * c - d
        p = circumcenter(a, b, complex(d, 0.0))
        q = circumcenter(a, b, complex(f, 0.0))

    return PointCatalog(
        a_star=a_star, b_star=b_star, u1=u1, u=u, c=c, d=d, f=f, g=None,
        m=_rho_equal_point_on_arc(a, b), p=p, q=q, s=s_pt, v=v_pt,
    )


def visual_angle(a: complex, b: complex) -> VisualAngleResult:
    """Closed-form visual angle of a pair, with the attaining boundary point.

    Vertical pairs use angle = arcsin(th(rho/2)); horizontal pairs take the
    angle at the midpoint of the feet; every other pair is normalized onto
    the unit circle (the angle is similarity invariant) where

        sin(angle) = (1 + sqrt(1-u^2)) t sqrt(1-t^2) / sqrt(1 - u^2 t^2),

    t = th(rho/2), u the real crossing point of the mirror chords, and the
    obtuse branch fires when (1 + sqrt(1-u^2)) t^2 > 1.
    """
    a, b = _require_distinct(a, b)
    t = min(abs(a - b) / abs(a - b.conjugate()), 1.0 - 1e-16)

    if a.real == b.real:
        angle = math.asin(t)
        d = a.real + sgn((a - b).imag) * math.sqrt(a.imag * b.imag)
        return VisualAngleResult(angle, d, Branch.VERTICAL_CASE, t, math.sin(angle))

    if a.imag == b.imag:
        d = 0.5 * (a.real + b.real)
        angle = vertex_angle(a, complex(d, 0.0), b)
        return VisualAngleResult(angle, d, Branch.HORIZONTAL_CASE, t, math.sin(angle))

    na, nb, _, _ = similarity_to_unit(a, b)
    # sqrt(1 - u^2) = sqrt(Im na Im nb) / cos((alpha - beta) / 2), which
    # stays accurate when the pair is nearly vertical and u itself would
    # round into +-1; likewise 1 - u^2 t^2 = (1 - t^2) + (t root)^2.
    sep = 0.25 * abs(na - nb) ** 2
    root = min(1.0, math.sqrt(na.imag * nb.imag / (1.0 - sep)))
    big_t = (1.0 + root) * t * math.sqrt((1.0 - t) * (1.0 + t)) / math.sqrt(
        (1.0 - t) * (1.0 + t) + (t * root) ** 2
    )
    big_t = min(big_t, 1.0)
    d, _ = _tangent_points(a, b)
    if (1.0 + root) * t * t <= 1.0:
        return VisualAngleResult(math.asin(big_t), d, Branch.ACUTE_FORMULA, t, big_t)
    return VisualAngleResult(math.pi - math.asin(big_t), d, Branch.OBTUSE_FORMULA, t, big_t)


def _golden_max(fun: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12) -> float:
    """Golden-section maximum of a unimodal function on [lo, hi].

    The width test is relative to the endpoint magnitude: far from the
    origin the interval bottoms out at one ulp and an absolute test would
    never be met.  The iteration cap is a backstop for the same reason.
    """
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = fun(x1), fun(x2)
    for _ in range(200):
        if hi - lo <= tol * max(1.0, abs(lo), abs(hi)):
            break
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = fun(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = fun(x1)
    return max(f1, f2)


def visual_angle_oracle(a: complex, b: complex, grid: int = 2000) -> float:
    """Brute-force supremum of the boundary angle: a dense grid scan over a
    window generously covering the geodesic footprint, refined by golden
    section around the best grid cell and around the analytic tangency
    candidates.  Validation tool; use visual_angle for real work."""
    a, b = _require_distinct(a, b)
    if grid < 1000:
        raise OutOfRange(f"oracle grid must be >= 1000, got {grid}")

    candidates: list[float] = []
    if a.real == b.real:
        radius = 0.5 * (a.imag + b.imag)
        lo, hi = a.real - 10.0 * radius, a.real + 10.0 * radius
        root = math.sqrt(a.imag * b.imag)
        candidates = [a.real - root, a.real + root]
    else:
        ends = geodesic_endpoints(a, b)
        radius = ends.euclid_radius
        lo = min(ends.a_star, ends.b_star) - 10.0 * radius
        hi = max(ends.a_star, ends.b_star) + 10.0 * radius
        if a.imag == b.imag:
            candidates = [0.5 * (a.real + b.real)]
        else:
            candidates = list(_tangent_points(a, b))

    xs = np.linspace(lo, hi, grid)
    angles = np.abs(np.angle((a - xs) / (b - xs)))
    best_idx = int(np.argmax(angles))
    best = float(angles[best_idx])

    step = (hi - lo) / (grid - 1)
    fun = lambda x: vertex_angle(a, complex(x, 0.0), b)
    windows = [(xs[max(best_idx - 1, 0)], xs[min(best_idx + 1, grid - 1)])]
    windows += [(x - step, x + step) for x in candidates]
    for w_lo, w_hi in windows:
        best = max(best, _golden_max(fun, w_lo, w_hi))
    return best


def visual_angle_bounds(a: complex, b: complex) -> tuple[float, float]:
    """Two-sided bound arctan(sh(rho/2)) <= angle <= 2 arctan(sh(rho/2)).
    The lower bound is attained by vertical pairs, the upper by horizontal
    pairs."""
    a, b = _require_distinct(a, b)
    half = math.sinh(0.5 * rho_half_plane(a, b))
    return math.atan(half), 2.0 * math.atan(half)


def sin_identity_rhs(a: complex, b: complex) -> float:
    """For a unit pair: |a-b|/|ab-1| * (|a+b|/2 + sqrt(Im a Im b)).
    Equals sin of the visual angle."""
    a, b = _require_distinct(a, b)
    _require_unit(a, b)
    return (
        abs(a - b)
        / abs(a * b - 1)
        * (0.5 * abs(a + b) + math.sqrt(a.imag * b.imag))
    )


def vhquot_ratio(tau: float, a: complex, b: complex) -> float:
    """Ratio of the visual angle after and before the Moebius automorphism
    with parameter tau, for a unit pair.  Always in (1/2, 2)."""
    a, b = _require_distinct(a, b)
    _require_unit(a, b)
    before = visual_angle(a, b).angle
    after = visual_angle(half_plane_mobius(tau, a), half_plane_mobius(tau, b)).angle
    return after / before
