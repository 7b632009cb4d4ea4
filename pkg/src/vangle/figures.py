"""Plottable element lists for the standard constructions.

Each figure is exported as a flat list of dict elements with keys
``kind`` ("point", "circle", "segment"), ``label``, and coordinates:
points fill x1/y1, circles fill x1/y1 (center) and x2 (radius),
segments fill all of x1/y1/x2/y2.  The lists carry enough geometry to
re-plot the constructions with any external tool.
"""

from __future__ import annotations

import math

from .errors import UnknownFigure
from .geom import chord_second_intersection
from .visual import PointCatalog, catalog_general, catalog_unit, visual_angle

__all__ = ["FIGURES", "figure_data"]


def _point(label: str, z: complex) -> dict:
    z = complex(z)
    return {"kind": "point", "label": label, "x1": z.real, "y1": z.imag, "x2": None, "y2": None}


def _circle(label: str, center: complex, radius: float) -> dict:
    center = complex(center)
    return {"kind": "circle", "label": label, "x1": center.real, "y1": center.imag, "x2": float(radius), "y2": None}


def _segment(label: str, za: complex, zb: complex) -> dict:
    za, zb = complex(za), complex(zb)
    return {"kind": "segment", "label": label, "x1": za.real, "y1": za.imag, "x2": zb.real, "y2": zb.imag}


def _catalog_points(cat: PointCatalog) -> list[dict]:
    elements = []
    for name, value in cat.as_dict().items():
        elements.append(_point(name, value))
    return elements


def _axis(*points: complex) -> dict:
    xs = [complex(p).real for p in points]
    pad = 0.25 * max(1.0, max(xs) - min(xs))
    return _segment("real-axis", complex(min(xs) - pad, 0.0), complex(max(xs) + pad, 0.0))


def _fig_tangent_circles(a: complex, b: complex) -> list[dict]:
    """Geodesic through a, b and the two circles through them tangent to the axis."""
    cat = catalog_general(a, b)
    elements = [_point("a", a), _point("b", b)]
    elements += _catalog_points(cat)
    if cat.u1 is not None:
        elements.append(_circle("geodesic", complex(cat.u1, 0.0), abs(a - cat.u1)))
    else:
        top = max(a.imag, b.imag)
        elements.append(_segment("geodesic", complex(a.real, 0.0), complex(a.real, 1.5 * top)))
    if cat.p is not None and cat.d is not None:
        elements.append(_circle("tangent-at-d", cat.p, cat.p.imag))
    if cat.q is not None and cat.f is not None:
        elements.append(_circle("tangent-at-f", cat.q, cat.q.imag))
    if cat.c is not None:
        far = a if abs(a - cat.c) >= abs(b - cat.c) else b
        elements.append(_segment("chord-line", complex(cat.c, 0.0), far))
    else:
        elements.append(_segment("chord-line", a, b))
    anchors = [a, b] + [complex(v) for v in (cat.a_star, cat.b_star, cat.c, cat.d, cat.f) if v is not None]
    elements.append(_axis(*anchors))
    return elements


def _fig_crossing_chords(a: complex, b: complex) -> list[dict]:
    """Unit pair with the endpoint chords crossing at s and v."""
    cat = catalog_unit(a, b)
    a_star = complex(cat.a_star, 0.0)
    b_star = complex(cat.b_star, 0.0)
    elements = [
        _point("a", a),
        _point("b", b),
        _circle("unit-circle", 0j, 1.0),
        _segment("a-to-a_star", a, a_star),
        _segment("b-to-b_star", b, b_star),
        _segment("a-to-b_star", a, b_star),
        _segment("b-to-a_star", b, a_star),
    ]
    elements += _catalog_points(cat)
    top = max(cat.s.imag, cat.v.imag, cat.m.imag) + 0.2
    elements.append(_segment("common-vertical", complex(cat.u, 0.0), complex(cat.u, top)))
    elements.append(_axis(-1.2 + 0j, 1.2 + 0j))
    return elements


def _fig_midpoint_circle(a: complex, b: complex) -> list[dict]:
    """Unit pair with the circle around c through m, tangent height marked."""
    cat = catalog_unit(a, b)
    elements = [
        _point("a", a),
        _point("b", b),
        _point("origin", 0j),
        _circle("unit-circle", 0j, 1.0),
    ]
    elements += _catalog_points(cat)
    if cat.c is not None:
        center = complex(cat.c, 0.0)
        radius = abs(center - cat.m)
        elements.append(_circle("circle-through-m", center, radius))
        elements.append(_point("c1", complex(cat.c, radius)))
        elements.append(_segment("c-to-c1", center, complex(cat.c, radius)))
        elements.append(_segment("radius-to-m", 0j, cat.m))
        elements.append(_segment("c-to-m", center, cat.m))
    elements.append(_axis(-1.2 + 0j, 1.2 + 0j))
    return elements


def _fig_lower_chords(a: complex, b: complex) -> list[dict]:
    """Unit pair with chords through the attaining point to the lower half circle."""
    cat = catalog_unit(a, b)
    result = visual_angle(a, b)
    k = complex(result.attaining_point, 0.0)
    ya = chord_second_intersection(a, k)
    yb = chord_second_intersection(b, k)
    elements = [
        _point("a", a),
        _point("b", b),
        _point("k", k),
        _point("ya", ya),
        _point("yb", yb),
        _point("ya-mirror", ya.conjugate()),
        _point("yb-mirror", yb.conjugate()),
        _circle("unit-circle", 0j, 1.0),
        _segment("chord-a", a, ya),
        _segment("chord-b", b, yb),
        _axis(-1.2 + 0j, 1.2 + 0j),
    ]
    if cat.m is not None:
        elements.append(_point("m", cat.m))
    return elements


FIGURES = {
    "fig3": _fig_tangent_circles,
    "fig4": _fig_tangent_circles,
    "fig5": _fig_crossing_chords,
    "fig6": _fig_midpoint_circle,
    "fig7": _fig_lower_chords,
}


def figure_data(name: str, a: complex, b: complex) -> list[dict]:
    """Elements for one named construction on the pair a, b.

    fig3 and fig4 draw the tangent-circle construction for any pair in the
    upper half plane; fig5 through fig7 require a pair on the unit circle.
    """
    if name not in FIGURES:
        raise UnknownFigure(f"unknown figure {name!r}; choose from {sorted(FIGURES)}")
    if math.isinf(abs(a)) or math.isinf(abs(b)):
        raise UnknownFigure("figure data needs finite points")
    return FIGURES[name](complex(a), complex(b))
