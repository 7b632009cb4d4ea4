"""Euclidean helpers: line intersections, circles, inversions, chordal metric."""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vangle.errors import (
    CoincidentPoints,
    CollinearPoints,
    DegenerateTuple,
    OutsideDisk,
    ParallelLines,
    PoleInput,
)
from vangle.geom import (
    INFINITY,
    Circle,
    chord_second_intersection,
    chordal,
    circumcenter,
    cross_ratio,
    disk_automorphism,
    invert_in_circle,
    lis,
    reflect_in_line,
    sgn,
    vertex_angle,
)

finite_floats = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
points = st.builds(complex, finite_floats, finite_floats)
disk_points = st.builds(
    cmath.rect,
    st.floats(min_value=0.0, max_value=0.95),
    st.floats(min_value=0.0, max_value=2.0 * math.pi),
)


def test_sgn_is_plus_one_at_zero():
    assert sgn(0.0) == 1.0
    assert sgn(-0.0) == 1.0
    assert sgn(3.5) == 1.0
    assert sgn(-2.0) == -1.0


def test_circle_rejects_nonpositive_radius():
    with pytest.raises(ValueError):
        Circle(0j, 0.0)
    with pytest.raises(ValueError):
        Circle(1j, -2.0)


class TestLis:
    def test_axes_cross_at_origin(self):
        assert lis(-1, 1, -1j, 1j) == 0j

    def test_known_crossing(self):
        # y = x meets y = -x + 2 at 1+1i
        z = lis(0, 1 + 1j, 2, 1j * 2)
        assert abs(z - (1 + 1j)) < 1e-12

    def test_parallel_lines_raise(self):
        with pytest.raises(ParallelLines):
            lis(0, 1, 1j, 1 + 1j)

    def test_coincident_points_raise(self):
        with pytest.raises(CoincidentPoints):
            lis(1j, 1j, 0, 1)

    @given(a=points, b=points, c=points, d=points)
    @settings(max_examples=300)
    def test_result_lies_on_both_lines(self, a, b, c, d):
        try:
            z = lis(a, b, c, d)
        except (CoincidentPoints, ParallelLines):
            return
        # cross product of (b-a) with (z-a) vanishes when z is on the line
        for p, q in ((a, b), (c, d)):
            cross = ((q - p).conjugate() * (z - p)).imag
            assert abs(cross) < 1e-6 * max(1.0, abs(q - p) * abs(z - p))


class TestCircumcenter:
    def test_right_triangle(self):
        # hypotenuse from 0 to 2, so the center is its midpoint
        assert abs(circumcenter(0, 2, 1 + 1j) - 1) < 1e-12

    def test_collinear_raises(self):
        with pytest.raises(CollinearPoints):
            circumcenter(0, 1, 2)

    @given(a=points, b=points, c=points)
    @settings(max_examples=300)
    def test_equidistance(self, a, b, c):
        try:
            center = circumcenter(a, b, c)
        except (CoincidentPoints, CollinearPoints):
            return
        r1, r2, r3 = abs(a - center), abs(b - center), abs(c - center)
        scale = max(1.0, r1)
        assert abs(r1 - r2) < 1e-6 * scale
        assert abs(r1 - r3) < 1e-6 * scale


class TestChordal:
    def test_antipodal_points_have_distance_one(self):
        assert abs(chordal(1j, -1j) - 1.0) < 1e-15
        assert abs(chordal(1, -1) - 1.0) < 1e-15

    def test_origin_to_infinity(self):
        assert chordal(0j, INFINITY) == 1.0
        assert chordal(INFINITY, 0j) == 1.0

    def test_infinity_to_itself(self):
        assert chordal(INFINITY, INFINITY) == 0.0

    @given(a=points, b=points)
    def test_symmetry(self, a, b):
        assert chordal(a, b) == chordal(b, a)

    @given(a=points, b=points, c=points)
    @settings(max_examples=300)
    def test_triangle_inequality(self, a, b, c):
        assert chordal(a, c) <= chordal(a, b) + chordal(b, c) + 1e-12


class TestCrossRatio:
    def test_known_value(self):
        # |0, 1, INFINITY, z| reduces to a ratio of chordal distances
        value = cross_ratio(0, 1, INFINITY, 2)
        expected = chordal(0, INFINITY) * chordal(1, 2) / (chordal(0, 1) * chordal(INFINITY, 2))
        assert abs(value - expected) < 1e-15

    def test_one_point_at_infinity(self):
        assert abs(cross_ratio(0, 1, 2, INFINITY) - 2.0) < 1e-12

    def test_degenerate_tuple_raises(self):
        with pytest.raises(DegenerateTuple):
            cross_ratio(1j, 1j, 0, 1)
        with pytest.raises(DegenerateTuple):
            cross_ratio(INFINITY, 0, INFINITY, 1)

    @given(a=points, b=points, c=points, d=points)
    @settings(max_examples=200)
    def test_positive(self, a, b, c, d):
        try:
            value = cross_ratio(a, b, c, d)
        except DegenerateTuple:
            return
        assert value > 0.0


class TestInversion:
    unit = Circle(0j, 1.0)

    def test_center_maps_to_infinity(self):
        assert invert_in_circle(0j, self.unit) is INFINITY

    def test_infinity_maps_to_center(self):
        assert invert_in_circle(INFINITY, self.unit) == 0j

    def test_fixes_the_circle(self):
        z = cmath.exp(0.7j)
        assert abs(invert_in_circle(z, self.unit) - z) < 1e-15

    @given(z=points)
    @settings(max_examples=300)
    def test_involution(self, z):
        circle = Circle(1 + 2j, 3.0)
        w = invert_in_circle(z, circle)
        back = invert_in_circle(w, circle)
        if back is INFINITY:
            assert z == circle.center
        else:
            assert abs(back - z) < 1e-9 * max(1.0, abs(z))


class TestReflection:
    def test_real_axis_is_conjugation(self):
        assert reflect_in_line(2 + 3j, 0, 1) == 2 - 3j

    def test_fixes_the_axis_points(self):
        a, b = 1 + 1j, 4 - 2j
        assert abs(reflect_in_line(a, a, b) - a) < 1e-12
        assert abs(reflect_in_line(b, a, b) - b) < 1e-12

    @given(z=points)
    @settings(max_examples=300)
    def test_involution_and_distance_preservation(self, z):
        a, b = 1 + 1j, -2 + 4j
        w = reflect_in_line(z, a, b)
        assert abs(reflect_in_line(w, a, b) - z) < 1e-9 * max(1.0, abs(z))
        assert abs(abs(w - a) - abs(z - a)) < 1e-9 * max(1.0, abs(z - a))


class TestDiskAutomorphism:
    def test_sends_base_point_to_origin(self):
        a = 0.3 + 0.4j
        assert abs(disk_automorphism(a, a)) < 1e-15

    def test_preserves_unit_circle(self):
        a = 0.5 - 0.2j
        for k in range(8):
            z = cmath.exp(2j * math.pi * k / 8)
            assert abs(abs(disk_automorphism(a, z)) - 1.0) < 1e-12

    def test_base_point_outside_disk_raises(self):
        with pytest.raises(OutsideDisk):
            disk_automorphism(1.5, 0j)

    def test_pole_raises(self):
        a = 0.5
        with pytest.raises(PoleInput):
            disk_automorphism(a, 1.0 / a)

    @given(a=disk_points, z=disk_points)
    @settings(max_examples=300)
    def test_factors_through_circle_inversion(self, a, z):
        """The map equals conjugation-rotation composed with one inversion."""
        if abs(a) < 1e-3:
            return
        try:
            direct = disk_automorphism(a, z)
        except PoleInput:
            return
        center = 1.0 / a.conjugate()
        radius = math.sqrt(1.0 / abs(a) ** 2 - 1.0)
        sigma = invert_in_circle(z, Circle(center, radius))
        factored = -(a / a.conjugate()) * sigma.conjugate()
        assert abs(direct - factored) < 1e-9


class TestVertexAngle:
    def test_right_angle(self):
        assert abs(vertex_angle(1, 0, 1j) - math.pi / 2) < 1e-15

    def test_straight_angle(self):
        assert abs(vertex_angle(-1, 0, 1) - math.pi) < 1e-15

    def test_vertex_hit_raises(self):
        with pytest.raises(CoincidentPoints):
            vertex_angle(1j, 1j, 2)

    @given(a=points, x=points, b=points)
    @settings(max_examples=300)
    def test_symmetric_and_bounded(self, a, x, b):
        try:
            angle = vertex_angle(a, x, b)
        except CoincidentPoints:
            return
        assert 0.0 <= angle <= math.pi
        assert abs(angle - vertex_angle(b, x, a)) < 1e-12


class TestChordSecondIntersection:
    def test_diameter_through_origin(self):
        z = cmath.exp(0.3j)
        assert abs(chord_second_intersection(z, 0j) - (-z)) < 1e-15

    @given(
        theta=st.floats(min_value=0.01, max_value=2.0 * math.pi - 0.01),
        k=st.floats(min_value=-0.9, max_value=0.9),
    )
    @settings(max_examples=300)
    def test_lands_on_unit_circle_and_chord(self, theta, k):
        z = cmath.exp(1j * theta)
        if abs(z - k) < 1e-6:
            return
        w = chord_second_intersection(z, complex(k, 0.0))
        assert abs(abs(w) - 1.0) < 1e-12
        cross = ((complex(k, 0.0) - z).conjugate() * (w - z)).imag
        assert abs(cross) < 1e-9
