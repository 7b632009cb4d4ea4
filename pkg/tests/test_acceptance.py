"""Acceptance gate: ten numbered criteria, one test and one verdict line each.

Run with -s to see the measured margins; each test prints a single
"criterion N PASS" line after its assertions go through.
"""

import cmath
import math
import time

import numpy as np
import pytest

from vangle.distortion import lambda_k, mu, mu_inv, phi_eta_identity
from vangle.hyperbolic import half_plane_mobius, rho_half_plane
from vangle.sampling import make_rng, sample_pairs, sample_taus, sample_unit_pairs
from vangle.visual import (
    Branch,
    catalog_constructed,
    catalog_general,
    catalog_unit,
    sin_identity_rhs,
    vhquot_ratio,
    visual_angle,
    visual_angle_bounds,
    visual_angle_oracle,
)

SEED = 1729

SQ2 = math.sqrt(2.0)
SQ3 = math.sqrt(3.0)
SQ5 = math.sqrt(5.0)
SQ10 = math.sqrt(10.0)
SQ15 = math.sqrt(15.0)
SQ34 = math.sqrt(34.0)

# Seven reference rows: pair, expected angle, expected tangency-circle
# center.  Six closed forms plus one decimal row known to six digits.
CLOSED_ROWS = [
    (2j, -1 + 1j, math.pi / 4.0, 1j),
    (2j, -3 + 1j, math.pi - math.atan(9.0 + 4.0 * SQ5), complex(-6 + 2 * SQ5, 15 - 6 * SQ5)),
    (2j, 1 + 3j, math.atan((5.0 + 4.0 * SQ3) / 23.0), complex(-2 + 2 * SQ3, 5 - 2 * SQ3)),
    (2j, -2 + 1j, math.atan(1.5 + math.sqrt(2.5)), complex(-4 + SQ10, 7.5 - 2 * SQ10)),
    (2j, -4 + 1j, math.pi - math.atan((6.0 + SQ34) / 4.0), complex(-8 + SQ34, 25.5 - 4 * SQ34)),
    (2j, -3 + 3j, math.atan(1.0 + 4.0 / SQ15), complex(6 - 2 * SQ15, 25 - 6 * SQ15)),
]
DECIMAL_ROW = (2j, 1.2 + 4j, 0.588469, complex(2.098485, 2.100909))


@pytest.fixture(scope="module")
def pairs10k():
    return sample_pairs(make_rng(SEED), 10_000)


@pytest.fixture(scope="module")
def unit10k():
    return sample_unit_pairs(make_rng(SEED), 10_000)


def test_criterion_01_reference_table():
    start = time.perf_counter()
    worst_v = worst_p = 0.0
    for a, b, angle, p in CLOSED_ROWS:
        worst_v = max(worst_v, abs(visual_angle(a, b).angle - angle))
        worst_p = max(worst_p, abs(catalog_general(a, b).p - p))
    a, b, angle, p = DECIMAL_ROW
    dec_v = abs(visual_angle(a, b).angle - angle)
    dec_p = abs(catalog_general(a, b).p - p)
    elapsed = time.perf_counter() - start
    assert worst_v < 1e-9
    assert worst_p < 1e-9
    assert dec_v < 1e-6
    assert dec_p < 1e-6
    assert elapsed < 0.05
    print(
        f"criterion 1 PASS: 7 reference rows, closed-form |dv|<={worst_v:.1e} "
        f"|dp|<={worst_p:.1e}, decimal row |dv|={dec_v:.1e}, {elapsed * 1e3:.1f} ms"
    )


def test_criterion_02_eighth_turn_pair():
    a = cmath.rect(1.0, math.pi / 8.0)
    b = cmath.rect(1.0, 3.0 * math.pi / 8.0)
    angle = visual_angle(a, b).angle
    exact = math.asin((1.0 + math.sqrt(SQ2 - 1.0)) / 2.0)
    assert abs(angle - 0.964558) < 1e-6
    assert abs(angle - exact) < 1e-12
    print(f"criterion 2 PASS: angle={angle:.12f}, |angle - closed form|={abs(angle - exact):.1e}")


def test_criterion_03_oracle_agreement(pairs10k):
    start = time.perf_counter()
    worst = 0.0
    obtuse = 0
    for a, b in pairs10k:
        result = visual_angle(a, b)
        if result.branch is Branch.OBTUSE_FORMULA:
            obtuse += 1
        worst = max(worst, abs(result.angle - visual_angle_oracle(a, b)))
    elapsed = time.perf_counter() - start
    fraction = obtuse / len(pairs10k)
    assert worst < 1e-6
    assert fraction >= 0.05
    assert elapsed <= 60.0
    print(
        f"criterion 3 PASS: 10^4 pairs, max |formula - oracle|={worst:.1e}, "
        f"obtuse fraction={fraction:.1%}, {elapsed:.1f} s"
    )


def test_criterion_04_sine_identities(unit10k):
    worst_t = worst_rhs = 0.0
    for a, b in unit10k:
        result = visual_angle(a, b)
        s = math.sin(result.angle)
        worst_t = max(worst_t, abs(s - result.T))
        worst_rhs = max(worst_rhs, abs(s - sin_identity_rhs(a, b)))
    assert worst_t < 1e-10
    assert worst_rhs < 1e-10
    print(
        f"criterion 4 PASS: 10^4 unit pairs, |sin v - T|<={worst_t:.1e}, "
        f"|sin v - product form|<={worst_rhs:.1e}"
    )


def test_criterion_05_two_sided_bounds(pairs10k):
    worst = 0.0
    for a, b in pairs10k:
        lo, hi = visual_angle_bounds(a, b)
        angle = visual_angle(a, b).angle
        worst = max(worst, lo - angle, angle - hi)
    assert worst <= 1e-12

    rng = make_rng(SEED + 1)
    worst_vert = worst_horiz = 0.0
    for _ in range(1000):
        x, x2 = rng.uniform(-5.0, 5.0, 2)
        y1, y2 = np.exp(rng.uniform(math.log(0.05), math.log(5.0), 2))
        if y1 != y2:
            a, b = complex(x, y1), complex(x, y2)
            lo, _ = visual_angle_bounds(a, b)
            worst_vert = max(worst_vert, abs(visual_angle(a, b).angle - lo))
        if x != x2:
            a, b = complex(x, y1), complex(x2, y1)
            _, hi = visual_angle_bounds(a, b)
            worst_horiz = max(worst_horiz, abs(visual_angle(a, b).angle - hi))
    assert worst_vert < 1e-9
    assert worst_horiz < 1e-9
    print(
        f"criterion 5 PASS: bounds hold on 10^4 pairs (slack>={-worst:.1e}), "
        f"vertical equality {worst_vert:.1e}, horizontal equality {worst_horiz:.1e}"
    )


def test_criterion_06_catalog_consistency(pairs10k, unit10k):
    worst_closed = 0.0
    for a, b in pairs10k:
        closed = catalog_general(a, b).as_dict()
        built = catalog_constructed(a, b).as_dict()
        for name in closed.keys() & built.keys():
            err = abs(complex(closed[name]) - complex(built[name]))
            worst_closed = max(worst_closed, err / max(1.0, abs(complex(closed[name]))))
    assert worst_closed < 1e-10

    worst_unit = 0.0
    for a, b in unit10k:
        special = catalog_unit(a, b).as_dict()
        general = catalog_general(a, b).as_dict()
        for name in special.keys() & general.keys():
            err = abs(complex(special[name]) - complex(general[name]))
            worst_unit = max(worst_unit, err / max(1.0, abs(complex(special[name]))))
    assert worst_unit < 1e-10
    print(
        f"criterion 6 PASS: definitional vs closed {worst_closed:.1e} on 10^4 pairs, "
        f"unit specialization vs general {worst_unit:.1e}"
    )


def test_criterion_07_crossing_geometry():
    rng = make_rng(SEED + 2)
    worst_line = worst_angle = worst_dist = 0.0
    for a, b in sample_unit_pairs(rng, 1000):
        cat = catalog_unit(a, b)
        reals = [cat.u, cat.s.real, cat.m.real, cat.v.real]
        worst_line = max(worst_line, max(reals) - min(reals))
        if cat.c is not None:
            dot = ((0 - cat.m) * (cat.c - cat.m).conjugate()).real
            worst_angle = max(worst_angle, abs(dot) / max(1.0, abs(cat.m) * abs(cat.c - cat.m)))
        r1 = rho_half_plane(a, cat.s)
        e1 = abs(r1 - rho_half_plane(b, cat.v))
        e2 = abs(rho_half_plane(b, cat.s) - rho_half_plane(a, cat.v))
        worst_dist = max(worst_dist, max(e1, e2) / max(1.0, r1))
    assert worst_line < 1e-12
    assert worst_angle < 1e-10
    assert worst_dist < 1e-10
    print(
        f"criterion 7 PASS: 10^3 unit pairs, collinearity {worst_line:.1e}, "
        f"right angle {worst_angle:.1e}, crossing distances {worst_dist:.1e}"
    )


def test_criterion_08_distortion_stack():
    assert abs(mu(1.0 / SQ2) - math.pi / 2.0) < 1e-13

    # the round trip is evaluated on [0.35, 40]: below 0.35 the inverse sits
    # so close to r = 1 that float64 cannot represent it to 1e-11 anyway
    worst_trip = 0.0
    for y in np.logspace(math.log10(0.35), math.log10(40.0), 400):
        y = float(y)
        worst_trip = max(worst_trip, abs(mu(mu_inv(y)) - y))
    assert worst_trip < 1e-11

    assert lambda_k(1.0) == 1.0
    worst_gap = -math.inf
    for big_k in np.linspace(1.0 + 1e-9, 4.0, 200):
        big_k = float(big_k)
        worst_gap = max(worst_gap, lambda_k(big_k) - math.exp(math.pi * (big_k - 1.0 / big_k)))
    assert worst_gap < 0.0

    worst_eq = 0.0
    worst_slack = 0.0
    count = 0
    for big_k in np.linspace(1.0, 4.0, 25):
        big_k = float(big_k)
        r_hi = min(0.98, mu_inv(0.4 * big_k))
        for r in np.linspace(0.02, r_hi, 40):
            check = phi_eta_identity(big_k, float(r))
            worst_eq = max(worst_eq, abs(check.lhs - check.rhs) / max(1.0, abs(check.lhs)))
            worst_slack = max(worst_slack, (check.lhs - check.bound) / max(1.0, check.lhs))
            count += 1
    assert count == 1000
    assert worst_eq < 1e-10
    assert worst_slack <= 1e-12
    print(
        f"criterion 8 PASS: mu round trip {worst_trip:.1e}, lambda bound gap "
        f"{worst_gap:.1e}, half-angle identity {worst_eq:.1e} and slack {worst_slack:.1e} on 10^3 grid"
    )


def test_criterion_09_sharp_case_monotonicity(unit10k):
    rng = make_rng(SEED + 3)
    taus = sample_taus(rng, len(unit10k), span=0.9)
    worst = -math.inf
    used = 0
    for (a, b), tau in zip(unit10k, taus):
        before = visual_angle(a, b).angle
        if before >= math.pi / 2.0:
            continue
        used += 1
        after = visual_angle(half_plane_mobius(tau, a), half_plane_mobius(tau, b)).angle
        worst = max(worst, math.tan(0.5 * after) - math.tan(before))
    assert used > 1000
    assert worst <= 1e-12
    print(
        f"criterion 9 PASS: {used} acute unit pairs under the identity-dilatation "
        f"family, max tan(v'/2) - tan(v) = {worst:.1e}"
    )


def test_criterion_10_quotient_and_triple_inequality(unit10k):
    rng = make_rng(SEED + 4)
    taus = sample_taus(rng, len(unit10k), span=0.999)
    worst_ratio = -math.inf
    for (a, b), tau in zip(unit10k, taus):
        ratio = vhquot_ratio(tau, a, b)
        worst_ratio = max(worst_ratio, 0.5 - ratio, ratio - 2.0)
    assert worst_ratio < 0.0

    worst_triple = -math.inf
    for _ in range(10_000):
        alpha, beta = rng.uniform(1e-3, math.pi - 1e-3, 2)
        gamma = float(rng.uniform(0.0, 0.999)) * min(alpha, beta)
        a, b = cmath.rect(1.0, float(alpha)), cmath.rect(1.0, float(beta))
        c = cmath.rect(1.0, gamma)
        worst_triple = max(worst_triple, abs(c + a * b) - abs(a + b))
    assert worst_triple < 1e-12
    print(
        f"criterion 10 PASS: quotient stays inside (1/2, 2) with margin "
        f"{-worst_ratio:.1e} on 10^4 samples, triple inequality margin {-worst_triple:.1e}"
    )
