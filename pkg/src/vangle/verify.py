"""Seeded verification suites behind `vangle verify`.

Each suite runs a batch of numerical identity checks on reproducible random
samples and reports the worst residual per check.  A residual is always
scaled so that "below tolerance" means the identity holds: relative error
for equalities, positive part of the violation for inequalities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .distortion import (
    eta_k,
    eta_k_alt,
    holder_rhs,
    lambda_k,
    mu,
    mu_inv,
    phi_eta_identity,
    phi_k,
)
from .errors import UnknownSuite
from .geom import chordal
from .hyperbolic import (
    half_plane_mobius,
    rho_disk,
    rho_half_plane,
    rho_via_cross_ratio,
    similarity_to_unit,
)
from .sampling import make_rng, sample_pairs, sample_taus, sample_unit_pairs
from .visual import (
    catalog_general,
    catalog_constructed,
    catalog_unit,
    vhquot_ratio,
    visual_angle,
    visual_angle_bounds,
    visual_angle_oracle,
)

__all__ = ["CheckResult", "VerifyReport", "SUITES", "run_suite", "run_suites"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    cases: int
    max_residual: float
    tolerance: float
    worst_inputs: str

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def cases_run(self) -> int:
        return sum(c.cases for c in self.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_ratio(self) -> float:
        """Worst residual over tolerance; passing means <= 1."""
        return max(
            (c.max_residual / c.tolerance if c.tolerance > 0 else (math.inf if c.max_residual > 0 else 0.0))
            for c in self.checks
        )


class _Worst:
    """Tracks the maximum residual and the inputs that produced it."""

    def __init__(self):
        self.residual = 0.0
        self.inputs = ""
        self.cases = 0

    def update(self, residual: float, inputs: str):
        self.cases += 1
        if residual > self.residual:
            self.residual = residual
            self.inputs = inputs

    def result(self, name: str, tol: float) -> CheckResult:
        return CheckResult(name, self.cases, self.residual, tol, self.inputs)


def _tol(tols: dict, name: str, default: float) -> float:
    return float(tols.get(name, default))


def _suite_metrics(seed: int, samples: int, tols: dict) -> VerifyReport:
    rng = make_rng(seed)
    pairs = sample_pairs(rng, samples)
    unit_pairs = sample_unit_pairs(rng, samples)
    taus = sample_taus(rng, samples)

    dual = _Worst()
    for a, b in pairs:
        r1, r2 = rho_half_plane(a, b), rho_via_cross_ratio(a, b)
        dual.update(abs(r1 - r2) / max(1.0, r1), f"a={a} b={b}")

    invariance = _Worst()
    for (a, b), tau in zip(unit_pairs, taus):
        r0 = rho_half_plane(a, b)
        r1 = rho_half_plane(half_plane_mobius(tau, a), half_plane_mobius(tau, b))
        invariance.update(abs(r1 - r0) / max(1.0, r0), f"a={a} b={b} tau={tau}")

    similarity = _Worst()
    for a, b in pairs:
        if a.real == b.real:
            continue
        na, nb, _, _ = similarity_to_unit(a, b)
        r0, r1 = rho_half_plane(a, b), rho_half_plane(na, nb)
        similarity.update(abs(r1 - r0) / max(1.0, r0), f"a={a} b={b}")

    cayley = _Worst()
    for a, b in pairs:
        ta, tb = (a - 1j) / (a + 1j), (b - 1j) / (b + 1j)
        r_h = rho_half_plane(a, b)
        cayley.update(abs(rho_disk(ta, tb) - r_h) / max(1.0, r_h), f"a={a} b={b}")

    triangle = _Worst()
    for a, b in pairs:
        c = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        viol = chordal(a, c) - chordal(a, b) - chordal(b, c)
        triangle.update(max(0.0, viol), f"a={a} b={b} c={c}")

    return VerifyReport(
        suite="metrics",
        checks=[
            dual.result("rho-dual-path", _tol(tols, "rho-dual-path", 1e-10)),
            invariance.result("rho-mobius-invariance", _tol(tols, "rho-mobius-invariance", 1e-10)),
            similarity.result("rho-similarity-invariance", _tol(tols, "rho-similarity-invariance", 1e-10)),
            cayley.result("rho-cayley-transfer", _tol(tols, "rho-cayley-transfer", 1e-10)),
            triangle.result("chordal-triangle", _tol(tols, "chordal-triangle", 1e-12)),
        ],
    )


def _suite_catalog(seed: int, samples: int, tols: dict) -> VerifyReport:
    rng = make_rng(seed)
    closed_vs_built = _Worst()
    for a, b in sample_pairs(rng, samples):
        closed = catalog_general(a, b).as_dict()
        built = catalog_constructed(a, b).as_dict()
        for name in closed.keys() & built.keys():
            res = abs(closed[name] - built[name]) / max(1.0, abs(closed[name]))
            closed_vs_built.update(res, f"field={name} a={a} b={b}")

    unit_vs_general = _Worst()
    for a, b in sample_unit_pairs(rng, samples):
        unit = catalog_unit(a, b).as_dict()
        general = catalog_general(a, b).as_dict()
        for name in unit.keys() & general.keys():
            res = abs(unit[name] - general[name]) / max(1.0, abs(unit[name]))
            unit_vs_general.update(res, f"field={name} a={a} b={b}")

    return VerifyReport(
        suite="catalog",
        checks=[
            closed_vs_built.result("closed-vs-constructed", _tol(tols, "closed-vs-constructed", 1e-10)),
            unit_vs_general.result("unit-vs-general", _tol(tols, "unit-vs-general", 1e-10)),
        ],
    )


def _suite_collinearity(seed: int, samples: int, tols: dict) -> VerifyReport:
    rng = make_rng(seed)
    real_parts = _Worst()
    right_angle = _Worst()
    distances = _Worst()
    for a, b in sample_unit_pairs(rng, samples):
        cat = catalog_unit(a, b)
        res = [cat.u, cat.s.real, cat.m.real, cat.v.real]
        real_parts.update(max(res) - min(res), f"a={a} b={b}")
        if cat.c is not None:
            dot = ((0 - cat.m) * (cat.c - cat.m).conjugate()).real
            scale = max(1.0, abs(cat.m) * abs(cat.c - cat.m))
            right_angle.update(abs(dot) / scale, f"a={a} b={b}")
        r1 = rho_half_plane(a, cat.s)
        e1 = abs(r1 - rho_half_plane(b, cat.v)) / max(1.0, r1)
        e2 = abs(rho_half_plane(b, cat.s) - rho_half_plane(a, cat.v)) / max(1.0, r1)
        distances.update(max(e1, e2), f"a={a} b={b}")

    return VerifyReport(
        suite="collinearity",
        checks=[
            real_parts.result("equal-real-parts", _tol(tols, "equal-real-parts", 1e-12)),
            right_angle.result("right-angle", _tol(tols, "right-angle", 1e-10)),
            distances.result("crossing-distance-equalities", _tol(tols, "crossing-distance-equalities", 1e-10)),
        ],
    )


def _suite_bounds(seed: int, samples: int, tols: dict) -> VerifyReport:
    rng = make_rng(seed)
    two_sided = _Worst()
    for a, b in sample_pairs(rng, samples):
        lo, hi = visual_angle_bounds(a, b)
        angle = visual_angle(a, b).angle
        two_sided.update(max(0.0, lo - angle, angle - hi), f"a={a} b={b}")

    vertical = _Worst()
    horizontal = _Worst()
    for _ in range(samples):
        x = float(rng.uniform(-5, 5))
        y1, y2 = np.exp(rng.uniform(math.log(0.05), math.log(5.0), 2))
        if y1 == y2:
            continue
        a, b = complex(x, y1), complex(x, y2)
        lo, _ = visual_angle_bounds(a, b)
        vertical.update(abs(visual_angle(a, b).angle - lo), f"a={a} b={b}")
        x2 = float(rng.uniform(-5, 5))
        if x2 == x:
            continue
        a, b = complex(x, y1), complex(x2, y1)
        _, hi = visual_angle_bounds(a, b)
        horizontal.update(abs(visual_angle(a, b).angle - hi), f"a={a} b={b}")

    quotient = _Worst()
    rng2 = make_rng(seed + 1)
    for (a, b), tau in zip(sample_unit_pairs(rng2, samples), sample_taus(rng2, samples)):
        ratio = vhquot_ratio(tau, a, b)
        quotient.update(max(0.0, 0.5 - ratio, ratio - 2.0), f"a={a} b={b} tau={tau}")

    return VerifyReport(
        suite="bounds",
        checks=[
            two_sided.result("two-sided-bound", _tol(tols, "two-sided-bound", 1e-12)),
            vertical.result("vertical-sharpness", _tol(tols, "vertical-sharpness", 1e-9)),
            horizontal.result("horizontal-sharpness", _tol(tols, "horizontal-sharpness", 1e-9)),
            quotient.result("mobius-quotient-range", _tol(tols, "mobius-quotient-range", 1e-12)),
        ],
    )


def _suite_oracle(seed: int, samples: int, tols: dict) -> VerifyReport:
    rng = make_rng(seed)
    agreement = _Worst()
    for a, b in sample_pairs(rng, samples):
        res = abs(visual_angle(a, b).angle - visual_angle_oracle(a, b))
        agreement.update(res, f"a={a} b={b}")
    return VerifyReport(
        suite="oracle",
        checks=[agreement.result("formula-vs-oracle", _tol(tols, "formula-vs-oracle", 1e-6))],
    )


def _suite_distortion(seed: int, samples: int, tols: dict) -> VerifyReport:
    symmetric = _Worst()
    symmetric.update(abs(mu(math.sqrt(0.5)) - math.pi / 2.0), "r=1/sqrt(2)")

    roundtrip = _Worst()
    for y in np.logspace(math.log10(0.35), math.log10(40.0), max(10, samples // 2)):
        y = float(y)
        roundtrip.update(abs(mu(mu_inv(y)) - y) / y, f"y={y}")

    phi_round = _Worst()
    for big_k in np.linspace(1.0, 4.0, 13):
        for r in np.linspace(0.05, 0.95, max(5, samples // 20)):
            big_k, r = float(big_k), float(r)
            back = phi_k(big_k, phi_k(1.0 / big_k, r))
            phi_round.update(abs(back - r) / max(1.0, r), f"K={big_k} r={r}")

    eta_dual = _Worst()
    for big_k in np.linspace(1.0, 4.0, 7):
        for t in np.logspace(-2, 2, max(5, samples // 20)):
            big_k, t = float(big_k), float(t)
            v1, v2 = eta_k(big_k, t), eta_k_alt(big_k, t)
            eta_dual.update(abs(v1 - v2) / max(1.0, abs(v1)), f"K={big_k} t={t}")

    lam_base = _Worst()
    lam_base.update(abs(lambda_k(1.0) - 1.0), "K=1")

    lam_bound = _Worst()
    for big_k in np.linspace(1.0 + 1e-6, 4.0, max(10, samples // 10)):
        big_k = float(big_k)
        lam_bound.update(
            max(0.0, lambda_k(big_k) - math.exp(math.pi * (big_k - 1.0 / big_k))), f"K={big_k}"
        )

    # The half-angle identity is evaluated away from phi's saturation zone:
    # once mu(r)/K drops below ~0.35, phi_K(r) sits within a few ulp of 1 and
    # lhs = p/sqrt(1-p^2) amplifies that quantization without bound.
    identity = _Worst()
    slack = _Worst()
    for big_k in np.linspace(1.0, 4.0, 25):
        big_k = float(big_k)
        r_max = mu_inv(0.4 * big_k)
        for r in np.linspace(0.02, min(0.98, r_max), 40):
            r = float(r)
            check = phi_eta_identity(big_k, r)
            identity.update(abs(check.lhs - check.rhs) / max(1.0, abs(check.lhs)), f"K={big_k} r={r}")
            slack.update(max(0.0, check.lhs - check.bound) / max(1.0, check.lhs), f"K={big_k} r={r}")

    return VerifyReport(
        suite="distortion",
        checks=[
            symmetric.result("symmetric-point", _tol(tols, "symmetric-point", 1e-13)),
            roundtrip.result("mu-roundtrip", _tol(tols, "mu-roundtrip", 1e-11)),
            phi_round.result("phi-roundtrip", _tol(tols, "phi-roundtrip", 1e-10)),
            eta_dual.result("eta-dual-expression", _tol(tols, "eta-dual-expression", 1e-11)),
            lam_base.result("lambda-base", _tol(tols, "lambda-base", 0.0)),
            lam_bound.result("lambda-exponential-bound", _tol(tols, "lambda-exponential-bound", 0.0)),
            identity.result("half-angle-identity", _tol(tols, "half-angle-identity", 1e-10)),
            slack.result("half-angle-bound", _tol(tols, "half-angle-bound", 1e-12)),
        ],
    )


def _suite_holder(seed: int, samples: int, tols: dict) -> VerifyReport:
    rng = make_rng(seed)
    sharp = _Worst()
    for (a, b), tau in zip(sample_unit_pairs(rng, samples), sample_taus(rng, samples)):
        before = visual_angle(a, b).angle
        if before >= math.pi / 2.0:
            continue
        after = visual_angle(half_plane_mobius(tau, a), half_plane_mobius(tau, b)).angle
        viol = math.tan(after / 2.0) - holder_rhs(1.0, before)
        sharp.update(max(0.0, viol), f"a={a} b={b} tau={tau}")

    collapse = _Worst()
    for v in np.linspace(0.05, 1.5, 30):
        v = float(v)
        collapse.update(abs(holder_rhs(1.0, v) - math.tan(v)), f"v={v}")
    collapse.update(abs(holder_rhs(2.0, math.pi / 4.0) - math.sqrt(lambda_k(2.0))), "K=2 v=pi/4")

    return VerifyReport(
        suite="holder",
        checks=[
            sharp.result("sharp-case", _tol(tols, "sharp-case", 1e-12)),
            collapse.result("bound-collapse", _tol(tols, "bound-collapse", 1e-12)),
        ],
    )


SUITES = {
    "metrics": _suite_metrics,
    "catalog": _suite_catalog,
    "collinearity": _suite_collinearity,
    "bounds": _suite_bounds,
    "oracle": _suite_oracle,
    "distortion": _suite_distortion,
    "holder": _suite_holder,
}


def run_suite(name: str, seed: int = 1729, samples: int = 500, tols: dict | None = None) -> VerifyReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](seed, samples, tols or {})


def run_suites(name: str, seed: int = 1729, samples: int = 500, tols: dict | None = None) -> list[VerifyReport]:
    if name == "all":
        return [run_suite(s, seed, samples, tols) for s in SUITES]
    return [run_suite(name, seed, samples, tols)]
