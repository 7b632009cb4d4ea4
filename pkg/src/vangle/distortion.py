"""Special functions of plane quasiconformal distortion: the complete
elliptic integral, the ring modulus mu and its inverse, the capacity
function gamma2, the distortion functions phi and eta, the constant
lambda(K), and the tangent-form Hoelder bound built from them.

Everything reduces to the arithmetic-geometric mean, which converges
quadratically, so all evaluations are a few dozen multiplications.  The
inverse of mu is the only iterative piece; it runs in log space where the
derivative of mu is order one all the way down to subnormal arguments.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import OutOfRange

__all__ = [
    "elliptic_k",
    "mu",
    "mu_inv",
    "gamma2",
    "phi_k",
    "eta_k",
    "eta_k_alt",
    "lambda_k",
    "holder_rhs",
    "phi_eta_identity",
    "IdentityCheck",
]

_SQRT_HALF = math.sqrt(0.5)


def _agm(x: float, y: float) -> float:
    """Arithmetic-geometric mean of two positive reals."""
    a, b = x, y
    for _ in range(40):
        if abs(a - b) <= 4e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def elliptic_k(r: float) -> float:
    """Complete elliptic integral of the first kind, K(r) with modulus r."""
    if not (0.0 <= r < 1.0):
        raise OutOfRange(f"elliptic_k needs 0 <= r < 1, got {r}")
    return math.pi / (2.0 * _agm(1.0, math.sqrt((1.0 - r) * (1.0 + r))))


def mu(r: float) -> float:
    """Modulus of the ring domain between the unit circle and the slit
    [0, r]: mu(r) = (pi/2) K(r') / K(r).  Strictly decreasing, with
    mu(1/sqrt 2) = pi/2 exactly.

    Both integrals are taken as AGM values so the quotient is formed from
    two well-scaled numbers; no subtraction of near-equal terms occurs.
    """
    if not (0.0 < r < 1.0):
        raise OutOfRange(f"mu needs 0 < r < 1, got {r}")
    rc = math.sqrt((1.0 - r) * (1.0 + r))
    return (math.pi / 2.0) * _agm(1.0, rc) / _agm(1.0, r)


def mu_inv(y: float) -> float:
    """Inverse of mu on (0, inf).

    For y below pi/2 the complementary identity mu(r) mu(r') = pi^2/4
    reflects the problem to the well-conditioned side.  Above pi/2 the
    root is found in x = log r: there the asymptote mu ~ log(4/r) makes
    the derivative close to -1, so a safeguarded Newton iteration inside
    a monotone bracket converges in a handful of steps even when r itself
    is down at 1e-17.
    """
    if not y > 0.0:
        raise OutOfRange(f"mu_inv needs y > 0, got {y}")
    if y == math.pi / 2.0:
        return _SQRT_HALF
    if y < math.pi / 2.0:
        s = mu_inv(math.pi * math.pi / (4.0 * y))
        return min(math.sqrt((1.0 - s) * (1.0 + s)), 1.0 - 2.0 ** -53)

    lo = 2.0 * math.exp(-y)
    hi = min(_SQRT_HALF, 8.0 * math.exp(-y))
    while mu(lo) <= y:
        lo *= 0.5
    while hi < _SQRT_HALF and mu(hi) > y:
        hi = min(_SQRT_HALF, 2.0 * hi)
    xlo, xhi = math.log(lo), math.log(hi)
    x = 0.5 * (xlo + xhi)
    for _ in range(100):
        f = mu(math.exp(x)) - y
        if f > 0.0:
            xlo = x
        else:
            xhi = x
        h = 1e-6
        df = (mu(math.exp(x + h)) - mu(math.exp(x - h))) / (2.0 * h)
        x_next = x - f / df if df != 0.0 else 0.5 * (xlo + xhi)
        if not (xlo < x_next < xhi):
            x_next = 0.5 * (xlo + xhi)
        if abs(x_next - x) < 1e-14:
            x = x_next
            break
        x = x_next
    return math.exp(x)


def gamma2(s: float) -> float:
    """Groetzsch capacity, the decreasing homeomorphism of (1, inf) onto
    (0, inf) with gamma2(1/r) = 2 pi / mu(r)."""
    if not s > 1.0:
        raise OutOfRange(f"gamma2 needs s > 1, got {s}")
    return 2.0 * math.pi / mu(1.0 / s)


def phi_k(big_k: float, r: float) -> float:
    """Distortion function phi_{K}(r) = mu_inv(mu(r) / K), an increasing
    homeomorphism of [0, 1] onto itself.  The endpoints are returned
    directly since mu is singular at both."""
    if not big_k > 0.0:
        raise OutOfRange(f"phi_k needs K > 0, got {big_k}")
    if not (0.0 <= r <= 1.0):
        raise OutOfRange(f"phi_k needs 0 <= r <= 1, got {r}")
    if r == 0.0 or r == 1.0:
        return r
    if big_k == 1.0:
        return r
    return mu_inv(mu(r) / big_k)


def eta_k(big_k: float, t: float) -> float:
    """The distortion function eta_{K}(t) = (1 - w^2) / w^2 with
    w = phi_{1/K}(1 / sqrt(1 + t))."""
    if not big_k >= 1.0:
        raise OutOfRange(f"eta_k needs K >= 1, got {big_k}")
    if not t > 0.0:
        raise OutOfRange(f"eta_k needs t > 0, got {t}")
    w = phi_k(1.0 / big_k, 1.0 / math.sqrt(1.0 + t))
    return (1.0 - w * w) / (w * w)


def eta_k_alt(big_k: float, t: float) -> float:
    """Second expression for eta_{K}(t), as the squared quotient
    (phi_K(sqrt(t/(1+t))) / phi_{1/K}(1/sqrt(1+t)))^2.  Kept as an
    independent evaluation path for cross-checking."""
    if not big_k >= 1.0:
        raise OutOfRange(f"eta_k_alt needs K >= 1, got {big_k}")
    if not t > 0.0:
        raise OutOfRange(f"eta_k_alt needs t > 0, got {t}")
    num = phi_k(big_k, math.sqrt(t / (1.0 + t)))
    den = phi_k(1.0 / big_k, 1.0 / math.sqrt(1.0 + t))
    return (num / den) ** 2


def lambda_k(big_k: float) -> float:
    """lambda(K) = (phi_K(1/sqrt 2) / phi_{1/K}(1/sqrt 2))^2, the constant
    of the tangent Hoelder bound.  lambda(1) = 1 exactly and
    lambda(K) < exp(pi (K - 1/K)) for K > 1."""
    if not big_k >= 1.0:
        raise OutOfRange(f"lambda_k needs K >= 1, got {big_k}")
    if big_k == 1.0:
        return 1.0
    return (phi_k(big_k, _SQRT_HALF) / phi_k(1.0 / big_k, _SQRT_HALF)) ** 2


def holder_rhs(big_k: float, v: float) -> float:
    """Right-hand side of the tangent Hoelder bound:
    sqrt(lambda(K)) * max(tan(v)^K, tan(v)^(1/K)).  At K = 1 this is
    exactly tan(v), the sharp Moebius value."""
    if not big_k >= 1.0:
        raise OutOfRange(f"holder_rhs needs K >= 1, got {big_k}")
    if not (0.0 < v < math.pi / 2.0):
        raise OutOfRange(f"holder_rhs needs 0 < v < pi/2, got {v}")
    tangent = math.tan(v)
    if big_k == 1.0:
        return tangent
    return math.sqrt(lambda_k(big_k)) * max(tangent ** big_k, tangent ** (1.0 / big_k))


class IdentityCheck(NamedTuple):
    """Both sides of the phi-eta half-angle identity plus the tangent
    bound they are dominated by."""

    lhs: float
    rhs: float
    bound: float


def phi_eta_identity(big_k: float, r: float) -> IdentityCheck:
    """Evaluates lhs = phi_K(r) / sqrt(1 - phi_K(r)^2) and
    rhs = sqrt(eta_K(r^2 / (1 - r^2))), which agree identically, together
    with the majorant sqrt(lambda(K)) * max(s^(1/K), s^K) for
    s = r / sqrt(1 - r^2).  Returns all three for inspection."""
    if not big_k >= 1.0:
        raise OutOfRange(f"phi_eta_identity needs K >= 1, got {big_k}")
    if not (0.0 < r < 1.0):
        raise OutOfRange(f"phi_eta_identity needs 0 < r < 1, got {r}")
    p = phi_k(big_k, r)
    lhs = p / math.sqrt((1.0 - p) * (1.0 + p))
    s = r / math.sqrt((1.0 - r) * (1.0 + r))
    rhs = math.sqrt(eta_k(big_k, s * s))
    bound = math.sqrt(lambda_k(big_k)) * max(s ** (1.0 / big_k), s ** big_k)
    return IdentityCheck(lhs=lhs, rhs=rhs, bound=bound)
