"""Seeded random point-pair generators shared by the verification suites,
the CLI, and the test suite.  Everything is driven by a numpy Generator so
a seed fully determines the sample."""

from __future__ import annotations

import math

import numpy as np

__all__ = ["make_rng", "sample_pairs", "sample_unit_pairs", "sample_taus"]

_X_SPAN = 5.0
_Y_LOG_LO = math.log(0.05)
_Y_LOG_HI = math.log(5.0)
_ANGLE_MARGIN = 1e-3
_ANGLE_MIN_GAP = 1e-6


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def sample_pairs(rng: np.random.Generator, n: int) -> list[tuple[complex, complex]]:
    """Pairs in the upper half plane with x uniform on (-5, 5) and y
    log-uniform on (0.05, 5).  Covers the obtuse branch (most wide low
    pairs), near-vertical, and near-horizontal configurations."""
    out = []
    while len(out) < n:
        x1, x2 = rng.uniform(-_X_SPAN, _X_SPAN, 2)
        y1, y2 = np.exp(rng.uniform(_Y_LOG_LO, _Y_LOG_HI, 2))
        a, b = complex(x1, y1), complex(x2, y2)
        if a != b:
            out.append((a, b))
    return out

def sample_unit_pairs(rng: np.random.Generator, n: int) -> list[tuple[complex, complex]]:
    """Pairs on the upper unit semicircle, with arguments uniform on
    (1e-3, pi - 1e-3) and a minimum argument gap of 1e-6."""
    out = []
    while len(out) < n:
        t1, t2 = rng.uniform(_ANGLE_MARGIN, math.pi - _ANGLE_MARGIN, 2)
        if abs(t1 - t2) < _ANGLE_MIN_GAP:
            continue
        out.append((complex(math.cos(t1), math.sin(t1)), complex(math.cos(t2), math.sin(t2))))
    return out


def sample_taus(rng: np.random.Generator, n: int, span: float = 0.9) -> list[float]:
    """Moebius parameters uniform on (-span, span)."""
    return [float(t) for t in rng.uniform(-span, span, n)]
