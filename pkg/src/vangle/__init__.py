"""Visual angle metric on the upper half plane.

The visual angle between two points a, b in the upper half plane is the
largest angle under which the pair is seen from a point on the real axis.
This package computes it in closed form, builds the associated point
catalog (geodesic endpoints, tangency points, chord crossings), relates it
to the hyperbolic and chordal metrics, and evaluates the special-function
stack (mu, phi_K, eta_K, lambda) behind its distortion bounds.
"""

from .distortion import (
    IdentityCheck,
    elliptic_k,
    eta_k,
    eta_k_alt,
    gamma2,
    holder_rhs,
    lambda_k,
    mu,
    mu_inv,
    phi_eta_identity,
    phi_k,
)
from .errors import (
    CoincidentPoints,
    CollinearPoints,
    DegeneratePair,
    DegenerateTuple,
    EqualHeights,
    GeometryError,
    NotInHalfPlane,
    OutOfRange,
    OutsideDisk,
    ParallelLines,
    ParseError,
    PoleInput,
    UnitViolation,
    UnknownFigure,
    UnknownSuite,
    VerticalGeodesicError,
)
from .figures import figure_data
from .geom import (
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
from .hyperbolic import (
    GeodesicData,
    NormalizedPair,
    VerticalGeodesic,
    geodesic_endpoints,
    half_plane_mobius,
    half_point,
    hyp_midpoint,
    require_half_plane,
    rho_disk,
    rho_half_plane,
    rho_via_cross_ratio,
    similarity_through_pair,
    similarity_to_unit,
)
from .verify import CheckResult, VerifyReport, run_suite, run_suites
from .visual import (
    Branch,
    PointCatalog,
    VisualAngleResult,
    catalog_constructed,
    catalog_general,
    catalog_unit,
    sin_identity_rhs,
    vhquot_ratio,
    visual_angle,
    visual_angle_bounds,
    visual_angle_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Branch",
    "CheckResult",
    "Circle",
    "CoincidentPoints",
    "CollinearPoints",
    "DegeneratePair",
    "DegenerateTuple",
    "EqualHeights",
    "GeodesicData",
    "GeometryError",
    "IdentityCheck",
    "INFINITY",
    "NormalizedPair",
    "NotInHalfPlane",
    "OutOfRange",
    "OutsideDisk",
    "ParallelLines",
    "ParseError",
    "PointCatalog",
    "PoleInput",
    "UnitViolation",
    "UnknownFigure",
    "UnknownSuite",
    "VerifyReport",
    "VerticalGeodesic",
    "VerticalGeodesicError",
    "VisualAngleResult",
    "catalog_constructed",
    "catalog_general",
    "catalog_unit",
    "chord_second_intersection",
    "chordal",
    "circumcenter",
    "cross_ratio",
    "disk_automorphism",
    "elliptic_k",
    "eta_k",
    "eta_k_alt",
    "figure_data",
    "gamma2",
    "geodesic_endpoints",
    "half_plane_mobius",
    "half_point",
    "holder_rhs",
    "hyp_midpoint",
    "invert_in_circle",
    "lambda_k",
    "lis",
    "mu",
    "mu_inv",
    "phi_eta_identity",
    "phi_k",
    "reflect_in_line",
    "require_half_plane",
    "rho_disk",
    "rho_half_plane",
    "rho_via_cross_ratio",
    "run_suite",
    "run_suites",
    "sgn",
    "similarity_through_pair",
    "similarity_to_unit",
    "sin_identity_rhs",
    "vertex_angle",
    "vhquot_ratio",
    "visual_angle",
    "visual_angle_bounds",
    "visual_angle_oracle",
]
