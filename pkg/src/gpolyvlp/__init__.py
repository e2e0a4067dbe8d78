"""Exact rational tools for linear vector optimization over polyhedral cones.

The package computes efficient and weakly efficient solution sets of linear
vector optimization problems whose ordering cone is an arbitrary polyhedral
convex cone, possibly with a nontrivial lineality space.  Everything runs
over exact rational arithmetic: polyhedra convert losslessly between
halfspace and generator form, scalarization weights are certified to lie in
the relative interior of the dual cone, and connectivity between efficient
points is returned as an explicit piecewise-linear certificate.

The flat namespace re-exports the working vocabulary; the submodules hold
the rest (exact kernels, polyhedral calculus, the simplex core, cone
decomposition, the vector problem layer, and independent cross-checks).
"""

from .cone import ConeDecomposition, ConeH, decompose, ri_generated_cone_contains
from .exact import Matrix, Rational, Vector, mat, rat, vec
from .lp import LPOutcome, LPStatus, argmin_face, feasible, parametric_breakpoints, solve_lp
from .polyhedron import (
    EmptyPolyhedronError,
    Face,
    FaceLimitError,
    HRep,
    VRep,
    contains,
    faces,
    h_to_v,
    map_polyhedron,
    relative_interior_contains,
    v_to_h,
    vrep_contains,
)
from .vlp import (
    EfficientSet,
    InfeasiblePointError,
    InternalInvariantError,
    NotEfficientError,
    PathCertificate,
    SetKind,
    VLPProblem,
    connect,
    efficient_set,
    face_scalarizable,
    is_efficient,
    is_weakly_efficient,
    scalarize_witness,
    weak_witness,
    weakly_efficient_set,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Rational",
    "Vector",
    "Matrix",
    "rat",
    "vec",
    "mat",
    "HRep",
    "VRep",
    "Face",
    "EmptyPolyhedronError",
    "FaceLimitError",
    "h_to_v",
    "v_to_h",
    "contains",
    "vrep_contains",
    "relative_interior_contains",
    "map_polyhedron",
    "faces",
    "LPStatus",
    "LPOutcome",
    "solve_lp",
    "feasible",
    "argmin_face",
    "parametric_breakpoints",
    "ConeH",
    "ConeDecomposition",
    "decompose",
    "ri_generated_cone_contains",
    "SetKind",
    "VLPProblem",
    "EfficientSet",
    "PathCertificate",
    "InfeasiblePointError",
    "NotEfficientError",
    "InternalInvariantError",
    "is_efficient",
    "is_weakly_efficient",
    "scalarize_witness",
    "weak_witness",
    "efficient_set",
    "weakly_efficient_set",
    "face_scalarizable",
    "connect",
]
