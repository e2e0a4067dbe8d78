"""Linear vector optimization over a polyhedral ordering cone.

A problem bundles a rational objective matrix M, a feasible polyhedron D in
halfspace form, and an ordering cone K given by outer normals.  The cone may
have a nontrivial lineality space, so "efficient" means: no feasible x makes
M u - M x land in K outside the lineality space of K.  "Weakly efficient"
replaces the punctured cone with the topological interior of K.

The module computes membership tests, scalarization witnesses lying in the
relative interior of the dual cone, the full efficient and weakly efficient
sets as unions of maximal faces of D, and piecewise-linear connectivity
certificates between efficient points.  Everything is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .cone import ConeDecomposition, ConeH, decompose
from .exact import Matrix, Rational, Vector, complement_projector, rat
from .lp import (
    LPStatus,
    argmin_face,
    parametric_breakpoints,
    solve_lp,
)
from .polyhedron import (
    Face,
    HRep,
    VRep,
    active_set,
    contains,
    faces,
    h_to_v,
    map_polyhedron,
)

__all__ = [
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


class InfeasiblePointError(ValueError):
    """The queried point does not belong to the feasible set."""


class NotEfficientError(ValueError):
    """The queried point fails the efficiency precondition."""


class InternalInvariantError(RuntimeError):
    """A self-check on a computed certificate failed."""


class SetKind(enum.Enum):
    EFFICIENT = "efficient"
    WEAKLY_EFFICIENT = "weakly-efficient"


@dataclass(frozen=True)
class VLPProblem:
    """A linear vector optimization problem min_K { M x : x in D }.

    objective:    q x n rational matrix M.
    feasible_set: the polyhedron D, in halfspace form, with dim n.
    cone:         the ordering cone K in R^q, in outer-normal form.
    """

    objective: Matrix
    feasible_set: HRep
    cone: ConeH

    def __post_init__(self):
        q, n = self.objective.shape
        if self.feasible_set.dim != n:
            raise ValueError(
                "objective has %d columns but the feasible set lives in"
                " dimension %d" % (n, self.feasible_set.dim)
            )
        if self.cone.dim != q:
            raise ValueError(
                "objective has %d rows but the cone lives in dimension %d"
                % (q, self.cone.dim)
            )

    @cached_property
    def decomposition(self) -> ConeDecomposition:
        return decompose(self.cone)

    @cached_property
    def projector(self) -> Matrix:
        """Orthogonal projection of R^q onto Y1, the complement of the
        lineality space of K, expressed in ambient coordinates."""
        return complement_projector(self.decomposition.y0_basis, self.cone.dim)

    @cached_property
    def feasible_vrep(self) -> VRep:
        return h_to_v(self.feasible_set)

    @cached_property
    def image_set(self) -> VRep:
        """The projected image (pi . M)(D) in generator form."""
        return map_polyhedron(self.projector.matmul(self.objective), self.feasible_vrep)

    @cached_property
    def cone_interior_empty(self) -> bool:
        return not self.cone.has_nonempty_interior()

    def project_to_y1(self, y: Vector) -> Vector:
        """The unique component of y lying in Y1 along the lineality of K."""
        return self.projector.matvec(y)


@dataclass(frozen=True)
class EfficientSet:
    """A (weakly) efficient set, presented as maximal faces of D.

    subspace_cone is set when K is a linear subspace, in which case the
    efficient set is all of D.  empty_interior is set when K has empty
    topological interior, in which case the weakly efficient set is all of D.
    """

    problem: VLPProblem
    kind: SetKind
    faces: tuple
    subspace_cone: bool
    empty_interior: bool


@dataclass(frozen=True)
class PathCertificate:
    """A piecewise-linear path certificate between two efficient points.

    points:      r points; consecutive pairs are the r - 1 segments.
    weights:     one scalarization weight per segment; the whole segment is
                 optimal for the scalar objective (M^T weight) . x over D.
    breakpoints: the parameter values in [0, 1] where the argmin face of the
                 interpolated scalarization changes.
    """

    points: tuple
    weights: tuple
    breakpoints: tuple


def _require_feasible(P: VLPProblem, u: Vector) -> None:
    if u.dim != P.feasible_set.dim:
        raise InfeasiblePointError("infeasible point")
    if not contains(P.feasible_set, u):
        raise InfeasiblePointError("infeasible point")


def _domination_lp(P: VLPProblem, u: Vector, slack_count: int):
    """Feasibility rows shared by the efficiency tests: variables (x, s) with
    x in D and s the scalarized slack block, one row per cone normal."""
    n = P.feasible_set.dim
    m = len(P.cone.normals)
    M = P.objective
    Mu = M.matvec(u)
    pad = (rat(0),) * slack_count

    eqs = []
    for row, b in P.feasible_set.eq_rows():
        eqs.append((Vector(row.coords + pad), b))
    ineqs = []
    for row, b in P.feasible_set.ineq_rows():
        ineqs.append((Vector(row.coords + pad), b))
    rows = []
    for j, nrm in enumerate(P.cone.normals):
        # <n_j, M u - M x> <= -s_j, linearized over (x, s).
        coeff = M.tmatvec(nrm).scale(rat(-1))
        k = j if slack_count == m else 0
        slack = tuple(rat(1) if i == k else rat(0) for i in range(slack_count))
        rows.append((Vector(coeff.coords + slack), -nrm.dot(Mu)))
    return n, m, eqs, ineqs + rows


def is_efficient(P: VLPProblem, u: Vector) -> bool:
    """Exact efficiency test.

    Maximizes the total slack sum s_j subject to x in D, 0 <= s_j <= 1 and
    <n_j, M u - M x> <= -s_j for every cone normal n_j.  The point u is
    efficient exactly when the optimum is zero: any positive slack exhibits a
    feasible x with M u - M x in K but outside the lineality space of K.
    Raises InfeasiblePointError when u is not in D.
    """
    _require_feasible(P, u)
    m = len(P.cone.normals)
    if m == 0:
        # K is the whole space, hence a subspace: nothing dominates anything.
        return True
    n, m, eqs, ineqs = _domination_lp(P, u, m)
    for j in range(m):
        ej = tuple(rat(1) if i == n + j else rat(0) for i in range(n + m))
        ineqs.append((Vector(ej).scale(rat(-1)), rat(0)))
        ineqs.append((Vector(ej), rat(1)))
    c = Vector((rat(0),) * n + (rat(-1),) * m)
    out = solve_lp(HRep.of(n + m, eqs, ineqs), c)
    if out.status is not LPStatus.OPTIMAL:
        raise InternalInvariantError("slack maximization failed to solve")
    return out.value == 0


def is_weakly_efficient(P: VLPProblem, u: Vector) -> bool:
    """Exact weak efficiency test.

    Maximizes a single slack t with x in D, t <= 1 and
    <n_j, M u - M x> <= -t for every normal.  A positive optimum exhibits x
    with M u - M x interior to K.  When K has empty interior every feasible
    point is weakly efficient and the test short-circuits to True.
    """
    _require_feasible(P, u)
    if P.cone_interior_empty:
        return True
    m = len(P.cone.normals)
    n, m, eqs, ineqs = _domination_lp(P, u, 1)
    t_row = tuple(rat(1) if i == n else rat(0) for i in range(n + 1))
    ineqs.append((Vector(t_row), rat(1)))
    c = Vector((rat(0),) * n + (rat(-1),))
    out = solve_lp(HRep.of(n + 1, eqs, ineqs), c)
    if out.status is not LPStatus.OPTIMAL:
        raise InternalInvariantError("slack maximization failed to solve")
    return out.value == 0


def _relative_interior_point(V: VRep) -> Vector:
    """Mean of the points plus the sum of the rays of a canonical generator
    form; always a relative interior point."""
    s = Vector.zero(V.dim)
    for p in V.points:
        s = s + p
    s = s.scale(rat(1, len(V.points)))
    for r in V.rays:
        s = s + r
    return s


def _verify_argmin(P: VLPProblem, ystar: Vector, u: Vector, label: str) -> None:
    c = P.objective.tmatvec(ystar)
    out = solve_lp(P.feasible_set, c)
    if out.status is not LPStatus.OPTIMAL or c.dot(u) != out.value:
        raise InternalInvariantError(
            "%s does not scalarize its point to an argmin of D" % label
        )


def scalarize_witness(P: VLPProblem, u: Vector) -> Vector:
    """A dual vector y* in the relative interior of K* with u minimizing
    x -> <M^T y*, x> over D.

    The witness is the canonical relative interior point of the polyhedron of
    separating functionals between the shifted image pi(M u) - (pi . M)(D)
    and the pointed part of K, pulled back through the projection onto Y1.
    Raises NotEfficientError when u is not efficient.  The result is
    re-verified before it is returned.
    """
    if not is_efficient(P, u):
        raise NotEfficientError("not efficient")
    dec = P.decomposition
    q = P.cone.dim
    if dec.is_subspace:
        # K* is the annihilator of K, a subspace equal to its own relative
        # interior; the zero functional scalarizes every feasible point.
        ystar = Vector.zero(q)
        _verify_argmin(P, ystar, u, "subspace witness")
        return ystar
    D1 = P.image_set
    target = P.project_to_y1(P.objective.matvec(u))
    eqs = [(w, rat(0)) for w in D1.lineality]
    ineqs = [(target - p, rat(0)) for p in D1.points]
    ineqs += [(r.scale(rat(-1)), rat(0)) for r in D1.rays]
    ineqs += [(r.scale(rat(-1)), rat(-1)) for r in dec.k1_rays]
    region = h_to_v(HRep.of(q, eqs, ineqs))
    if region.is_empty:
        raise InternalInvariantError("no separating functional for an efficient point")
    ystar = P.project_to_y1(_relative_interior_point(region))
    if not dec.ri_dual_contains(ystar):
        raise InternalInvariantError("witness left the relative interior of the dual")
    _verify_argmin(P, ystar, u, "witness")
    return ystar


def weak_witness(P: VLPProblem, u: Vector) -> Vector:
    """A dual vector y* in K* \\ {0} with u minimizing <M^T y*, x> over D,
    certifying weak efficiency.  When K has empty interior the weakly
    efficient set is all of D and the zero weight is returned.
    Raises NotEfficientError when u is not weakly efficient.
    """
    if not is_weakly_efficient(P, u):
        raise NotEfficientError("not weakly efficient")
    q = P.cone.dim
    if P.cone_interior_empty:
        return Vector.zero(q)
    dec = P.decomposition
    gens = dec.dual_generators
    m = len(gens)
    M = P.objective
    geom = P.feasible_vrep
    Mu = M.matvec(u)

    def lam_row(z: Vector) -> Vector:
        return Vector.of([g.dot(z) for g in gens])

    eqs = [(Vector((rat(1),) * m), rat(1))]
    for ell in geom.lineality:
        eqs.append((lam_row(M.matvec(ell)), rat(0)))
    ineqs = []
    for i in range(m):
        ei = tuple(rat(-1) if j == i else rat(0) for j in range(m))
        ineqs.append((Vector(ei), rat(0)))
    for v in geom.points:
        ineqs.append((lam_row(Mu - M.matvec(v)), rat(0)))
    for r in geom.rays:
        ineqs.append((lam_row(M.matvec(r)).scale(rat(-1)), rat(0)))
    region = h_to_v(HRep.of(m, eqs, ineqs))
    if region.is_empty:
        raise InternalInvariantError("no dual weight for a weakly efficient point")
    lam = _relative_interior_point(region)
    ystar = Vector.zero(q)
    for coeff, g in zip(lam.coords, gens):
        ystar = ystar + g.scale(coeff)
    if ystar.is_zero():
        raise InternalInvariantError("weak witness degenerated to zero")
    _verify_argmin(P, ystar, u, "weak witness")
    return ystar


def _whole_set_face(P: VLPProblem) -> Face:
    geom = P.feasible_vrep
    return Face(active_set(P.feasible_set, geom), geom)


def face_scalarizable(P: VLPProblem, face: Face, weak: bool) -> bool:
    """Whether some admissible dual weight scalarizes the whole face into the
    argmin over D.  Strict efficiency draws weights from the relative
    interior of K*; weak efficiency from K* \\ {0} via a normalized conic
    combination of the dual generators."""
    dec = P.decomposition
    M = P.objective
    geom = P.feasible_vrep
    F = face.geometry
    base = F.points[0]
    Mbase = M.matvec(base)

    # Rows are expressed through the products <y*, z>; for the weak variant
    # y* = sum_j lambda_j g_j so each row is transported to lambda space.
    if weak:
        gens = dec.dual_generators

        def row(z: Vector) -> Vector:
            return Vector.of([g.dot(z) for g in gens])

        m = len(gens)
        eqs = [(Vector((rat(1),) * m), rat(1))]
        ineqs = []
        for i in range(m):
            ei = tuple(rat(-1) if j == i else rat(0) for j in range(m))
            ineqs.append((Vector(ei), rat(0)))
    else:

        def row(z: Vector) -> Vector:
            return z

        eqs = [(w, rat(0)) for w in dec.y0_basis]
        ineqs = [(row(r).scale(rat(-1)), rat(-1)) for r in dec.k1_rays]

    for g in F.points[1:]:
        eqs.append((row(M.matvec(g - base)), rat(0)))
    for v in list(F.rays) + list(F.lineality):
        eqs.append((row(M.matvec(v)), rat(0)))
    for r in geom.rays:
        ineqs.append((row(M.matvec(r)).scale(rat(-1)), rat(0)))
    for v in geom.points:
        ineqs.append((row(Mbase - M.matvec(v)), rat(0)))
    dim = len(dec.dual_generators) if weak else P.cone.dim
    return solve_lp(HRep.of(dim, eqs, ineqs), Vector.zero(dim)).status is LPStatus.OPTIMAL


def _maximal(passing: list) -> tuple:
    keep = []
    for f in passing:
        mine = set(f.active_ineq)
        if any(
            g is not f and set(g.active_ineq) < mine
            for g in passing
        ):
            continue
        keep.append(f)
    return tuple(keep)


def efficient_set(P: VLPProblem, max_faces: Optional[int] = None) -> EfficientSet:
    """The efficient set of P as a tuple of maximal faces of D.

    A face belongs to the efficient set exactly when some weight in the
    relative interior of K* scalarizes all of it into the argmin over D; the
    union of such faces is the whole efficient set.  When K is a subspace the
    efficient set is all of D, returned as the single improper face.  An
    infeasible D yields no faces.
    """
    sub = P.decomposition.is_subspace
    eint = P.cone_interior_empty
    if P.feasible_vrep.is_empty:
        return EfficientSet(P, SetKind.EFFICIENT, (), sub, eint)
    if sub:
        return EfficientSet(P, SetKind.EFFICIENT, (_whole_set_face(P),), True, eint)
    passing = [
        f
        for f in faces(P.feasible_set, max_faces=max_faces)
        if face_scalarizable(P, f, weak=False)
    ]
    return EfficientSet(P, SetKind.EFFICIENT, _maximal(passing), False, eint)


def weakly_efficient_set(P: VLPProblem, max_faces: Optional[int] = None) -> EfficientSet:
    """The weakly efficient set of P as a tuple of maximal faces of D.

    Weights come from K* \\ {0}, normalized as convex combinations of the
    dual generators; when the interior of K is empty every feasible point is
    weakly efficient and all of D is returned as the single improper face.
    """
    sub = P.decomposition.is_subspace
    eint = P.cone_interior_empty
    kind = SetKind.WEAKLY_EFFICIENT
    if P.feasible_vrep.is_empty:
        return EfficientSet(P, kind, (), sub, eint)
    if eint:
        return EfficientSet(P, kind, (_whole_set_face(P),), sub, True)
    if not P.cone.normals:
        # K is the whole space, whose interior contains zero: every point is
        # strictly dominated by itself and the weakly efficient set is empty.
        return EfficientSet(P, kind, (), sub, eint)
    passing = [
        f
        for f in faces(P.feasible_set, max_faces=max_faces)
        if face_scalarizable(P, f, weak=True)
    ]
    return EfficientSet(P, kind, _maximal(passing), sub, eint)


def connect(P: VLPProblem, u: Vector, v: Vector, weak: bool = False) -> PathCertificate:
    """A piecewise-linear path from u to v inside the (weakly) efficient set.

    Both endpoints must pass the corresponding efficiency test.  Witnesses
    xi_0 for u and xi_1 for v are interpolated; the breakpoints of
    t -> argmin <M^T xi_t, x> partition [0, 1], and within each interval the
    argmin face is constant.  The chain takes u, then the lexicographically
    smallest argmin vertex of each interval, then v; each surviving segment
    is certified by the weight at the breakpoint where it starts, whose
    argmin face contains both of its endpoints.  Every returned point and
    segment stays inside the efficient set (weakly efficient set when weak).
    """
    test = is_weakly_efficient if weak else is_efficient
    if not test(P, u) or not test(P, v):
        raise NotEfficientError("endpoint not efficient")
    if u == v:
        return PathCertificate((u,), (), (rat(0), rat(1)))
    if weak and P.cone_interior_empty:
        # The weakly efficient set is all of D, which is convex: the straight
        # segment is a valid path and the zero weight scalarizes it trivially.
        return PathCertificate((u, v), (Vector.zero(P.cone.dim),), (rat(0), rat(1)))
    if weak:
        xi0, xi1 = weak_witness(P, u), weak_witness(P, v)
    else:
        xi0, xi1 = scalarize_witness(P, u), scalarize_witness(P, v)

    M = P.objective
    c0, c1 = M.tmatvec(xi0), M.tmatvec(xi1)
    try:
        bps = parametric_breakpoints(c0, c1, P.feasible_set)
    except ValueError as exc:
        raise InternalInvariantError(
            "interpolated scalarizations became unsolvable"
        ) from exc

    def weight_at(t: Rational) -> Vector:
        return xi0 + (xi1 - xi0).scale(t)

    chain = [u]
    for j in range(len(bps) - 1):
        mid = (bps[j] + bps[j + 1]) / 2
        F = h_to_v(argmin_face(P.feasible_set, c0 + (c1 - c0).scale(mid)))
        chain.append(F.points[0])
    chain.append(v)
    seg_weights = [weight_at(t) for t in bps]

    points = [chain[0]]
    weights = []
    for i in range(1, len(chain)):
        if chain[i] == points[-1]:
            continue
        points.append(chain[i])
        weights.append(seg_weights[i - 1])

    for i, w in enumerate(weights):
        c = M.tmatvec(w)
        out = solve_lp(P.feasible_set, c)
        if (
            out.status is not LPStatus.OPTIMAL
            or c.dot(points[i]) != out.value
            or c.dot(points[i + 1]) != out.value
        ):
            raise InternalInvariantError("path segment left its argmin face")
    return PathCertificate(tuple(points), tuple(weights), tuple(bps))
