"""Polyhedral convex sets in halfspace and generator form, with exact conversions.

The workhorse is an incremental double description method over exact
rationals.  It maintains a lineality basis next to the extreme-ray list, so
sets with nontrivial lineality (and cones that are whole subspaces) need no
special casing anywhere above this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .exact import (
    Matrix,
    Vector,
    ZERO,
    ONE,
    complement_projector,
    format_rational,
    kernel_basis,
    parse_rational,
    rank,
    rat,
    rref,
)

__all__ = [
    "HRep",
    "VRep",
    "Face",
    "EmptyPolyhedronError",
    "FaceLimitError",
    "dd_cone",
    "h_to_v",
    "v_to_h",
    "contains",
    "vrep_contains",
    "map_polyhedron",
    "relative_interior_contains",
    "faces",
    "assemble_vrep",
    "canonical_vrep",
    "active_set",
]


class EmptyPolyhedronError(ValueError):
    """Raised when an operation needs a nonempty polyhedron."""


class FaceLimitError(RuntimeError):
    """Raised when face enumeration exceeds the configured cap."""


@dataclass(frozen=True)
class HRep:
    """Halfspace representation: eq_lhs x = eq_rhs, ineq_lhs x <= ineq_rhs."""

    dim: int
    eq_lhs: Matrix
    eq_rhs: Vector
    ineq_lhs: Matrix
    ineq_rhs: Vector

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be at least 1")
        if self.eq_lhs.cols != self.dim or self.ineq_lhs.cols != self.dim:
            raise ValueError("constraint row width differs from ambient dimension")
        if self.eq_lhs.rows != self.eq_rhs.dim:
            raise ValueError("equality lhs/rhs row counts differ")
        if self.ineq_lhs.rows != self.ineq_rhs.dim:
            raise ValueError("inequality lhs/rhs row counts differ")

    @staticmethod
    def of(dim: int, eqs: Iterable = (), ineqs: Iterable = ()) -> "HRep":
        """Build from (row, rhs) pairs."""
        eqs = list(eqs)
        ineqs = list(ineqs)
        return HRep(
            dim,
            Matrix.of([list(r) for r, _ in eqs], cols=dim),
            Vector.of([b for _, b in eqs]),
            Matrix.of([list(r) for r, _ in ineqs], cols=dim),
            Vector.of([b for _, b in ineqs]),
        )

    @staticmethod
    def universe(dim: int) -> "HRep":
        return HRep.of(dim)

    @staticmethod
    def infeasible(dim: int) -> "HRep":
        """Canonical empty set: 0 <= -1."""
        return HRep.of(dim, ineqs=[([0] * dim, -1)])

    def eq_rows(self) -> list:
        return [(self.eq_lhs.row(i), self.eq_rhs[i]) for i in range(self.eq_lhs.rows)]

    def ineq_rows(self) -> list:
        return [
            (self.ineq_lhs.row(i), self.ineq_rhs[i]) for i in range(self.ineq_lhs.rows)
        ]

    def with_extra_eqs(self, extra: Iterable) -> "HRep":
        return HRep.of(self.dim, self.eq_rows() + list(extra), self.ineq_rows())

    def to_json_obj(self) -> dict:
        def rows(m: Matrix):
            return [[format_rational(v) for v in row] for row in m.entries]

        return {
            "dim": self.dim,
            "eq": [rows(self.eq_lhs), [format_rational(v) for v in self.eq_rhs]],
            "ineq": [rows(self.ineq_lhs), [format_rational(v) for v in self.ineq_rhs]],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "HRep":
        if not isinstance(obj, dict):
            raise ValueError("polyhedron must be a JSON object")
        dim = obj.get("dim")
        if not isinstance(dim, int) or dim < 1:
            raise ValueError("dim must be a positive integer")

        def block(name):
            pair = obj.get(name, [[], []])
            if not isinstance(pair, list) or len(pair) != 2:
                raise ValueError(f"{name} must be a [rows, rhs] pair")
            lhs_raw, rhs_raw = pair
            lhs = [
                [parse_rational(v) for v in _as_list(row, f"{name} row")]
                for row in _as_list(lhs_raw, f"{name} rows")
            ]
            rhs = [parse_rational(v) for v in _as_list(rhs_raw, f"{name} rhs")]
            if len(lhs) != len(rhs):
                raise ValueError(f"{name} lhs/rhs row counts differ")
            if any(len(r) != dim for r in lhs):
                raise ValueError(f"{name} row width differs from dim")
            return Matrix.of(lhs, cols=dim), Vector.of(rhs)

        eq_lhs, eq_rhs = block("eq")
        ineq_lhs, ineq_rhs = block("ineq")
        return HRep(dim, eq_lhs, eq_rhs, ineq_lhs, ineq_rhs)


def _as_list(value, what: str) -> list:
    if not isinstance(value, list):
        raise ValueError(f"{what} must be a JSON array")
    return value


@dataclass(frozen=True)
class VRep:
    """Generator representation: conv(points) + cone(rays) + span(lineality).

    Canonical objects keep points and rays orthogonal to the lineality span,
    rays scaled so the first nonzero coordinate is +-1, generators sorted,
    and the lineality basis in reduced echelon form.  The represented set is
    empty iff points is empty, in which case rays and lineality are empty too.
    """

    dim: int
    points: tuple
    rays: tuple
    lineality: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be at least 1")
        for g in self.points + self.rays + self.lineality:
            if g.dim != self.dim:
                raise ValueError("generator dimension differs from ambient dimension")
        for g in self.rays + self.lineality:
            if g.is_zero():
                raise ValueError("zero vector is not a valid ray or lineality generator")
        if not self.points and (self.rays or self.lineality):
            raise ValueError("an empty set carries no rays or lineality")
        if self.lineality:
            m = Matrix.from_rows(list(self.lineality), cols=self.dim)
            if rank(m) != len(self.lineality):
                raise ValueError("lineality vectors must be linearly independent")

    @staticmethod
    def empty(dim: int) -> "VRep":
        return VRep(dim, (), (), ())

    @property
    def is_empty(self) -> bool:
        return not self.points

    def generators(self) -> list:
        return list(self.points) + list(self.rays) + list(self.lineality)

    def to_json_obj(self) -> dict:
        def grp(vs):
            return [[format_rational(c) for c in v] for v in vs]

        return {
            "dim": self.dim,
            "points": grp(self.points),
            "rays": grp(self.rays),
            "lineality": grp(self.lineality),
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "VRep":
        if not isinstance(obj, dict):
            raise ValueError("generator form must be a JSON object")
        dim = obj.get("dim")
        if not isinstance(dim, int) or dim < 1:
            raise ValueError("dim must be a positive integer")

        def grp(name):
            return [
                Vector.of([parse_rational(c) for c in _as_list(row, f"{name} vector")])
                for row in _as_list(obj.get(name, []), name)
            ]

        return VRep(dim, tuple(grp("points")), tuple(grp("rays")), tuple(grp("lineality")))


@dataclass(frozen=True)
class Face:
    """A nonempty face of an HRep, tagged by its maximal active inequality set."""

    active_ineq: tuple
    geometry: VRep


# ---------------------------------------------------------------------------
# double description


def dd_cone(dim: int, eq_rows: Sequence[Vector], ineq_rows: Sequence[Vector]):
    """Generators of the cone {z : e.z = 0 for all e, a.z <= 0 for all a}.

    Returns (lineality_basis, extreme_rays), the rays canonical modulo the
    lineality span: orthogonal to it, scaled to a +-1 leading coordinate,
    deduplicated and sorted.  Inequalities are inserted incrementally; when a
    new row cuts the current lineality space one basis vector turns into a
    ray and everything else is projected onto the row's hyperplane, otherwise
    the classic step combines adjacent rays across the hyperplane.  Adjacency
    uses the algebraic rank condition on the commonly tight rows.
    """
    for r in list(eq_rows) + list(ineq_rows):
        if r.dim != dim:
            raise ValueError("constraint row dimension mismatch")
    eq_base = [list(e.coords) for e in eq_rows]
    L = kernel_basis(Matrix.from_rows(list(eq_rows), cols=dim))
    rays: list = []
    prods: list = []  # prods[k][i] = processed[i] . rays[k]
    processed: list = []

    for a in ineq_rows:
        if a.is_zero():
            for p in prods:
                p.append(ZERO)
            processed.append(a)
            continue

        chosen = None
        for idx, l in enumerate(L):
            d = a.dot(l)
            if d != 0:
                chosen = (idx, d)
                break
        if chosen is not None:
            # the row cuts the lineality space: one basis vector becomes a ray
            idx, d = chosen
            l0 = L.pop(idx)
            r0 = l0 if d < 0 else -l0
            d0 = a.dot(r0)
            L = [
                l - r0.scale(a.dot(l) / d0) if a.dot(l) != 0 else l
                for l in L
            ]
            new_rays, new_prods = [], []
            for r, pr in zip(rays, prods):
                dr = a.dot(r)
                if dr != 0:
                    # processed rows vanish on l0, so products are unchanged
                    r = r - r0.scale(dr / d0)
                new_rays.append(r)
                new_prods.append(pr + [ZERO])
            new_rays.append(r0)
            new_prods.append([ZERO] * len(processed) + [d0])
            processed.append(a)
            rays, prods = _reduce_mod_lineality(new_rays, new_prods, L, dim)
            continue

        vals = [a.dot(r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        if not pos:
            for k, p in enumerate(prods):
                p.append(vals[k])
            processed.append(a)
            continue
        neg = [k for k, v in enumerate(vals) if v < 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        target = dim - len(L) - 2
        rank_memo: dict = {}
        combos = []
        for p in pos:
            for n in neg:
                common = tuple(
                    i
                    for i in range(len(processed))
                    if prods[p][i] == 0 and prods[n][i] == 0
                )
                got = rank_memo.get(common)
                if got is None:
                    rows = eq_base + [list(processed[i].coords) for i in common]
                    got = rank(Matrix.of(rows, cols=dim))
                    rank_memo[common] = got
                if got != target:
                    continue
                r_new = rays[n].scale(vals[p]) - rays[p].scale(vals[n])
                pr_new = [
                    vals[p] * prods[n][i] - vals[n] * prods[p][i]
                    for i in range(len(processed))
                ]
                combos.append(_normalize_pair(r_new, pr_new + [ZERO]))
        kept = sorted(neg + zero)
        rays2 = [rays[k] for k in kept]
        prods2 = [prods[k] + [vals[k]] for k in kept]
        for r_new, pr_new in combos:
            rays2.append(r_new)
            prods2.append(pr_new)
        processed.append(a)
        rays, prods = _dedupe(rays2, prods2)

    basis = rref(Matrix.from_rows(L, cols=dim)).row_vectors() if L else []
    out_rays = sorted(rays, key=lambda r: r.coords)
    for r in out_rays:
        for e in eq_rows:
            if e.dot(r) != 0:
                raise RuntimeError("generator violates an equality row")
        for a in ineq_rows:
            if a.dot(r) > 0:
                raise RuntimeError("generator violates an inequality row")
    return basis, out_rays


def _normalize_pair(r: Vector, pr: list):
    i = r.first_nonzero()
    if i is None:
        raise RuntimeError("zero vector produced as an extreme ray")
    lead = r.coords[i]
    f = 1 / (lead if lead > 0 else -lead)
    if f == 1:
        return r, pr
    return r.scale(f), [f * v for v in pr]


def _dedupe(rays: list, prods: list):
    seen = set()
    out_r, out_p = [], []
    for r, p in zip(rays, prods):
        if r.coords in seen:
            continue
        seen.add(r.coords)
        out_r.append(r)
        out_p.append(p)
    return out_r, out_p


def _reduce_mod_lineality(rays: list, prods: list, L: list, dim: int):
    """Project rays orthogonal to span(L) and normalize; products survive
    because every processed row vanishes on the lineality span."""
    if L:
        proj = complement_projector(L, dim)
        rays = [proj.matvec(r) for r in rays]
    pairs = [_normalize_pair(r, p) for r, p in zip(rays, prods)]
    return _dedupe([r for r, _ in pairs], [p for _, p in pairs])


# ---------------------------------------------------------------------------
# conversions


def _lift(v: Vector, last) -> Vector:
    return Vector(v.coords + (rat(last),))


def _drop_last(v: Vector) -> Vector:
    return Vector(v.coords[:-1])


def assemble_vrep(dim: int, points: list, rays: list, lineality: list) -> VRep:
    """Light canonical assembly: echelon lineality basis, generators projected
    orthogonal to it, rays normalized, duplicates dropped, everything sorted.
    Does not remove hull-redundant generators; see canonical_vrep for that."""
    basis = (
        rref(Matrix.from_rows(lineality, cols=dim)).row_vectors() if lineality else []
    )
    proj = complement_projector(basis, dim) if basis else None
    pts = [proj.matvec(p) if proj else p for p in points]
    rs = []
    for r in rays:
        if proj:
            r = proj.matvec(r)
        if r.is_zero():
            continue
        rs.append(r.normalized_direction())
    pts = sorted(set(p.coords for p in pts))
    rs = sorted(set(r.coords for r in rs))
    return VRep(
        dim,
        tuple(Vector(p) for p in pts),
        tuple(Vector(r) for r in rs),
        tuple(basis),
    )


def h_to_v(P: HRep) -> VRep:
    """Generator form of an HRep via double description on the homogenization."""
    d = P.dim
    eq_lift = [_lift(row, -b) for row, b in P.eq_rows()]
    t_row = Vector((ZERO,) * d + (-ONE,))
    ineq_lift = [t_row] + [_lift(row, -b) for row, b in P.ineq_rows()]
    lin, rays = dd_cone(d + 1, eq_lift, ineq_lift)
    points, free_rays = [], []
    for r in rays:
        t = r.coords[-1]
        if t > 0:
            points.append(_drop_last(r).scale(1 / t))
        else:
            # t < 0 is impossible: the homogenization row forbids it
            free_rays.append(_drop_last(r))
    if not points:
        return VRep.empty(d)
    lineality = []
    for l in lin:
        if l.coords[-1] != 0:
            raise RuntimeError("homogenization lineality leaked a nonzero last coordinate")
        lineality.append(_drop_last(l))
    return assemble_vrep(d, points, free_rays, lineality)


def v_to_h(V: VRep) -> HRep:
    """Halfspace form of a VRep via double description of the polar cone.

    Implicit equalities surface as the polar's lineality, so the inequality
    rows returned are exactly the facets; rows supported only at infinity are
    recognized by never being tight at an input point and dropped.
    """
    d = V.dim
    if V.is_empty:
        return HRep.infeasible(d)
    polar_eqs = [_lift(w, 0) for w in V.lineality]
    polar_ineqs = [_lift(u, 1) for u in V.points] + [_lift(r, 0) for r in V.rays]
    lin, rays = dd_cone(d + 1, polar_eqs, polar_ineqs)

    eq_aug = []
    for s in lin:
        eq_aug.append(list(s.coords[:-1]) + [-s.coords[-1]])
    eq_vecs: list = []  # augmented (lhs | rhs) rows in echelon form
    if eq_aug:
        for row in rref(Matrix.of(eq_aug, cols=d + 1)).row_vectors():
            if Vector(row.coords[:-1]).is_zero():
                raise RuntimeError("inconsistent implicit equalities for a nonempty set")
            eq_vecs.append(row)
    eq_rows = [(Vector(r.coords[:-1]), r.coords[-1]) for r in eq_vecs]

    ineq_rows = []
    for g in rays:
        y = Vector(g.coords[:-1])
        eta = g.coords[-1]
        if y.is_zero():
            continue
        if not any(y.dot(u) + eta == 0 for u in V.points):
            continue  # supporting only the recession part, no facet of the set
        # reduce modulo the equality rows so pivot coordinates drop out,
        # then scale to a +-1 leading coefficient
        aug = Vector(y.coords + (-eta,))
        for e in eq_vecs:
            c = aug.coords[e.first_nonzero()]
            if c != 0:
                aug = aug - e.scale(c)
        lhs = Vector(aug.coords[:-1])
        i = lhs.first_nonzero()
        if i is None:
            raise RuntimeError("facet row vanished modulo the equality rows")
        lead = lhs.coords[i]
        f = 1 / (lead if lead > 0 else -lead)
        ineq_rows.append((lhs.scale(f), aug.coords[-1] * f))
    ineq_rows.sort(key=lambda rb: (rb[0].coords, rb[1]))
    return HRep.of(d, eq_rows, ineq_rows)


def canonical_vrep(V: VRep) -> VRep:
    """Fully canonical, irredundant generator form of the same set."""
    return h_to_v(v_to_h(V))


def contains(P: HRep, x: Vector) -> bool:
    """Membership in an HRep."""
    if x.dim != P.dim:
        raise ValueError("point dimension differs from ambient dimension")
    for row, b in P.eq_rows():
        if row.dot(x) != b:
            return False
    for row, b in P.ineq_rows():
        if row.dot(x) > b:
            return False
    return True


def vrep_contains(V: VRep, x: Vector) -> bool:
    """Membership in a VRep, by converting to halfspace form."""
    if x.dim != V.dim:
        raise ValueError("point dimension differs from ambient dimension")
    if V.is_empty:
        return False
    return contains(v_to_h(V), x)


def map_polyhedron(T: Matrix, V: VRep) -> VRep:
    """Image of a VRep under a linear map, re-canonicalized."""
    if T.cols != V.dim:
        raise ValueError("map width differs from ambient dimension")
    if T.rows < 1:
        raise ValueError("map must have a positive target dimension")
    if V.is_empty:
        return VRep.empty(T.rows)
    pts = [T.matvec(p) for p in V.points]
    rays = [w for w in (T.matvec(r) for r in V.rays) if not w.is_zero()]
    lin = [w for w in (T.matvec(l) for l in V.lineality) if not w.is_zero()]
    return canonical_vrep(assemble_vrep(T.rows, pts, rays, lin))


def relative_interior_contains(V: VRep, x: Vector) -> bool:
    """Membership in the relative interior: on the affine hull and strictly
    inside every facet inequality."""
    if x.dim != V.dim:
        raise ValueError("point dimension differs from ambient dimension")
    if V.is_empty:
        return False
    H = v_to_h(V)
    for row, b in H.eq_rows():
        if row.dot(x) != b:
            return False
    for row, b in H.ineq_rows():
        if row.dot(x) >= b:
            return False
    return True


def active_set(P: HRep, geom: VRep) -> tuple:
    """Indices of the inequality rows tight on the whole of geom."""
    out = []
    for i, (row, b) in enumerate(P.ineq_rows()):
        if all(row.dot(p) == b for p in geom.points) and all(
            row.dot(g) == 0 for g in list(geom.rays) + list(geom.lineality)
        ):
            out.append(i)
    return tuple(out)


def faces(P: HRep, max_faces: Optional[int] = None) -> list:
    """All nonempty faces of P, each tagged by its maximal active set.

    Lattice search: children append one more inequality as an equality, the
    discovered geometry is re-tagged with every inequality tight on it, and
    duplicates merge on that canonical tag.  Exponential in the number of
    inequalities in the worst case; intended for small systems (roughly 20
    inequalities or fewer), with max_faces as a hard stop.
    """
    geom = h_to_v(P)
    if geom.is_empty:
        raise EmptyPolyhedronError("empty polyhedron")
    m = P.ineq_lhs.rows
    ineqs = P.ineq_rows()
    root = active_set(P, geom)
    found = {root: geom}
    tried = {root}
    frontier = [root]
    while frontier:
        nxt = []
        for S in frontier:
            s_set = set(S)
            for i in range(m):
                if i in s_set:
                    continue
                tentative = tuple(sorted(s_set | {i}))
                if tentative in tried:
                    continue
                tried.add(tentative)
                sub = P.with_extra_eqs([ineqs[j] for j in tentative])
                g = h_to_v(sub)
                if g.is_empty:
                    continue
                canon = active_set(P, g)
                tried.add(canon)
                if canon not in found:
                    found[canon] = g
                    if max_faces is not None and len(found) > max_faces:
                        raise FaceLimitError(
                            f"face enumeration exceeded the cap of {max_faces}"
                        )
                    nxt.append(canon)
        frontier = nxt
    return [Face(active, found[active]) for active in sorted(found)]
