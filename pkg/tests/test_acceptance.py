"""Acceptance gate: nine exact end-to-end criteria, zero tolerance.

Each criterion is a single test, so a verbose run prints one pass/fail line
per criterion; with -s each passing criterion also prints an explicit
"criterion N ... PASS" line.  All comparisons are exact rational equality.
"""

import itertools
import random
import time

import pytest

from gpolyvlp.cone import ConeH, decompose, ri_generated_cone_contains
from gpolyvlp.crosscheck import (
    dominated_via_generators,
    efficient_via_quotient,
    efficient_via_witness_system,
)
from gpolyvlp.exact import Matrix, Vector, complement_projector, rat, vec
from gpolyvlp.instances import (
    InstanceConfig,
    first_quadrant,
    random_cone,
    random_feasible_hrep,
    random_problem,
    square_constant_row_problem,
    triangle_problem,
)
from gpolyvlp.lp import feasible
from gpolyvlp.polyhedron import HRep, contains, faces, h_to_v, v_to_h, vrep_contains
from gpolyvlp.vlp import (
    connect,
    efficient_set,
    is_efficient,
    is_weakly_efficient,
    weakly_efficient_set,
)


def _report(num: int, name: str) -> None:
    print(f"criterion {num} ({name}): PASS")


@pytest.fixture(scope="module")
def corpus():
    """200 random instances at the criterion-1 size envelope, cone never a
    subspace, feasible set never empty."""
    rng = random.Random(90210)
    cfg = InstanceConfig(
        max_dim=4, max_ineqs=6, max_eqs=1, max_outputs=3, max_normals=3, coeff_bound=3
    )
    return [random_problem(rng, cfg, allow_subspace=False) for _ in range(200)]


def test_criterion_1_scalarization_equivalence(corpus):
    start = time.monotonic()
    verdicts = 0
    for P in corpus:
        for u in P.feasible_vrep.points:
            direct = is_efficient(P, u)
            assert direct == efficient_via_witness_system(P, u)
            assert direct == (not dominated_via_generators(P, u))
            verdicts += 1
    elapsed = time.monotonic() - start
    assert verdicts > 0
    assert elapsed <= 60.0
    _report(1, "scalarization equivalence on %d vertex verdicts" % verdicts)


def test_criterion_2_quotient_reduction(corpus):
    for P in corpus:
        pts = list(P.feasible_vrep.points)
        samples = list(pts)
        for a, b in zip(pts, pts[1:]):
            samples.append((a + b).scale(rat(1, 2)))
        for u in samples:
            assert is_efficient(P, u) == efficient_via_quotient(P, u)
    _report(2, "quotient reduction")


def _cone_corpus(rng, count, with_subspace):
    cones = [
        first_quadrant(),
        ConeH.of(2, [(-1, -1)]),
        ConeH.of(3, [(-1, 0, 0), (0, -1, 0)]),
    ]
    if with_subspace:
        cones.append(ConeH.of(2, [(1, 0), (-1, 0)]))
        cones.append(ConeH.of(3, [(1, 2, 0), (-1, -2, 0)]))
    while len(cones) < count:
        cones.append(random_cone(rng, rng.randint(1, 3), 3, 2))
    return cones


def test_criterion_3_strict_part_decomposition():
    rng = random.Random(777)
    for K in _cone_corpus(rng, 10, with_subspace=True):
        dec = decompose(K)
        proj = complement_projector(dec.y0_basis, K.dim)
        R = dec.k1_rays
        for _ in range(1000):
            y = Vector.of(
                [rat(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(K.dim)]
            )
            k = proj.matvec(y)
            if k.is_zero() or not R:
                decomposable = False
            else:
                eqs = [
                    (Vector.of([r.coords[i] for r in R]), k.coords[i])
                    for i in range(K.dim)
                ]
                nonneg = []
                for j in range(len(R)):
                    e = [rat(0)] * len(R)
                    e[j] = rat(-1)
                    nonneg.append((Vector(tuple(e)), rat(0)))
                decomposable = feasible(HRep.of(len(R), eqs, nonneg))
            assert K.strict_part_contains(y) == decomposable
    _report(3, "strict part matches lineality-plus-pointed decomposition")


def test_criterion_4_dual_relative_interior():
    rng = random.Random(4242)
    for K in _cone_corpus(rng, 8, with_subspace=True):
        dec = decompose(K)
        gens = dec.dual_generators
        for _ in range(1000):
            y = Vector.of(
                [rat(rng.randint(-4, 4), rng.randint(1, 2)) for _ in range(K.dim)]
            )
            assert dec.ri_dual_contains(y) == ri_generated_cone_contains(gens, y)
    _report(4, "dual relative interior routes agree")


def test_criterion_5_interior_implies_strict_part():
    rng = random.Random(55555)
    for K in _cone_corpus(rng, 10, with_subspace=True):
        for _ in range(1000):
            y = Vector.of(
                [rat(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(K.dim)]
            )
            if K.interior_contains(y):
                assert K.strict_part_contains(y)
    quadrant = first_quadrant()
    edge = vec([1, 0])
    assert quadrant.strict_part_contains(edge) and not quadrant.interior_contains(edge)
    _report(5, "interior inside strict part, gap witnessed at (1,0)")


def test_criterion_6_representation_round_trip():
    rng = random.Random(66)
    saw_unbounded = saw_lineality = 0
    for _ in range(100):
        P = random_feasible_hrep(rng, rng.randint(1, 3), max_ineqs=5, max_eqs=1, bound=3)
        V = h_to_v(P)
        W = v_to_h(V)
        V2 = h_to_v(W)
        saw_unbounded += bool(V.rays or V.lineality)
        saw_lineality += bool(V.lineality)
        samples = list(V.points)
        for a, b in zip(V.points, V.points[1:]):
            samples.append((a + b).scale(rat(1, 2)))
        base = V.points[0]
        for r in list(V.rays) + list(V.lineality):
            samples.append(base + r)
        for ell in V.lineality:
            samples.append(base - ell)
        for row, rhs in P.ineq_rows():
            samples.append(row.scale((rhs + 1) / row.dot(row)))
        for s in samples:
            member = contains(P, s)
            assert vrep_contains(V, s) == member
            assert contains(W, s) == member
            assert vrep_contains(V2, s) == member
    assert saw_unbounded > 0 and saw_lineality > 0
    _report(6, "round trips preserve membership on %d polyhedra" % 100)


def test_criterion_7_connectivity_certificates():
    rng = random.Random(5150)
    cfg = InstanceConfig(
        max_dim=3, max_ineqs=5, max_eqs=1, max_outputs=2, max_normals=3, coeff_bound=2
    )
    strict_pairs = weak_pairs = 0
    while strict_pairs < 50:
        P = random_problem(rng, cfg, allow_subspace=False)
        eff = [u for u in P.feasible_vrep.points if is_efficient(P, u)]
        if len(eff) < 2:
            continue
        face_count = len(faces(P.feasible_set))
        for u, v in list(itertools.combinations(eff, 2))[:2]:
            cert = connect(P, u, v)
            assert cert.points[0] == u and cert.points[-1] == v
            assert len(cert.weights) == len(cert.points) - 1
            assert len(cert.points) - 1 <= face_count
            for p in cert.points:
                assert is_efficient(P, p)
            for a, b in zip(cert.points, cert.points[1:]):
                assert is_efficient(P, (a + b).scale(rat(1, 2)))
            strict_pairs += 1
        if weak_pairs < 10:
            u, v = eff[0], eff[-1]
            cert = connect(P, u, v, weak=True)
            assert cert.points[0] == u and cert.points[-1] == v
            for p in cert.points:
                assert is_weakly_efficient(P, p)
            for a, b in zip(cert.points, cert.points[1:]):
                assert is_weakly_efficient(P, (a + b).scale(rat(1, 2)))
            weak_pairs += 1
    assert strict_pairs >= 50 and weak_pairs >= 10
    _report(7, "connectivity certificates for %d strict and %d weak pairs" % (strict_pairs, weak_pairs))


def test_criterion_8_efficient_inside_weakly_efficient():
    rng = random.Random(88)
    cfg = InstanceConfig(
        max_dim=3, max_ineqs=5, max_eqs=1, max_outputs=2, max_normals=3, coeff_bound=2
    )
    for _ in range(40):
        P = random_problem(rng, cfg, allow_subspace=True)
        E = efficient_set(P)
        W = weakly_efficient_set(P)
        for f in E.faces:
            assert any(set(g.active_ineq) <= set(f.active_ineq) for g in W.faces)
            for p in f.geometry.points:
                assert is_weakly_efficient(P, p)
    P = square_constant_row_problem()
    (edge,) = efficient_set(P).faces
    assert edge.active_ineq == (0,)
    assert edge.geometry.points == (vec([0, 0]), vec([0, 1]))
    (whole,) = weakly_efficient_set(P).faces
    assert whole.active_ineq == ()
    assert len(whole.geometry.points) == 4
    _report(8, "efficient set contained in weakly efficient set")


def test_criterion_9_triangle_golden():
    start = time.monotonic()
    P = triangle_problem()
    E = efficient_set(P)
    (face,) = E.faces
    assert face.active_ineq == (0,)
    assert face.geometry.points == (vec([0, 1]), vec([1, 0]))
    assert face.geometry.rays == () and face.geometry.lineality == ()
    cert = connect(P, vec([0, 1]), vec([1, 0]))
    assert cert.points == (vec([0, 1]), vec([1, 0]))
    assert cert.breakpoints == (rat(0), rat(1, 2), rat(1))
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    _report(9, "triangle golden in %.3fs" % elapsed)
