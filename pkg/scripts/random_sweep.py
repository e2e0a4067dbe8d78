#!/usr/bin/env python3
"""Randomized cross-validation sweep over generated problem instances.

For every instance the script decides efficiency of a handful of feasible
vertices along four independent routes: the direct membership program, the
generator-based domination program, the quotient reduction, and the
minimal-face witness system.  It stops at the first disagreement.  On a
configurable subset of instances it also recomputes the full efficient and
weakly efficient sets and checks that every efficient face sits inside some
weakly efficient face.  All arithmetic is exact, so a clean run certifies
thousands of zero-tolerance agreements.

Usage:
    python3 scripts/random_sweep.py --count 200 --seed 90210
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from gpolyvlp.crosscheck import (
    dominated_via_generators,
    efficient_via_quotient,
    efficient_via_witness_system,
)
from gpolyvlp.instances import InstanceConfig, random_problem
from gpolyvlp.vlp import (
    efficient_set,
    is_efficient,
    is_weakly_efficient,
    weakly_efficient_set,
)


def parse_args(argv=None) -> argparse.Namespace:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200, help="instances to generate")
    ap.add_argument("--seed", type=int, default=90210, help="random seed")
    ap.add_argument("--max-dim", type=int, default=4)
    ap.add_argument("--max-ineqs", type=int, default=6)
    ap.add_argument("--max-eqs", type=int, default=1)
    ap.add_argument("--max-outputs", type=int, default=3)
    ap.add_argument("--max-normals", type=int, default=3)
    ap.add_argument("--coeff-bound", type=int, default=3)
    ap.add_argument(
        "--vertices", type=int, default=4, help="vertices cross-checked per instance"
    )
    ap.add_argument(
        "--sets-every",
        type=int,
        default=10,
        help="recompute the full solution sets on every Nth instance",
    )
    ap.add_argument(
        "--allow-subspace",
        action="store_true",
        help="also draw ordering cones that are linear subspaces",
    )
    return ap.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    config = InstanceConfig(
        max_dim=args.max_dim,
        max_ineqs=args.max_ineqs,
        max_eqs=args.max_eqs,
        max_outputs=args.max_outputs,
        max_normals=args.max_normals,
        coeff_bound=args.coeff_bound,
    )
    rng = random.Random(args.seed)
    verdicts = efficient = sets_checked = 0
    t0 = time.perf_counter()
    for i in range(args.count):
        P = random_problem(rng, config, allow_subspace=args.allow_subspace)
        for u in P.feasible_vrep.points[: args.vertices]:
            routes = {
                "membership": is_efficient(P, u),
                "generators": not dominated_via_generators(P, u),
                "quotient": efficient_via_quotient(P, u),
                "witness": efficient_via_witness_system(P, u),
            }
            if len(set(routes.values())) != 1:
                print(
                    f"disagreement on instance {i} at {u}: {routes}",
                    file=sys.stderr,
                )
                return 1
            verdict = routes["membership"]
            if verdict and not is_weakly_efficient(P, u):
                print(
                    f"efficient vertex {u} of instance {i} not weakly efficient",
                    file=sys.stderr,
                )
                return 1
            verdicts += 1
            efficient += verdict
        if args.sets_every > 0 and i % args.sets_every == 0:
            E = efficient_set(P)
            W = weakly_efficient_set(P)
            weak_actives = [set(f.active_ineq) for f in W.faces]
            for f in E.faces:
                if not any(a <= set(f.active_ineq) for a in weak_actives):
                    print(
                        f"efficient face {f.active_ineq} of instance {i} "
                        "escapes the weakly efficient set",
                        file=sys.stderr,
                    )
                    return 1
            sets_checked += 1
    elapsed = time.perf_counter() - t0
    print(
        f"{args.count} instances, {verdicts} vertex verdicts "
        f"({efficient} efficient) agree on all four routes, "
        f"{sets_checked} set containments verified, {elapsed:.1f}s"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
