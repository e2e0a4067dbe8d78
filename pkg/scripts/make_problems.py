#!/usr/bin/env python3
"""Regenerate the JSON problem files under problems/.

Each file is a complete CLI input: an objective matrix, a feasible set in
halfspace form, and an ordering cone given by outer normals.  Rerunning the
script is idempotent; it exists so the shipped instances stay reproducible
from the library constructors instead of being hand-maintained blobs.

Usage:
    python3 scripts/make_problems.py [--out-dir problems]
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys

from gpolyvlp.cone import ConeH
from gpolyvlp.exact import Matrix, format_rational
from gpolyvlp.instances import square_constant_row_problem, triangle_problem
from gpolyvlp.polyhedron import HRep
from gpolyvlp.vlp import VLPProblem


def halfplane_lineality_problem() -> VLPProblem:
    """Identity objective on the halfplane x1 >= 0 under the first quadrant.

    The feasible set has lineality direction (0, 1), so nothing is efficient
    but the boundary edge is weakly efficient."""
    D = HRep.of(2, ineqs=[((-1, 0), 0)])
    return VLPProblem(Matrix.identity(2), D, ConeH.of(2, [(-1, 0), (0, -1)]))


def subspace_cone_problem() -> VLPProblem:
    """Identity objective on the unit square ordered by the subspace y1 = 0.

    The cone equals its own lineality space, so every feasible point is
    efficient and no point is weakly efficient."""
    D = HRep.of(2, ineqs=[((-1, 0), 0), ((0, -1), 0), ((1, 0), 1), ((0, 1), 1)])
    return VLPProblem(Matrix.identity(2), D, ConeH.of(2, [(1, 0), (-1, 0)]))


PROBLEMS = {
    "triangle": triangle_problem,
    "square_constant_row": square_constant_row_problem,
    "halfplane_lineality": halfplane_lineality_problem,
    "subspace_cone": subspace_cone_problem,
}


def problem_json_obj(P: VLPProblem) -> dict:
    return {
        "version": "1",
        "M": [
            [format_rational(x) for x in P.objective.row(i)]
            for i in range(P.objective.shape[0])
        ],
        "D": P.feasible_set.to_json_obj(),
        "K": P.cone.to_json_obj(),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="problems", help="directory to write into")
    args = ap.parse_args(argv)
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, build in sorted(PROBLEMS.items()):
        path = out / f"{name}.json"
        path.write_text(json.dumps(problem_json_obj(build()), indent=2) + "\n")
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
