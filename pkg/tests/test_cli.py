"""End-to-end tests for the command line interface."""

import json
import subprocess
import sys

import pytest

from gpolyvlp.cli import main
from gpolyvlp.exact import format_rational, parse_rational

TRIANGLE = {
    "version": "1",
    "M": [["1", "0"], ["0", "1"]],
    "D": {
        "dim": 2,
        "ineq": [[["-1", "-1"], ["1", "0"], ["0", "1"]], ["-1", "1", "1"]],
    },
    "K": {"dim": 2, "normals": [["-1", "0"], ["0", "-1"]]},
}

SQUARE_CONSTANT = {
    "version": "1",
    "M": [["1", "0"], ["0", "0"]],
    "D": {
        "dim": 2,
        "ineq": [
            [["-1", "0"], ["0", "-1"], ["1", "0"], ["0", "1"]],
            ["0", "0", "1", "1"],
        ],
    },
    "K": {"dim": 2, "normals": [["-1", "0"], ["0", "-1"]]},
}


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps(TRIANGLE))
    return str(path)


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps(SQUARE_CONSTANT))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_triangle_efficient_face(self, triangle_file, capsys):
        code, out, err = run(capsys, "solve", "--problem", triangle_file)
        assert code == 0 and err == ""
        obj = json.loads(out)
        assert obj["kind"] == "efficient"
        assert not obj["subspace_cone"] and not obj["empty_interior"]
        (face,) = obj["faces"]
        assert face["active_ineq"] == [0]
        assert face["vrep"]["points"] == [["0", "1"], ["1", "0"]]

    def test_weak_kind_covers_square(self, square_file, capsys):
        code, out, _ = run(capsys, "solve", "--problem", square_file, "--kind", "weak")
        assert code == 0
        obj = json.loads(out)
        assert obj["kind"] == "weak"
        (face,) = obj["faces"]
        assert face["active_ineq"] == []
        assert len(face["vrep"]["points"]) == 4

    def test_out_flag_writes_file(self, triangle_file, tmp_path, capsys):
        target = tmp_path / "result.json"
        code, out, _ = run(
            capsys, "solve", "--problem", triangle_file, "--out", str(target)
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["kind"] == "efficient"

    def test_infeasible_problem_yields_empty_faces(self, tmp_path, capsys):
        obj = dict(TRIANGLE)
        obj["D"] = {"dim": 1, "ineq": [[["1"], ["-1"]], ["-1", "0"]]}
        obj["M"] = [["1"]]
        obj["K"] = {"dim": 1, "normals": [["-1"]]}
        path = tmp_path / "empty.json"
        path.write_text(json.dumps(obj))
        code, out, _ = run(capsys, "solve", "--problem", str(path))
        assert code == 0
        assert json.loads(out)["faces"] == []

    def test_rational_strings_round_trip(self, triangle_file, capsys):
        code, out, _ = run(capsys, "solve", "--problem", triangle_file)
        assert code == 0
        obj = json.loads(out)
        for face in obj["faces"]:
            for group in ("points", "rays", "lineality"):
                for row in face["vrep"][group]:
                    assert [format_rational(parse_rational(s)) for s in row] == row

    def test_face_cap_aborts_with_exit_4(self, triangle_file, capsys, monkeypatch):
        monkeypatch.setenv("GPOLY_MAX_FACES", "1")
        code, out, err = run(capsys, "solve", "--problem", triangle_file)
        assert code == 4 and out == ""
        assert "face" in err

    def test_bad_face_cap_is_a_usage_error(self, triangle_file, capsys, monkeypatch):
        monkeypatch.setenv("GPOLY_MAX_FACES", "many")
        code, _, err = run(capsys, "solve", "--problem", triangle_file)
        assert code == 2
        assert "GPOLY_MAX_FACES" in err


class TestProblemParsing:
    def test_malformed_rational_is_located(self, tmp_path, capsys):
        obj = json.loads(json.dumps(TRIANGLE))
        obj["M"][0][1] = "1/0"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(obj))
        code, out, err = run(capsys, "solve", "--problem", str(path))
        assert code == 2 and out == ""
        assert "$.M[0][1]" in err

    def test_bad_polyhedron_entry_is_located_to_section(self, tmp_path, capsys):
        obj = json.loads(json.dumps(TRIANGLE))
        obj["D"]["ineq"][0][0][0] = "0.5"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(obj))
        code, _, err = run(capsys, "solve", "--problem", str(path))
        assert code == 2
        assert "$.D" in err

    def test_missing_version_is_rejected(self, tmp_path, capsys):
        obj = json.loads(json.dumps(TRIANGLE))
        del obj["version"]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(obj))
        code, _, err = run(capsys, "solve", "--problem", str(path))
        assert code == 2 and "$.version" in err

    def test_unsupported_version_is_rejected(self, tmp_path, capsys):
        obj = json.loads(json.dumps(TRIANGLE))
        obj["version"] = "99"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(obj))
        code, _, err = run(capsys, "solve", "--problem", str(path))
        assert code == 2 and "version" in err

    def test_dimension_mismatch_is_rejected(self, tmp_path, capsys):
        obj = json.loads(json.dumps(TRIANGLE))
        obj["K"]["dim"] = 3
        obj["K"]["normals"] = [["-1", "0", "0"]]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(obj))
        code, _, err = run(capsys, "solve", "--problem", str(path))
        assert code == 2

    def test_unreadable_file_is_reported(self, tmp_path, capsys):
        code, _, err = run(capsys, "solve", "--problem", str(tmp_path / "nope.json"))
        assert code == 2 and "cannot read" in err

    def test_invalid_json_is_reported(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "solve", "--problem", str(path))
        assert code == 2 and "invalid JSON" in err


class TestTest:
    def test_efficient_point_reports_witness(self, triangle_file, capsys):
        code, out, _ = run(
            capsys, "test", "--problem", triangle_file, "--point", "0,1"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["efficient"] is True
        assert obj["witness"] == ["3", "2"]

    def test_dominated_point_reports_false(self, triangle_file, capsys):
        code, out, _ = run(
            capsys, "test", "--problem", triangle_file, "--point", "(1,1)"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["efficient"] is False and "witness" not in obj

    def test_weak_kind(self, square_file, capsys):
        code, out, _ = run(
            capsys, "test", "--problem", square_file, "--point", "1,1", "--kind", "weak"
        )
        assert code == 0 and json.loads(out) == {"weak": True}

    def test_point_outside_feasible_set(self, triangle_file, capsys):
        code, out, err = run(
            capsys, "test", "--problem", triangle_file, "--point", "2,2"
        )
        assert code == 2 and out == ""
        assert "infeasible point" in err

    def test_point_with_wrong_arity(self, triangle_file, capsys):
        code, _, err = run(
            capsys, "test", "--problem", triangle_file, "--point", "1,0,0"
        )
        assert code == 2 and "expected 2 coordinates" in err

    def test_point_with_bad_rational(self, triangle_file, capsys):
        code, _, err = run(
            capsys, "test", "--problem", triangle_file, "--point", "1/0,1"
        )
        assert code == 2


class TestConnect:
    def test_triangle_certificate(self, triangle_file, capsys):
        code, out, _ = run(
            capsys,
            "connect",
            "--problem",
            triangle_file,
            "--from",
            "0,1",
            "--to",
            "1,0",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["points"] == [["0", "1"], ["1", "0"]]
        assert obj["weights"] == [["5/2", "5/2"]]
        assert obj["breakpoints"] == ["0", "1/2", "1"]

    def test_single_point_path(self, triangle_file, capsys):
        code, out, _ = run(
            capsys,
            "connect",
            "--problem",
            triangle_file,
            "--from",
            "0,1",
            "--to",
            "0,1",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["points"] == [["0", "1"]] and obj["weights"] == []

    def test_non_efficient_endpoint(self, triangle_file, capsys):
        code, _, err = run(
            capsys,
            "connect",
            "--problem",
            triangle_file,
            "--from",
            "0,1",
            "--to",
            "1,1",
        )
        assert code == 2 and "endpoint not efficient" in err

    def test_weak_flag(self, square_file, capsys):
        code, out, _ = run(
            capsys,
            "connect",
            "--problem",
            square_file,
            "--from",
            "0,0",
            "--to",
            "1,1",
            "--weak",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["points"][0] == ["0", "0"] and obj["points"][-1] == ["1", "1"]


class TestCone:
    def test_dual_generators(self, triangle_file, capsys):
        code, out, _ = run(capsys, "cone", "dual", "--problem", triangle_file)
        assert code == 0
        assert json.loads(out) == {"generators": [["1", "0"], ["0", "1"]]}

    def test_lineality_basis(self, tmp_path, capsys):
        obj = json.loads(json.dumps(TRIANGLE))
        obj["M"] = [["1", "0"], ["0", "1"], ["1", "1"]]
        obj["K"] = {"dim": 3, "normals": [["-1", "0", "0"], ["0", "-1", "0"]]}
        path = tmp_path / "q3.json"
        path.write_text(json.dumps(obj))
        code, out, _ = run(capsys, "cone", "lineality", "--problem", str(path))
        assert code == 0
        assert json.loads(out) == {"basis": [["0", "0", "1"]]}

    def test_ri_membership_query(self, triangle_file, capsys):
        code, out, _ = run(
            capsys, "cone", "ri-test", "--problem", triangle_file, "--point", "1,0"
        )
        assert code == 0 and json.loads(out) == {"contains": False}
        code, out, _ = run(
            capsys, "cone", "ri-test", "--problem", triangle_file, "--point", "1,3"
        )
        assert json.loads(out) == {"contains": True}

    def test_ri_test_requires_point(self, triangle_file, capsys):
        code, _, err = run(capsys, "cone", "ri-test", "--problem", triangle_file)
        assert code == 2 and "--point" in err

    def test_decompose_structure(self, triangle_file, capsys):
        code, out, _ = run(capsys, "cone", "decompose", "--problem", triangle_file)
        obj = json.loads(out)
        assert obj["subspace"] is False
        assert obj["y0_basis"] == []
        assert obj["k1_rays"] == [["0", "1"], ["1", "0"]]


def test_module_entry_point(tmp_path):
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps(TRIANGLE))
    proc = subprocess.run(
        [sys.executable, "-m", "gpolyvlp", "test", "--problem", str(path), "--point", "1,0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["efficient"] is True
