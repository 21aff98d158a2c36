import json
from pathlib import Path

import numpy as np
import pytest

from bezKit.cli import main as cli
from bezKit.cli.config import ENV_VARS
from bezKit.cli.io import (
    BezoutResponse,
    BivariatePayload,
    BraidResponse,
    CommonZerosResponse,
    HankelResponse,
    HermiteResponse,
    NodeResidualResponse,
    VesselPayload,
)
from bezKit.src.errors import (
    BezKitError,
    HankelStructureError,
    InvariantViolationError,
    PreconditionError,
    SingularMatrixError,
)

GOLDEN = Path(__file__).parent / "golden"

JSON_COMMANDS = [
    ("bezout", BezoutResponse),
    ("common-zeros", CommonZerosResponse),
    ("invert", HankelResponse),
    ("hermite", HermiteResponse),
    ("implicitize", BivariatePayload),
    ("quadrature", BivariatePayload),
    ("vessel-check", NodeResidualResponse),
    ("braid", BraidResponse),
]


def run(capsys, argv):
    code = cli.run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for names in ENV_VARS.values():
        for name in names:
            monkeypatch.delenv(name, raising=False)


@pytest.mark.parametrize("command,schema", JSON_COMMANDS)
def test_golden_json(capsys, command, schema):
    code, out, err = run(capsys, [command, "--in", str(GOLDEN / f"{command}.in.json")])
    assert code == 0, err
    expected = json.loads((GOLDEN / f"{command}.out.json").read_text())
    assert json.loads(out) == expected
    # output re-parses under its own schema
    assert schema.model_validate_json(out).model_dump() == expected


def test_golden_vessel_build(capsys):
    code, out, err = run(capsys, ["vessel-build", "--in", str(GOLDEN / "vessel-build.in.json")])
    assert code == 0, err
    got = VesselPayload.model_validate_json(out)
    expected = json.loads((GOLDEN / "vessel-build.out.json").read_text())
    for name, matrix in expected.items():
        assert np.allclose(getattr(got, name).to_array(), np.array(matrix["re"]) + 1j * np.array(matrix["im"]))


def test_golden_sample(capsys):
    argv = ["sample", "--in", str(GOLDEN / "sample.in.json"), "--interval", "0", "1", "--samples", "3"]
    code, out, _ = run(capsys, argv)
    assert code == 0
    assert out == (GOLDEN / "sample.out.csv").read_text()


def test_golden_identities(capsys):
    code, out, _ = run(capsys, ["identities", "--in", str(GOLDEN / "identities.in.json")])
    assert code == 0
    assert out == (GOLDEN / "identities.out.txt").read_text()


def test_braid_labels_both_index_and_multiplicity(capsys):
    code, out, _ = run(capsys, ["braid", "--in", str(GOLDEN / "braid.in.json")])
    assert code == 0
    for point in json.loads(out)["points"]:
        assert set(point) == {"image", "real", "min_index", "paper_multiplicity", "full_twists"}
        assert point["paper_multiplicity"] == point["min_index"] + 1


def test_identities_random_points_are_reproducible(capsys):
    payload = json.dumps({"p": {"coeffs": [["1", "1"], ["2", "1"], ["3", "1"]]}, "q": {"coeffs": [["5", "1"], ["1", "1"]]}})
    argv = ["identities", "--json", payload, "--samples", "4", "--seed", "3"]
    first = run(capsys, argv)
    second = run(capsys, argv)
    assert first == second
    assert first[0] == 0
    assert first[1].splitlines()[1].split() == ["quotient", "4", "4", "PASS"]


@pytest.mark.parametrize("command", [c for c, _ in JSON_COMMANDS] + ["vessel-build", "sample", "identities"])
def test_reruns_are_byte_identical(capsys, command):
    argv = [command, "--in", str(GOLDEN / f"{command}.in.json")]
    assert run(capsys, argv) == run(capsys, argv)


def test_inline_json_and_out_file(capsys, tmp_path):
    target = tmp_path / "result.json"
    payload = (GOLDEN / "common-zeros.in.json").read_text()
    code, out, _ = run(capsys, ["common-zeros", "--json", payload, "--out", str(target)])
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text()) == {"common_zeros": 1}


def test_field_flag_promotes_to_gaussian(capsys):
    code, out, _ = run(capsys, ["bezout", "--in", str(GOLDEN / "bezout.in.json"), "--field", "Qi"])
    assert code == 0
    response = json.loads(out)
    assert response["field"] == "Q[i]"
    assert response["matrix"][0][1] == ["-3", "1", "0", "1"]


def test_quadrature_writes_boundary_csv(capsys, tmp_path):
    target = tmp_path / "boundary.csv"
    argv = ["quadrature", "--in", str(GOLDEN / "quadrature.in.json"), "--csv", str(target), "--samples", "4"]
    code, _, _ = run(capsys, argv)
    assert code == 0
    lines = target.read_text().splitlines()
    assert lines[0] == "theta,re,im"
    assert len(lines) == 5
    assert lines[1] == "0,1,0"


def test_quadrature_csv_is_opt_in(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, ["quadrature", "--in", str(GOLDEN / "quadrature.in.json")])
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / "quadrature.out.json").read_text())
    assert list(tmp_path.iterdir()) == []
    code, out, _ = run(capsys, ["quadrature", "--help"])
    assert code == 0
    assert "skipped when absent" in " ".join(out.split())


def test_malformed_json_exits_2(capsys):
    code, out, err = run(capsys, ["bezout", "--json", "{not json"])
    assert code == 2
    assert out == ""
    assert "malformed JSON" in err


def test_schema_violation_exits_2(capsys):
    code, _, err = run(capsys, ["bezout", "--json", json.dumps({"p": {"coeffs": [["1"]]}})])
    assert code == 2
    assert "invalid input" in err


def test_identities_bad_sample_point_exits_2(capsys):
    pq = json.loads((GOLDEN / "identities.in.json").read_text())
    for bad in ([["1", "0"], ["2", "1"]], [["x", "1"], ["2", "1"]], [["1", "1", "1"], ["2", "1"]]):
        payload = json.dumps({"p": pq["p"], "q": pq["q"], "points": [bad]})
        code, out, err = run(capsys, ["identities", "--json", payload])
        assert code == 2
        assert out == ""
        assert "invalid input" in err
    payload = json.dumps({"p": pq["p"], "q": pq["q"], "w": [["1", "0"]]})
    assert run(capsys, ["identities", "--json", payload])[0] == 2


def test_unknown_flag_exits_2(capsys):
    code, _, _ = run(capsys, ["bezout", "--bogus"])
    assert code == 2


def test_bad_environment_override_exits_2(capsys, monkeypatch):
    monkeypatch.setenv("BEZKIT_DEPTH", "deep")
    code, _, err = run(capsys, ["braid", "--in", str(GOLDEN / "braid.in.json")])
    assert code == 2
    assert "BEZKIT_DEPTH" in err


def test_environment_depth_is_honoured(capsys, monkeypatch):
    m2 = {
        "p0": {"coeffs": [[["1", "1"]]]},
        "p1": {"coeffs": [[["0", "1"], ["1", "1"]], [["1", "1"], ["0", "1"]]]},
        "p2": {"coeffs": [[["0", "1"], ["0", "1"], ["2", "1"]], [["0", "1"], ["0", "1"], ["0", "1"]], [["1", "1"], ["0", "1"], ["0", "1"]]]},
    }
    code, out, _ = run(capsys, ["braid", "--json", json.dumps(m2)])
    assert code == 0
    assert json.loads(out)["points"][0]["min_index"] == 2
    monkeypatch.setenv("BEZKIT_DEPTH", "1")
    code, out, _ = run(capsys, ["braid", "--json", json.dumps(m2)])
    assert json.loads(out)["points"][0]["min_index"] == "diverges"
    code, out, _ = run(capsys, ["braid", "--json", json.dumps(m2), "--depth", "4"])
    assert json.loads(out)["points"][0]["min_index"] == 2


def test_precondition_failure_exits_3(capsys):
    payload = json.dumps({"p": {"coeffs": [["2", "1"], ["-3", "1"], ["1", "1"]]}, "q": {"coeffs": [["3", "1"], ["-4", "1"], ["1", "1"]]}})
    code, out, err = run(capsys, ["invert", "--json", payload])
    assert code == 3
    assert out == ""
    assert "SingularMatrixError" in err


def test_error_tree_splits_exit_codes():
    assert issubclass(SingularMatrixError, PreconditionError)
    assert issubclass(HankelStructureError, InvariantViolationError)
    for leaf in (SingularMatrixError, HankelStructureError):
        assert issubclass(leaf, BezKitError)
        assert not issubclass(leaf, (ValueError, ArithmeticError))


def test_invariant_violation_exits_4(capsys, monkeypatch):
    def broken(p, q):
        raise HankelStructureError("inverse is not Hankel")

    monkeypatch.setattr(cli, "bezout_inverse", broken)
    code, _, err = run(capsys, ["invert", "--in", str(GOLDEN / "invert.in.json")])
    assert code == 4
    assert "HankelStructureError" in err
