import orjson
import pytest

from tamewild.core.app import main
from tamewild.models.verdict import Criterion
from tests.helpers import run_cli

ANICK = "x + z*(x*z - z*y) ; y + (x*z - z*y)*z ; z"


def test_coord_decide_anick_coordinate(capsys):
    code, report = run_cli(capsys, "coord", "decide", "x + z*(x*z - z*y)")
    assert code == 0
    assert report["schema_version"] == 1
    assert report["command"] == "coord decide"
    assert report["verdict"] == "Wild"
    assert report["criterion"] == "linear-coordinate"
    assert report["theorem"] == Criterion.LINEAR_COORDINATE.theorem
    assert report["witness"]["pair"] == ["1 + z1*z2", "-z1^2"]
    assert report["witness"]["reason"] == "neither-leading-form-divides"
    assert report["timing_ms"] >= 0


def test_ge2_check_identity(capsys):
    code, report = run_cli(capsys, "ge2", "check", "[[1,0],[0,1]]")
    assert code == 0
    assert report["verdict"] == "Member"
    assert report["certificate"]["steps"] == []


def test_ge2_complete(capsys):
    code, report = run_cli(capsys, "ge2", "complete", "1 + z1*z2", "z1")
    assert code == 0
    assert report["verdict"] == "Completed"
    assert set(report["result"]) >= {"c", "d"}


def test_auto_jz_and_invert(capsys):
    code, report = run_cli(capsys, "auto", "jz", ANICK)
    assert code == 0
    assert report["result"]["det"] == "1"
    code, report = run_cli(capsys, "auto", "invert", "x + z*y ; y ; z")
    assert report["result"]["endo"] == "x - z*y ; y ; z"


def test_auto_decide_linear(capsys):
    code, report = run_cli(capsys, "auto", "decide-linear", ANICK)
    assert code == 0
    assert report["verdict"] == "Wild"
    assert report["criterion"] == "z-linear-ge2"
    assert report["theorem"] == "a z-linear automorphism is z-tame iff its J_z lies in GE2(K[z1,z2])"
    code, report = run_cli(capsys, "auto", "decide-linear", "x + z*y ; y ; z")
    assert report["verdict"] == "Tame"
    assert report["steps"] == ["x + z*y ; y ; z"]


def test_examples_anick_matches_the_literal(capsys):
    code, report = run_cli(capsys, "examples", "anick")
    assert code == 0
    assert report["result"]["endo"] == "x + z*x*z - z*z*y ; y + x*z*z - z*y*z ; z"
    assert report["result"]["degree"] == 3
    code, report = run_cli(capsys, "examples", "elementary", "x", "3/2", "y^2")
    assert report["input"]["alpha"] == "3/2"


def test_deriv_metab(capsys):
    code, report = run_cli(capsys, "deriv", "metab", "x*y", "x")
    assert code == 0
    assert report["command"] == "deriv metab"
    assert report["result"]["derivative"] == "y2"


def test_metab_obstruction(capsys):
    code, report = run_cli(capsys, "obstruction", "tau")
    assert code == 0
    assert report["verdict"] == "Inconsistent"


def test_trace_test_sides(capsys):
    _, right = run_cli(capsys, "trace-test", "x + x^2*[y,z] ; y ; z", "--side", "r")
    _, left = run_cli(capsys, "trace-test", "x + x^2*[y,z] ; y ; z", "--side", "l")
    assert right["verdict"] == "Fail"
    assert left["verdict"] == "Pass"


def test_natree_member(capsys):
    code, report = run_cli(capsys, "natree", "member", "(x*y)*x", "x*y", "x")
    assert code == 0
    assert report["verdict"] == "Member"
    code, report = run_cli(capsys, "natree", "member", "x*(y*x)", "x*y", "x")
    assert report["verdict"] == "NotMember"


def test_text_output(capsys):
    code = main(["coord", "decide", "x + z*(x*z - z*y)"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("coord decide: Wild")
    assert "witness: (1 + z1*z2, -z1^2)" in out


def test_parse_error_exit_code_and_position(capsys):
    code, body = run_cli(capsys, "coord", "decide", "x +")
    assert code == 2
    assert body["error"]["code"] == "ParseError"
    assert body["error"]["classification"] == "parse_error"
    assert len(body["error"]["position"]) == 2


def test_resource_limit_exit_code(capsys):
    code, body = run_cli(capsys, "--max-degree", "2", "natree", "member", "(x*y)*x", "x*y", "x")
    assert code == 3
    assert body["error"]["code"] == "ResourceLimit"


def test_invalid_max_degree_is_an_input_error(capsys):
    code, body = run_cli(capsys, "--max-degree", "0", "natree", "member", "x", "x")
    assert code == 2
    assert "MAX_DEGREE" in body["error"]["message"]


def test_hypothesis_violation_exit_code(capsys):
    code, body = run_cli(capsys, "auto", "decide-linear", "z*x ; y ; z")
    assert code == 2
    assert body["error"]["code"] == "NotInvertible"


def test_custom_variables(capsys):
    code, report = run_cli(capsys, "--vars", "a,b,c", "deriv", "fox-r", "a*b", "a")
    assert code == 0
    assert report["result"]["derivative"] == "b"
    assert report["input"]["vars"] == "a,b,c"


def test_verify_roundtrip(capsys, tmp_path):
    _, report = run_cli(capsys, "auto", "decide-linear", ANICK)
    good = tmp_path / "anick.json"
    good.write_bytes(orjson.dumps(report))
    code, checked = run_cli(capsys, "verify", str(good))
    assert code == 0
    assert checked["verdict"] == "Valid"

    report["witness"]["pair"][1] = "z1^2"
    bad = tmp_path / "mutated.json"
    bad.write_bytes(orjson.dumps(report))
    code, checked = run_cli(capsys, "verify", str(bad))
    assert code == 1
    assert checked["verdict"] == "Invalid"


@pytest.mark.parametrize("content", [b"not json", b'{"command": "ge2 check", "schema_version": 99}'])
def test_verify_unreadable_reports(capsys, tmp_path, content):
    path = tmp_path / "report.json"
    path.write_bytes(content)
    code, body = run_cli(capsys, "verify", str(path))
    assert code == 2
    assert body["error"]["code"] == "ReportInvalid"


def test_verify_missing_file(capsys, tmp_path):
    code, body = run_cli(capsys, "verify", str(tmp_path / "absent.json"))
    assert code == 2
