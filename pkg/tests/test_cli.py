import json

import jsonschema
import pytest

from klspecht import cli
from klspecht.laurent import LaurentPoly


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    report = json.loads(out)
    jsonschema.validate(report, cli.load_schema(report["command"]))
    return code, report


def test_enumerate_compositions(capsys):
    code, rep = run_json(capsys, "enumerate", "--type", "B", "--d", "3", "--compositions")
    assert code == 0
    rows = rep["compositions"]["rows"]
    assert len(rows) == 8
    assert rows[2] == {"parts": [2, 3, 2], "J": [0, 2], "young": "S2 x S2"}


def test_enumerate_std(capsys):
    code, rep = run_json(capsys, "enumerate", "--type", "A", "--d", "4", "--std", "--shape", "2,2")
    assert code == 0 and rep["std"]["count"] == 2


def test_enumerate_reps(capsys):
    code, rep = run_json(capsys, "enumerate", "--type", "B", "--d", "3", "--reps", "--J", "1,2")
    assert code == 0 and rep["reps"]["count"] == 8
    code, rep = run_json(capsys, "enumerate", "--shape-b", "2:3", "--reps", "--rstd")
    assert rep["d"] == 3 and rep["reps"]["J"] == [0, 2]
    assert {tuple(T["coset_rep"]) for T in rep["rstd"]["tableaux"]} == {tuple(w) for w in rep["reps"]["windows"]}


def test_enumerate_group(capsys):
    code, rep = run_json(capsys, "enumerate", "--type", "B", "--d", "2", "--group")
    assert rep["group"]["order"] == 8
    assert max(e["length"] for e in rep["group"]["elements"]) == 4


def poly(obj):
    return str(LaurentPoly.from_json(obj))


@pytest.mark.parametrize("side,expected", [("positive", "q"), ("negative", "-q^-1")])
def test_kl(capsys, side, expected):
    code, rep = run_json(capsys, "kl", "--type", "A", "--d", "3", "--J", "1", "--side", side)
    assert code == 0
    assert rep["reps"][1] == [1, 3, 2]
    assert poly(rep["m"][0][1]) == expected


def test_kl_B2_full(capsys):
    code, rep = run_json(capsys, "kl", "--type", "B", "--d", "2", "--J", "", "--side", "positive")
    assert len(rep["m"]) == 8 and all(len(r) == 8 for r in rep["m"])
    assert all(poly(rep["m"][k][k]) == "1" for k in range(8))


def test_kl_with_shape_reports_a_matrix(capsys):
    code, rep = run_json(capsys, "kl", "--type", "A", "--shape", "2,1")
    assert rep["a_matrix"]["entries"] == [[1, -1], [1, 2], [-1, -1]]


def test_csv_has_header(capsys):
    code, out, _ = run(capsys, "kl", "--type", "A", "--d", "3", "--J", "1", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "x,w,m,p"
    assert '"|1,2,3|","|1,3,2|",q,-q' in lines


def test_pretty_matches_json(capsys):
    _, rep = run_json(capsys, "kl", "--type", "B", "--d", "2", "--J", "0")
    _, pretty, _ = run(capsys, "kl", "--type", "B", "--d", "2", "--J", "0", "--format", "pretty")
    for row in rep["m"]:
        for f in row:
            assert poly(f) in pretty
    _, rep = run_json(capsys, "enumerate", "--type", "A", "--d", "5", "--partitions")
    _, pretty, _ = run(capsys, "enumerate", "--type", "A", "--d", "5", "--partitions", "--format", "pretty")
    assert f"partitions: {rep['partitions']['count']}" in pretty


def test_verify_lengths(capsys):
    code, rep = run_json(capsys, "verify", "--suite", "lengths", "--type", "B", "--d", "3")
    assert code == 0 and rep["passed"]
    assert rep["suites"][0]["details"] == {"B1": 2, "B2": 8, "B3": 48}


def test_verify_unitriangular_type_A(capsys):
    code, rep = run_json(capsys, "verify", "--suite", "theorem1", "--type", "A", "--max-d", "4")
    assert code == 0
    assert rep["suites"][0]["name"] == "unitriangular"
    assert rep["suites"][0]["details"]["surviving"]


def test_verify_is_deterministic(capsys):
    argv = ["verify", "--suite", "bruhat", "--type", "A", "--max-d", "4", "--seed", "7"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_output_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = run(capsys, "kl", "--type", "A", "--d", "3", "--J", "1", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["command"] == "kl"


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["enumerate", "--type", "A", "--d", "0", "--group"],
        ["enumerate", "--type", "A", "--d", "3"],
        ["enumerate", "--type", "A", "--d", "3", "--reps", "--J", "0"],
        ["enumerate", "--type", "A", "--d", "3", "--std", "--shape", "2,2"],
        ["kl", "--type", "A", "--d", "3"],
        ["enumerate", "--shape-b", "2", "--std"],
        ["enumerate", "--type", "B", "--d", "3", "--std", "--shape", "2,2,2"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == cli.EXIT_USAGE


def test_cap_exit_code(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("CAP_GROUP_ORDER", "50")
    target = tmp_path / "never.json"
    code, _, err = run(capsys, "enumerate", "--type", "A", "--d", "6", "--group", "--output", str(target))
    assert code == cli.EXIT_CAP and "cap" in err
    assert not target.exists()
    monkeypatch.setenv("CAP_COSETS", "5")
    monkeypatch.delenv("CAP_GROUP_ORDER")
    assert run(capsys, "kl", "--type", "B", "--d", "2", "--J", "")[0] == cli.EXIT_CAP


def test_verify_failure_exit_code(capsys, monkeypatch):
    from klspecht import verify

    def broken(**_):
        res = verify.SuiteResult("table")
        res.check(False, reason="forced")
        return res

    monkeypatch.setitem(verify.SUITES, "table", broken)
    code, out, _ = run(capsys, "verify", "--suite", "table")
    assert code == cli.EXIT_FAIL
    assert json.loads(out)["suites"][0]["failures"] == [{"reason": "forced"}]


def test_verify_all_pretty(capsys):
    code, out, _ = run(capsys, "verify", "--format", "pretty")
    assert code == cli.EXIT_OK
    assert "[PASS] orientation" in out and "inverse-top: certified=['reversed']" in out
    assert "surviving profiles: 16" in out
    assert out.rstrip().endswith("PASSED")
