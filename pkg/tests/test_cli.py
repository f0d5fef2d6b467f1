import json

import pytest

from weakjordan.cli import main, read_curve_csv


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decompose_worked_example(capsys, fixtures_dir):
    code, out, _ = run(capsys, "decompose", "--input", str(fixtures_dir / "worked.csv"), "--x0", "1,0")
    assert code == 0
    report = json.loads(out)
    assert list(report) == ["config", "suite_or_run", "results", "residuals", "failures", "version"]
    assert report["results"]["f1"] == [[0, 0], [2, 0], [3, 0]]
    assert report["results"]["f2"] == [[0, 0], [0, 0], [2, 0]]
    assert report["residuals"]["weak_relation"] == 0.0
    assert len(report["results"]["wbv_bounds"]) == 4


def test_decompose_writes_output(capsys, fixtures_dir, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(
        capsys, "decompose", "-i", str(fixtures_dir / "worked.csv"), "--x0", "1,1",
        "--norm", "p:3/2", "--alpha", "0.5", "-o", str(target),
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["config"]["norm"] == "p:3/2"


@pytest.mark.parametrize(
    "fixture,needle",
    [
        ("nonincreasing.csv", "node 2"),
        ("malformed.csv", "row 3, column 2"),
        ("badheader.csv", "header"),
        ("ragged.csv", "row 3"),
        ("missing.csv", "cannot read"),
    ],
)
def test_decompose_input_errors(capsys, fixtures_dir, fixture, needle):
    code, _, err = run(capsys, "decompose", "--input", str(fixtures_dir / fixture), "--x0", "1,0")
    assert code == 2
    assert needle in err


def test_decompose_domain_errors(capsys, fixtures_dir):
    path = str(fixtures_dir / "worked.csv")
    assert run(capsys, "decompose", "--input", path, "--x0", "0,0")[0] == 3
    assert run(capsys, "decompose", "--input", path, "--x0", "1,0", "--alpha", "3")[0] == 3
    assert run(capsys, "decompose", "--input", path, "--x0", "1,0,0")[0] == 2
    assert run(capsys, "decompose", "--input", path, "--x0", "a,b")[0] == 2
    assert run(capsys, "decompose", "--input", path, "--x0", "1,0", "--norm", "p0")[0] == 2
    assert run(capsys, "decompose", "--input", path, "--x0", "1,0", "--tol", "-1")[0] == 2


def test_decompose_verification_failure(capsys, fixtures_dir, monkeypatch):
    import weakjordan.cli as cli

    real = cli.decompose

    def broken(*args, **kwargs):
        res = real(*args, **kwargs)
        object.__setattr__(res, "residual_ok", False)
        return res

    monkeypatch.setattr(cli, "decompose", broken)
    code, out, _ = run(capsys, "decompose", "--input", str(fixtures_dir / "worked.csv"), "--x0", "1,0")
    assert code == 1
    assert json.loads(out)["failures"] == ["residual"]


def test_cone_queries(capsys):
    code, out, _ = run(capsys, "cone", "--x0", "3,4", "--member", "6,8", "--member=-1,0", "--leq", "0,0", "3,4")
    assert code == 0
    res = json.loads(out)["results"]
    assert res["cone"]["functional"] == [3.0, 4.0] and res["cone"]["alpha"] == 5.0
    assert [m["member"] for m in res["members"]] == [True, False]
    assert res["leq"][0]["leq"] is True


def test_cone_errors(capsys):
    assert run(capsys, "cone", "--x0", "0,0")[0] == 3
    assert run(capsys, "cone", "--x0", "3,4", "--alpha", "6")[0] == 3
    assert run(capsys, "cone", "--x0", "3,4", "--member", "1,2,3")[0] == 2


def test_verify_lattice(capsys):
    code, out, err = run(capsys, "verify", "--suite", "lattice", "--dim", "4", "--cases", "1000", "--seed", "42")
    assert code == 0
    report = json.loads(out)
    assert report["failures"] == []
    assert report["results"]["lattice"]["cases"] == 1000
    assert "0 failure" in err


def test_verify_fault_and_errors(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lattice", "--cases", "20", "--inject-fault")
    assert code == 1 and json.loads(out)["failures"]
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "verify", "--seed", "-1")[0] == 2
    assert run(capsys, "verify", "--cases", "0")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_verify_deterministic(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert run(capsys, "verify", "--suite", "bv", "--seed", "5", "--cases", "30", "-o", str(p))[0] == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_read_curve(fixtures_dir):
    c = read_curve_csv(fixtures_dir / "two_nodes.csv")
    assert c.grid.tolist() == [0.0, 1.0] and c.dim == 2


def test_env_tolerance_reaches_report(capsys, monkeypatch, fixtures_dir):
    monkeypatch.setenv("WEAKJORDAN_TOL", "1e-7")
    _, out, _ = run(capsys, "decompose", "--input", str(fixtures_dir / "worked.csv"), "--x0", "1,0")
    assert json.loads(out)["config"]["tol"] == 1e-7
