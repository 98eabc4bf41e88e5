import io
import json
import subprocess
import sys

import pytest

from signed_involutions.cli import main


def run(argv, stdin=None, capsys=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_count_alpha(capsys):
    code, out, _ = run(["count", "alpha", "--p", "2", "--q", "2"], capsys=capsys)
    assert (code, out) == (0, "21\n")


@pytest.mark.parametrize("method", ["gamma-sum", "enumeration", "weighted-path-count"])
def test_count_alpha_methods(capsys, method):
    code, out, _ = run(["count", "alpha", "--p", "3", "--q", "2", "--method", method], capsys=capsys)
    assert (code, out) == (0, "55\n")


def test_count_json_and_others(capsys):
    assert run(["count", "gamma", "--k", "1", "--p", "2", "--q", "2", "--format", "json"],
               capsys=capsys)[1] == '{"value":"12"}\n'
    assert run(["count", "delannoy", "--p", "2", "--q", "2"], capsys=capsys)[1] == "13\n"
    assert run(["count", "c", "--n", "4", "--r", "2"], capsys=capsys)[1] == "6\n"


def test_usage_errors(capsys):
    assert run(["count", "alpha", "--p", "-1", "--q", "2"], capsys=capsys)[0] == 2
    assert run(["count", "gamma", "--k", "3", "--p", "1", "--q", "1"], capsys=capsys)[0] == 2
    assert run(["poly", "Etilde", "--p", "1", "--q", "1", "--method", "x"], capsys=capsys)[0] == 2
    assert run(["count", "alpha", "--method", "nope"], capsys=capsys)[0] == 2
    assert run(["frobnicate"], capsys=capsys)[0] == 2


def test_table_csv(capsys):
    code, out, _ = run(["table", "alpha", "--p", "2", "--q", "2"], capsys=capsys)
    assert code == 0
    assert out.splitlines() == ["p\\q,0,1,2", "0,1,1,1", "1,1,3,6", "2,1,6,21"]


def test_table_json(capsys):
    _, out, _ = run(["table", "delannoy", "--p", "1", "--q", "2", "--format", "json"], capsys=capsys)
    assert json.loads(out)["values"] == [["1", "1", "1"], ["1", "3", "5"]]


def test_enumerate_jsonl(capsys):
    _, out, _ = run(["enumerate", "signed", "--p", "1", "--q", "1"], capsys=capsys)
    lines = [json.loads(x) for x in out.splitlines()]
    assert len(lines) == 3
    assert lines[0] == {"cycles": [], "fixed": [[1, "+"], [2, "-"]], "p": 1, "q": 1}
    _, out, _ = run(["enumerate", "weighted", "--p", "2", "--q", "2"], capsys=capsys)
    assert len(out.splitlines()) == 21
    _, out, _ = run(["enumerate", "grassmann", "--p", "2", "--q", "3"], capsys=capsys)
    assert len(out.splitlines()) == 10
    _, out, _ = run(["enumerate", "signed", "--p", "2", "--q", "2", "--k", "2"], capsys=capsys)
    assert len(out.splitlines()) == 3


def test_poly(capsys):
    _, out, _ = run(["poly", "E", "--p", "2", "--q", "2"], capsys=capsys)
    assert json.loads(out)["coeffs"] == [["0", "6"], ["1", "6"], ["2", "5"], ["3", "3"], ["4", "1"]]
    _, out, _ = run(["poly", "D", "--p", "2", "--q", "2", "--method", "explicit-formula",
                     "--eval", "1"], capsys=capsys)
    assert json.loads(out)["value"] == "13"
    _, out, _ = run(["poly", "A", "--p", "2", "--q", "2", "--eval", "1/2"], capsys=capsys)
    assert json.loads(out)["value"] == "51/4"
    _, out, _ = run(["poly", "Etilde", "--p", "1", "--q", "1"], capsys=capsys)
    assert json.loads(out)["coeffs"] == [["0", "3"]]


def test_bijection_phi(capsys, monkeypatch):
    line = json.dumps({"cycles": [[1, 4], [3, 8]], "fixed": [[2, "+"], [5, "+"], [6, "+"], [7, "-"]]})
    code, out, err = run(["bijection", "phi"], stdin=line + "\n", capsys=capsys, monkeypatch=monkeypatch)
    assert code == 0 and err == ""
    assert json.loads(out) == {"p": 5, "q": 3, "steps": [
        {"dir": "E"}, {"dir": "D", "label": 1}, {"dir": "E"}, {"dir": "E"},
        {"dir": "N"}, {"dir": "D", "label": 3}]}


def test_bijection_psi_with_errors(capsys, monkeypatch):
    good = json.dumps({"p": 2, "q": 2, "steps": [{"dir": "D", "label": 1}, {"dir": "D", "label": 3}]})
    bad = json.dumps({"p": 1, "q": 1, "steps": [{"dir": "D", "label": 2}]})
    code, out, err = run(["bijection", "psi"], stdin="\n".join([good, bad, "not json", good]),
                         capsys=capsys, monkeypatch=monkeypatch)
    assert code == 1
    assert len(out.splitlines()) == 2
    errors = [json.loads(x) for x in err.splitlines()]
    assert [e["line"] for e in errors] == [2, 3]
    assert errors[0]["error"] == "LabelOutOfRange"


def test_bijection_round_trip_through_files(tmp_path, capsys):
    src = tmp_path / "inv.jsonl"
    main(["--out", str(src), "enumerate", "signed", "--p", "2", "--q", "2"])
    paths = tmp_path / "paths.jsonl"
    assert main(["--out", str(paths), "bijection", "phi", "--input", str(src)]) == 0
    back = tmp_path / "back.jsonl"
    assert main(["--out", str(back), "bijection", "psi", "--input", str(paths)]) == 0
    assert back.read_text() == src.read_text()


def test_series_commands(capsys):
    code, out, _ = run(["series", "pde-check", "--deg", "8"], capsys=capsys)
    assert code == 0 and json.loads(out)["ok"] is True
    code, out, _ = run(["series", "char-check", "--deg", "6"], capsys=capsys)
    assert code == 0 and json.loads(out)["ok"] is True
    _, a, _ = run(["series", "alpha", "--deg", "6"], capsys=capsys)
    _, c, _ = run(["series", "closed-form", "--deg", "6"], capsys=capsys)
    assert a == c
    assert [2, 2, "21/2"] in json.loads(a)["coeffs"]


def test_verify_quick(capsys):
    code, out, _ = run(["verify", "all", "--max", "3"], capsys=capsys)
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_verify_reports_failure(capsys, monkeypatch):
    from signed_involutions import counting
    monkeypatch.setattr(counting, "gamma_closed", lambda k, p, q: 0)
    code, out, _ = run(["verify", "counting", "--max", "2"], capsys=capsys)
    assert code == 1
    assert "FAIL gamma failed at k=0, p=0, q=0" in out


def test_deterministic_output():
    cmd = [sys.executable, "-m", "signed_involutions", "enumerate", "weighted", "--p", "3", "--q", "2"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.count(b"\n") == 55
