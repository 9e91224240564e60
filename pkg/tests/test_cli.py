import json
from fractions import Fraction as F

import pytest

from lctlab.cli import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, cli_main


def run(capsys, *argv):
    code = cli_main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def frac(obj):
    return F(obj["num"], obj["den"])


def test_monomial_json(capsys):
    code, out, _ = run(capsys, "lct", "monomial", "--n", "2", "x0^3, x1^2")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["schema"] == "lct-lab/1"
    assert doc["lct"] == {"num": 5, "den": 6}
    assert doc["method"] == "newton" and doc["exact"] is True
    assert list(doc)[-1] == "diagnostics"


def test_jets_profile(capsys):
    code, out, _ = run(capsys, "lct", "jets", "--n", "2", "--max-order", "5", "x0^2 + x1^3")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert frac(doc["bracket"]["upper"]) == F(5, 6)
    assert [r["fiber_dim"] for r in doc["profile"]][-1] == 7


def test_bracket_and_estimate(capsys):
    code, out, _ = run(capsys, "lct", "bracket", "--n", "2", "--degree", "4", "x0^3, x1^2")
    b = json.loads(out)["bracket"]
    assert frac(b["upper"]) - frac(b["lower"]) == F(1, 2)
    code, out, _ = run(capsys, "lct", "estimate", "--n", "2", "--format", "csv",
                       "--weights", "1,1;3,2", "x0^2 + x1^3")
    assert code == EXIT_OK
    assert out.splitlines()[1].startswith("1/2,5/6,False")


def test_sequences_csv(capsys):
    code, out, _ = run(capsys, "seq", "t-power", "--n", "1", "--m-max", "3", "--format", "csv", "x0^2")
    assert out.splitlines() == [
        "construction,parameter,predicted,certified,bracket-lower,bracket-upper",
        "t-power,1,3/2,3/2,3/2,3/2", "t-power,2,1,1,1,1", "t-power,3,5/6,5/6,5/6,5/6"]
    code, out, _ = run(capsys, "seq", "power-scale", "--n", "2", "--m-max", "3", "--format",
                       "csv", "x0^3, x1^2")
    assert out.splitlines()[-1] == "power-scale,3,5/18,5/18,5/18,5/18"
    code, out, _ = run(capsys, "seq", "ts-shift", "--n", "1", "x0^4")
    doc = json.loads(out)
    assert frac(doc["rows"][0]["certified"]) == 1
    assert doc["diagnostics"]["g"] == "x0^4 + x1^4 + x2^4 + x3^4"
    code, out, _ = run(capsys, "seq", "cylinder", "--n", "1", "--format", "csv", "x0^3")
    assert out.splitlines()[-1] == "cylinder,2,1/3,1/3,1/3,1/3"
    code, out, _ = run(capsys, "seq", "ladder", "--ordF", "2", "--kappaF", "1", "--ordF0", "1",
                       "--kappaF0", "2", "--m-max", "2", "--format", "csv")
    assert [l.split(",")[2] for l in out.splitlines()[1:]] == ["3", "5/3", "7/5"]


def test_explore(capsys):
    code, out, _ = run(capsys, "explore", "spectrum", "--n", "1", "--degree", "6", "--format", "csv")
    assert out.splitlines()[1:] == ["1/6", "1/5", "1/4", "1/3", "1/2", "1"]
    code, out, _ = run(capsys, "explore", "accumulation", "--n", "2", "--degree", "2", "--m-max", "3")
    reports = json.loads(out)["reports"]
    assert any(r["confirmed"] and r["direction"] == "from-above" for r in reports)


def test_config_file_and_out(tmp_path, capsys):
    cfg = tmp_path / "lct.conf"
    cfg.write_text("# defaults\nn = 2\nformat = csv\n")
    target = tmp_path / "out.csv"
    code, out, _ = run(capsys, "lct", "monomial", "--config", str(cfg), "--out", str(target), "x0*x1")
    assert code == EXIT_OK and out == ""
    assert target.read_text() == "quantity,value\nlct,1\n"


@pytest.mark.parametrize("argv", [
    ["lct", "monomial", "--n", "2", "x0^^2"],
    ["lct", "monomial", "--n", "2", "x0 + x1"],
    ["lct", "monomial", "x0"],
    ["lct", "monomial", "--n", "1", "x3"],
    ["seq", "t-power", "--n", "1", "--c", "one", "x0"],
    ["lct", "nothing"],
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INPUT
    assert err


def test_bad_config(tmp_path, capsys):
    cfg = tmp_path / "bad.conf"
    cfg.write_text("colour = blue\n")
    assert run(capsys, "lct", "monomial", "--config", str(cfg), "x0")[0] == EXIT_INPUT


def test_budget_errors(capsys):
    assert run(capsys, "explore", "spectrum", "--n", "4", "--degree", "2")[0] == EXIT_BUDGET
