import json

import pytest

from hodgecalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out) if out else None, err


def test_gb_json(capsys):
    code, doc, _ = run_json(capsys, "gb", "--ideal", "x^2 - y, y^2 - x")
    assert code == 0
    assert doc["command"] == "gb"
    assert doc["result"]["generators"] == ["x^2 - y", "y^2 - x"]
    assert doc["result"]["reduced"] is True
    assert doc["timings"] is None


def test_gb_human(capsys):
    code, out, _ = run(capsys, "gb", "--ideal", "x, x + y")
    assert code == 0
    assert "reduced basis" in out and "y" in out


def test_nf(capsys):
    code, doc, _ = run_json(capsys, "nf", "--poly", "x^2", "--ideal", "x^2 - y")
    assert code == 0
    assert doc["result"]["normal_form"] == "y"
    assert doc["result"]["member"] is False


def test_hodge_two_planes(capsys):
    code, doc, _ = run_json(
        capsys, "hodge", "--ideal", "x*y, x*z", "--p", "1", "--lambda", "1", "--seed", "7"
    )
    assert code == 0
    assert doc["result"]["ideal"]["generators"] == ["x", "y", "z"]
    assert doc["result"]["agreement"] == "union-taken"
    assert doc["seed"] == 7


def test_hodge_warns_on_union(capsys):
    code, out, _ = run(capsys, "hodge", "--ideal", "x*y, x*z", "--p", "1")
    assert code == 0
    assert "warning" in out and "union" in out


def test_lct(capsys):
    code, out, _ = run(capsys, "lct", "--ideal", "x1^2, x2^2")
    assert code == 0
    assert out.strip() == "1"


def test_lct_json(capsys):
    code, doc, _ = run_json(capsys, "lct", "--ideal", "x^2, y^3")
    assert code == 0
    assert doc["result"] == "5/6"


def test_mult_ideal(capsys):
    code, doc, _ = run_json(
        capsys, "mult-ideal", "--ideal", "x, y", "--c", "2", "--left-limit"
    )
    assert code == 0
    assert doc["result"]["generators"] == ["1"]


def test_minexp(capsys):
    code, out, _ = run(capsys, "minexp", "--ideal", "x + x^2, y")
    assert code == 0
    assert out.strip() == "inf"
    code, doc, _ = run_json(capsys, "minexp", "--ideal", "x^2, y^3")
    assert doc["result"]["value"] == "5/6"


def test_coeff(capsys):
    code, doc, _ = run_json(
        capsys, "coeff", "--ideal", "x*y1 + x^2*y2", "--vars", "x", "--params", "y1,y2"
    )
    assert code == 0
    assert doc["result"]["generators"] == ["x"]


def test_milnor(capsys):
    code, doc, _ = run_json(
        capsys, "milnor", "--poly", "x^2 + y^3", "--weights", "3,2"
    )
    assert code == 0
    assert doc["result"]["milnor_number"] == 2


def test_restrict(capsys):
    code, doc, _ = run_json(capsys, "restrict", "--ideal", "x, y, z", "--seed", "3")
    assert code == 0
    assert doc["result"]["vars"] == ["x", "y"]


def test_exit_code_on_parse_error(capsys):
    code, out, err = run(capsys, "gb", "--ideal", "x + ")
    assert code == 2
    assert "input error" in err


def test_exit_code_on_refusal(capsys):
    code, out, err = run(capsys, "hodge", "--ideal", "x^2, y^3", "--p", "1", "--lambda", "1/2")
    assert code == 1
    assert "refused" in err and "ordinary" in err


def test_json_reports_are_byte_identical(capsys):
    argv = ["hodge", "--ideal", "x^2, y^3", "--p", "2", "--lambda", "1", "--seed", "5", "--json"]
    code1 = main(list(argv))
    out1 = capsys.readouterr().out
    code2 = main(list(argv))
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2


def test_config_file(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"ideal": "x^2, y^3", "json": True}))
    code, out, _ = run(capsys, "lct", "--config", str(config))
    assert code == 0
    assert json.loads(out)["result"] == "5/6"


def test_config_rejects_unknown_keys(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"no-such-flag": 1}))
    code, _, err = run(capsys, "lct", "--ideal", "x, y", "--config", str(config))
    assert code == 2
    assert "config" in err


def test_verify_oracles_suite(capsys):
    code, doc, _ = run_json(capsys, "verify", "--suite", "oracles")
    assert code == 0
    assert doc["result"]["failed"] == 0
    assert doc["result"]["passed"] >= 5
    names = [c["name"] for c in doc["result"]["checks"]]
    assert any("membership" in n for n in names)
