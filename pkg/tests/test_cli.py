import json

import pytest

from spinhdet.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots_x(capsys):
    code, out, _ = _run(capsys, "roots", "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] == 240


def test_roots_y(capsys):
    code, out, _ = _run(capsys, "roots", "--basis", "y", "--format", "json")
    obj = json.loads(out)
    assert obj["count"] == 120 and {f["mult"] for f in obj["forms"]} == {2}


def test_power_sum_odd_is_zero(capsys):
    code, out, _ = _run(capsys, "--format", "json", "power-sum", "13")
    assert code == 0
    assert json.loads(out)["terms"] == []


def test_power_sum_verify_reports_mismatch(capsys):
    code, out, _ = _run(capsys, "power-sum", "12", "--verify")
    assert code == 1
    assert "MISMATCH" in out


def test_power_sum_verify_unscaled_model(capsys):
    code, out, _ = _run(capsys, "power-sum", "12", "--verify", "--unscaled-half-sums")
    assert code == 0
    assert "14 orbits matched" in out


def test_hdet_eval(capsys):
    pt = json.dumps([str(3**k) for k in range(8)])
    code, out, _ = _run(capsys, "hdet", "eval", pt, "--format", "json")
    assert code == 0 and json.loads(out)["value"] != "0"


def test_hdet_eval_malformed(capsys):
    code, _, err = _run(capsys, "hdet", "eval", '["1","2","3","4","5","6","7","1/0"]')
    assert code == 2
    assert "point[7]" in err


def test_hdet_restrict(capsys):
    code, out, _ = _run(capsys, "hdet", "restrict", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["q_degree"] == 63 and obj["t_degree"] == 28


def test_hdet_build_round_trip(capsys):
    from spinhdet.hyperdet import FactoredForm, build_hdet

    _, out, _ = _run(capsys, "hdet", "build", "--format", "json")
    assert FactoredForm.from_json_obj(json.loads(out)) == build_hdet()


def test_geometry(capsys):
    code, out, _ = _run(capsys, "geometry", "fano", "--format", "json")
    assert code == 0 and len(json.loads(out)["lines"]) == 7


def test_cayley_eval(capsys):
    code, out, _ = _run(capsys, "cayley", "eval", "1", "0", "0", "0", "0", "0", "0", "1")
    assert code == 0 and out.strip() == "1"


def test_cayley_eval_bad_count(capsys):
    code, _, err = _run(capsys, "cayley", "eval", "1", "2")
    assert code == 2 and "entries" in err


def test_cayley_poly_sources_agree(capsys):
    _, a, _ = _run(capsys, "cayley", "poly", "--source", "explicit", "--format", "json")
    _, b, _ = _run(capsys, "cayley", "poly", "--source", "combinatorial", "--format", "json")
    assert a == b and len(json.loads(a)["terms"]) == 12


def test_fock_cartan_variant(capsys):
    y = ["0"] * 6 + ["1", "0"]
    _, printed, _ = _run(capsys, "fock", "cartan", *y, "--format", "json")
    _, fixed, _ = _run(capsys, "fock", "cartan", *y, "--e7-variant", "corrected", "--format", "json")
    assert printed != fixed


def test_out_file(capsys, tmp_path):
    path = tmp_path / "roots.json"
    code, out, _ = _run(capsys, "roots", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["count"] == 240


@pytest.mark.parametrize("argv", [["nope"], ["roots", "--bogus"], ["power-sum", "x"], []])
def test_usage_errors(capsys, argv):
    assert run(argv) == 2
