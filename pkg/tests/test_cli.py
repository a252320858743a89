import json
from pathlib import Path

import pytest

from dlchar.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_census_json(capsys):
    code, out, _ = run(capsys, "unipotent", "census", "--type", "E8",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "dlchar/1"
    assert payload["total"] == 166
    assert len(payload["series"]) == 5


def test_census_csv(capsys):
    code, out, _ = run(capsys, "unipotent", "census", "--type", "G2",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "J;relative;cuspidals;irr_count"
    assert out.splitlines()[-1] == "total;;10;"


def test_census_deterministic(capsys):
    _, out1, _ = run(capsys, "unipotent", "census", "--type", "F4")
    _, out2, _ = run(capsys, "unipotent", "census", "--type", "F4")
    assert out1 == out2
    assert json.loads(out1)["total"] == 37


@pytest.mark.parametrize("name", ["G2", "F4", "E6", "2E6", "E7", "E8", "3D4"])
def test_census_golden_files(capsys, name):
    code, out, _ = run(capsys, "unipotent", "census", "--type", name)
    assert code == 0
    golden = (GOLDEN / f"census_{name}.json").read_text()
    assert out == golden


def test_weyl_relative(capsys):
    code, out, _ = run(capsys, "weyl", "relative", "--type", "2E6", "--J", "")
    assert code == 0 and out.strip() == "F4"
    code, out, _ = run(capsys, "weyl", "relative", "--type", "E6",
                       "--J", "2,3,4,5")
    assert code == 0 and out.strip() == "A2"
    code, out, _ = run(capsys, "weyl", "relative", "--type", "3D4", "--J", "",
                       "--format", "json")
    assert json.loads(out)["relative"] == ["G2"]


def test_weyl_relative_bad_j(capsys):
    code, _, err = run(capsys, "weyl", "relative", "--type", "A2", "--J", "9")
    assert code == 2


def test_rootdata_orders(capsys):
    code, out, _ = run(capsys, "rootdata", "orders", "--group", "SL2")
    assert code == 0
    payload = json.loads(out)
    assert payload["steinberg_identity"] is True
    assert payload["t1_factorization"] is True
    assert payload["valuation_equals_N"] is True
    # q(q^2-1) as [deg, coeff] pairs
    assert payload["order_poly"] == [[1, "-1/1"], [3, "1/1"]]


def test_selfcheck_quick(capsys):
    code, out, _ = run(capsys, "selfcheck", "--quick")
    assert code == 0
    assert "gauss-sum squares for primes <= 31: ok" in out
    assert "class count F4: formula 25, brute force 25: ok" in out
    assert "relative generators of 2E6 generate the 1152" in out


def test_rootdata_zset(capsys):
    code, out, _ = run(capsys, "rootdata", "zset", "--group", "SL2",
                       "--n", "2", "--q", "7", "--lambda", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["Z"] == [{"w": "e", "lambda_w": [3]},
                            {"w": "1", "lambda_w": [4]}]


def test_rootdata_zset_bad_lambda(capsys):
    code, _, _ = run(capsys, "rootdata", "zset", "--group", "GL2",
                     "--n", "2", "--q", "7", "--lambda", "1")
    assert code == 2


def test_dl_table_json(capsys):
    code, out, _ = run(capsys, "dl", "table", "--group", "SL2", "--q", "5")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["classes"]) == 9
    assert payload["values"][0] == [{"order": 1, "coeffs": [[0, "1/1"]]}] * 9


def test_dl_table_csv_and_pretty(capsys):
    code, out, _ = run(capsys, "dl", "table", "--group", "SL2", "--q", "3",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines()[0].startswith("character;I;-I;J;")
    code, out, _ = run(capsys, "dl", "table", "--group", "GL2", "--q", "3",
                       "--format", "pretty")
    assert code == 0 and "U0" in out


def test_dl_verify_all(capsys):
    code, out, _ = run(capsys, "dl", "verify", "--group", "GL2", "--q", "3",
                       "--all")
    assert code == 0
    assert "restriction: ok" in out


def test_dl_verify_single_check(capsys):
    code, out, _ = run(capsys, "dl", "verify", "--group", "GL2", "--q", "3",
                       "--check", "uniform-all")
    assert code == 0
    assert "uniform-all: ok" in out


def test_dl_verify_unknown_check(capsys):
    code, _, err = run(capsys, "dl", "verify", "--group", "SL2", "--q", "5",
                       "--check", "nope")
    assert code == 2


def test_dl_verify_failure_exits_1(capsys, monkeypatch):
    import dlchar.cli as cli

    def boom(table):
        raise AssertionError("dimension formula: synthetic failure")

    monkeypatch.setattr(cli, "verify_dl_identities", boom)
    code, _, err = run(capsys, "dl", "verify", "--group", "SL2", "--q", "5",
                       "--check", "identities")
    assert code == 1
    assert "dimension formula" in err


def test_unknown_group_errors(capsys):
    code, _, err = run(capsys, "rootdata", "orders", "--group", "Sp9")
    assert code == 2
    assert "error" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["unipotent", "census"])  # missing --type
    assert exc.value.code == 2
