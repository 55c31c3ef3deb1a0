"""CLI behavior: reports, formats, exit codes, reproducibility."""

import json

import pytest

from torusrep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, (json.loads(out) if out else None)


def test_rho_identity(capsys):
    code, rep = run_json(capsys, "rho", "--p", "6", "-m", "1,0;0,1",
                         "--weight", "0")
    assert code == 0
    assert rep["results"]["bound_divides_p"] is True
    prev = rep["results"]["preview"]
    assert prev[0][0].startswith("1") and prev[0][1].startswith("0")
    assert rep["meta"]["p"] == 6 and rep["meta"]["N"] == 24
    assert rep["meta"]["s"] == 24 and rep["meta"]["u_exponent"] == 3
    assert "sigma_convention" in rep["meta"]


def test_stmat_and_basis_validation(capsys):
    code, rep = run_json(capsys, "stmat", "--p", "5")
    assert code == 0
    assert rep["meta"]["basis"] == "colored"
    code, _ = run(capsys, "stmat", "--p", "5", "--basis", "signed")
    assert code == 2  # signed basis needs even p


def test_order_command(capsys):
    code, rep = run_json(capsys, "order", "--p", "5", "-m", "2,1;1,1")
    assert code == 0
    assert rep["results"]["order"] == 20
    assert rep["results"]["projective_order"] == 5


def test_fig8_table(capsys):
    code, rep = run_json(capsys, "fig8-table", "--pmin", "3", "--pmax", "6")
    assert code == 0
    rows = rep["results"]
    assert [r["p"] for r in rows] == [3, 4, 5, 6]
    assert all(r["pass"] for r in rows)
    assert rows[0]["order"] == 1


def test_verify_denominators(capsys):
    code, rep = run_json(capsys, "verify-denominators", "--p", "6", "5",
                         "--samples", "5", "--seed", "42", "--height", "300")
    assert code == 0
    assert all(r["ok"] for r in rep["results"])


def test_compare_and_jeffrey(capsys):
    code, rep = run_json(capsys, "compare", "--p", "6", "-m", "2,1;1,1")
    assert code == 0
    row = rep["results"][0]
    assert row["match"] and row["integrality"]["ok"]
    code, rep = run_json(capsys, "jeffrey", "--p", "6", "-m", "2,1;1,1")
    assert code == 0
    assert rep["results"]["integrality"]["ok"]
    assert rep["meta"]["host_order"] == 24


def test_jeffrey_c_zero_paths(capsys):
    code, rep = run_json(capsys, "jeffrey", "--p", "6", "-m", "1,3;0,1")
    assert code == 0 and rep["meta"]["path"] == "t-power"
    # -I T^k routes through the square of the value at S
    code, rep = run_json(capsys, "jeffrey", "--p", "6", "--matrix=-1,4;0,-1")
    assert code == 0 and rep["meta"]["path"] == "t-power"
    assert rep["results"]["preview"][0][1] == "0+0j"


def test_image_order(capsys):
    code, rep = run_json(capsys, "image-order", "--p", "4")
    assert code == 0
    assert rep["results"]["order"] == 1


def test_selfcheck(capsys):
    code, rep = run_json(capsys, "selfcheck", "--seed", "1")
    assert code == 0
    assert all(c["ok"] for c in rep["results"])


def test_seed_reproducibility(capsys):
    args = ("compare", "--p", "6", "--samples", "3", "--seed", "7")
    _, out1 = run(capsys, *args)
    _, out2 = run(capsys, *args)
    assert out1 == out2  # byte-identical


def test_formats(capsys):
    code, out = run(capsys, "fig8-table", "--pmin", "3", "--pmax", "4",
                    "--format", "csv")
    assert code == 0 and out.splitlines()[0].startswith("listed,")
    code, out = run(capsys, "fig8-table", "--pmin", "3", "--pmax", "4",
                    "--format", "md")
    assert code == 0 and "| --- |" in out


def test_usage_errors(capsys):
    assert run(capsys, "rho", "--p", "6", "-m", "1,0;0,2")[0] == 2
    assert run(capsys, "rho", "--p", "2", "-m", "1,0;0,1")[0] == 2
    assert run(capsys, "rho", "--p", "6", "-m", "garbage")[0] == 2
    assert run(capsys, "jeffrey", "--p", "5", "-m", "2,1;1,1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = main(["rho", "--p", "6", "-m", "0,-1;1,0", "--out", str(path)])
    assert code == 0
    rep = json.loads(path.read_text())
    assert rep["meta"]["command"] == "rho"
