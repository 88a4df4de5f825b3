import json

from qsphere.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_nf_example(capsys):
    code, out, _ = run_cli(capsys, "nf", "--algebra", "podles", "y1*y-1")
    assert code == 0
    assert json.loads(out)["result"] == "q^-2*y0^2 + q^-1*y0"


def test_ext_json_shape(capsys):
    code, out, _ = run_cli(capsys, "ext", "--N", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["dims"] == [0, 0, 1]
    assert payload["result"]["character"] == {"y-1": "0", "y0": "0", "y1": "0"}


def test_member_and_pi(capsys):
    code, out, _ = run_cli(capsys, "member", "b*c")
    assert code == 0 and json.loads(out)["result"] is True
    code, out, _ = run_cli(capsys, "member", "b")
    assert code == 0 and json.loads(out)["result"] is False
    code, out, _ = run_cli(capsys, "pi", "a*d")
    assert json.loads(out)["result"] == "1"


def test_delta_and_antipode(capsys):
    code, out, _ = run_cli(capsys, "delta", "a")
    assert code == 0
    assert json.loads(out)["result"] == ["a (x) a", "b (x) c"]
    code, out, _ = run_cli(capsys, "antipode", "--power", "2", "--algebra",
                           "podles", "y1")
    assert json.loads(out)["result"] == "q^-2*y1"


def test_sigma_beta_omega(capsys):
    code, out, _ = run_cli(capsys, "sigma", "--apply", "y0*y1")
    assert json.loads(out)["result"] == "q^-2*y0*y1"
    code, out, _ = run_cli(capsys, "beta", "--apply", "b*c + a")
    assert json.loads(out)["result"] == "y0"
    code, out, _ = run_cli(capsys, "omega-basis", "--n", "1", "--N", "1")
    assert json.loads(out)["result"] == ["a", "b"]


def test_usage_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "nf", "--algebra", "podles", "y0 @ y1")
    assert code == 2
    assert "error" in err


def test_zeta_and_checks_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "zeta", "--jmax", "2")
    assert code == 0  # full column rank holds
    code, out, _ = run_cli(capsys, "transes-check", "--N", "3")
    assert code == 0
    code, out, _ = run_cli(capsys, "sigma-inv-check", "--N", "2")
    assert code == 0


def test_determinism_byte_identical(capsys):
    args = ["--no-timing", "--seed", "7", "xi-check", "--trials", "4"]
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    args[2] = "8"
    _, out3, _ = run_cli(capsys, *args)
    assert out3 != out1  # the seed is honoured


def test_csv_and_out_file(tmp_path, capsys):
    target = tmp_path / "report.csv"
    code, out, _ = run_cli(capsys, "--format", "csv", "--out", str(target),
                           "koszul-verify", "--N", "2")
    assert code == 0 and out == ""
    lines = target.read_text().strip().splitlines()
    assert lines[0].startswith("check,pass")
    assert "koszul-exactness" in lines[1]


def test_env_override(monkeypatch, capsys):
    monkeypatch.setenv("QSPHERE_N", "3")
    code, out, _ = run_cli(capsys, "ext")
    assert code == 0
    assert json.loads(out)["params"]["N"] == 3


def test_verify_all_reports_and_exit(capsys):
    # small trial counts; the zeta pattern check stays red by design, so
    # the suite exit code is 1 and every other check passes
    code, out, _ = run_cli(capsys, "--trials", "2", "verify-all")
    assert code == 1
    reports = json.loads(out)
    by_name = {r["check"]: r for r in reports}
    assert [r["check"] for r in reports] == sorted(by_name)
    assert not by_name["zeta-injectivity"]["pass"]
    assert all(r["pass"] for r in reports if r["check"] != "zeta-injectivity")
    for r in reports:
        assert set(r) == {"check", "params", "result", "expected", "pass",
                          "elapsed_ms"}
