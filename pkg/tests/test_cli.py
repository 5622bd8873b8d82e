import json

from click.testing import CliRunner

from adetau.cli import main


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env or {})


def test_tau_a4_csv_matches_table():
    res = run("tau", "--family", "a", "--r", "5", "--gmax", "10", "--method", "recursion", "--format", "csv")
    assert res.exit_code == 0, res.output
    lines = res.output.strip().splitlines()
    assert lines[0] == "family,r,g,method,value"
    assert len(lines) == 12
    assert lines[3] == "A,5,2,recursion,11/3600"
    assert lines[10] == "A,5,9,recursion,1670581/846526464000000000"


def test_tau_e6_json():
    res = run("tau", "--family", "e6", "--gmax", "10", "--format", "json")
    assert res.exit_code == 0, res.output
    payload = json.loads(res.output)
    assert payload["meta"]["config"]["family"] == "e6"
    values = [r["value"] for r in payload["records"]]
    assert values[3] == "5/1152"
    assert values[7] == "4235/414056448"
    assert values[2] == "0"


def test_tau_d4_default_method():
    res = run("tau", "--family", "d", "--l", "4", "--gmax", "9")
    assert res.exit_code == 0, res.output
    lines = res.output.strip().splitlines()
    assert lines[4] == "D,6,3,genfunc,13/40824"
    assert lines[10] == "D,6,9,genfunc,33917/2041117097886720"


def test_usage_errors_exit_2():
    assert run("tau", "--family", "a", "--gmax", "3").exit_code == 2  # missing --r
    assert run("tau", "--family", "d", "--r", "6", "--gmax", "3").exit_code == 2
    assert run("tau", "--family", "e6", "--r", "12", "--gmax", "3").exit_code == 2
    assert run("tau", "--family", "a", "--r", "4", "--gmax", "3", "--method", "recursion").exit_code == 2
    assert run("verify", "nonsense").exit_code == 2


def test_tau_verify_flag_cross_checks():
    res = run("tau", "--family", "a", "--r", "5", "--gmax", "6", "--method", "recursion", "--verify")
    assert res.exit_code == 0, res.output


def test_verify_suite_arrangement():
    res = run("verify", "arrangement")
    assert res.exit_code == 0, res.output
    assert "pass" in res.output and "FAIL" not in res.output


def test_verify_suite_pairing():
    res = run("verify", "pairing")
    assert res.exit_code == 0, res.output


def test_report_integrality_small():
    res = run("report-integrality", "--gmax", "10", "--format", "json")
    assert res.exit_code == 0, res.output
    payload = json.loads(res.output)
    assert payload["meta"]["flagged"] == 0
    row9 = payload["rows"][9]
    assert row9["tau"]["cofactor"] == 7  # the genus-9 value carries a 7
    assert row9["a"]["cofactor"] == 1  # which the renormalization removes


def test_report_integrality_gmax_zero():
    res = run("report-integrality", "--gmax", "0")
    assert res.exit_code == 0, res.output
    lines = res.output.strip().splitlines()
    assert len(lines) == 5  # header + tau/a/b/c of genus 0


def test_determinism_across_jobs():
    a = run("tau", "--family", "a", "--r", "5", "--gmax", "8", "--method", "closed", "--jobs", "1")
    b = run("tau", "--family", "a", "--r", "5", "--gmax", "8", "--method", "closed", "--jobs", "3")
    c = run("tau", "--family", "a", "--r", "5", "--gmax", "8", "--method", "closed",
            env={"ADETAU_THREADS": "5"})
    assert a.output == b.output == c.output


def test_output_file(tmp_path):
    target = tmp_path / "table.csv"
    res = run("tau", "--family", "a", "--r", "2", "--gmax", "5", "-o", str(target))
    assert res.exit_code == 0
    assert target.read_text().splitlines()[1] == "A,2,0,genfunc,1"
