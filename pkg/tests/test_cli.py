import json

import pytest

from main import main

DEGREE_MODEL = {
    "name": "degree",
    "n": 3,
    "payoffs": {
        "": [0, 0, 0], "12": [1, 1, 0], "13": [1, 0, 1], "23": [0, 1, 1],
        "12,13": [2, 1, 1], "12,23": [1, 2, 1], "13,23": [1, 1, 2], "12,13,23": [2, 2, 2],
    },
}


@pytest.fixture
def run(capsys):
    def invoke(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err
    return invoke


def test_classify_table(run, fixture_path):
    code, out, _ = run("classify", fixture_path("fix_b.json"), "--concepts", "ps,sps")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("network")
    assert lines[3].startswith("{12} ")
    assert lines[3].rstrip().endswith("yes | yes")


def test_classify_json(run, fixture_path):
    code, out, _ = run("--format", "json", "classify", fixture_path("fix_a.json"), "--concepts", "lap,slap")
    assert code == 0
    data = json.loads(out)
    assert data["concepts"] == ["lap", "slap"]
    assert data["rows"][7]["slap"] is True


def test_classify_order_columns(run, fixture_path):
    code, out, _ = run("--format", "json", "classify", fixture_path("fix_b.json"), "--concepts", "sldp",
                       "--order", 1, "--order", 2)
    assert code == 0
    data = json.loads(out)
    assert data["orders"] == [1, 2]
    assert all(r["order-1"] == r["sldp"] for r in data["rows"])

    code, out, _ = run("classify", fixture_path("fix_b.json"), "--concepts", "sldp", "--order", 2)
    assert code == 0
    assert out.splitlines()[0].rstrip().endswith(" | sldp | order-2")


def test_verify_on_a_model(run, fixture_path):
    code, out, _ = run("--format", "json", "verify", "two-sided", fixture_path("fix_d.json"))
    assert code == 0
    assert json.loads(out)[0]["theorem"] == "two-sided"


def test_verify_reports_informational_failures_without_failing(run, fixture_path):
    code, out, _ = run("verify", "sunk-cost-inclusion", fixture_path("case_b.json"))
    assert code == 0
    assert "VERIFIED" in out
    assert "info: no" in out


def test_verify_random_batch(run):
    code, out, _ = run("--seed", "4", "verify", "deletion-equivalence", "--random", "3")
    assert code == 0
    assert out.strip() == "deletion-equivalence: 3 of 3 instances verified"


def test_verify_needs_a_model_or_a_batch(run):
    code, _, err = run("verify", "deletion-equivalence")
    assert code == 2
    assert err.startswith("ERROR:")


def test_equilibria_variants(run, fixture_path):
    code, out, _ = run("equilibria", fixture_path("fix_f.json"))
    assert code == 0
    assert "{13,23}" in out and "((0,1), (0,1), (1,1))" in out

    code, out, _ = run("equilibria", fixture_path("superfluous.json"), "--variant", "two-sided")
    assert code == 0
    assert "{12}" in out

    code, out, _ = run("--format", "json", "equilibria", fixture_path("simplo.json"), "--variant", "one-sided")
    rows = json.loads(out)["rows"]
    assert [r["network"] for r in rows] == ["{}", "{12}"]
    assert rows[1]["payoffs"] == "(2, 10)"


def test_potentials_written_to_file(run, tmp_path):
    model = tmp_path / "degree.json"
    model.write_text(json.dumps(DEGREE_MODEL), encoding="utf-8")
    target = tmp_path / "out" / "potential.json"
    code, out, _ = run("potentials", model, "--out", target)
    assert code == 0
    assert "exact potential" in out
    data = json.loads(target.read_text(encoding="utf-8"))
    assert data["kind"] == "exact"
    assert data["values"]["12,13,23"] == "3"


def test_potentials_without_one(run, fixture_path):
    code, out, _ = run("potentials", fixture_path("fix_b.json"))
    assert code == 0
    assert '"reason": "the two endpoints' in out
    assert "exact potential" not in out


def test_correlated_devices(run, fixture_path):
    code, out, _ = run("correlated", fixture_path("chicken.json"), fixture_path("chicken_device_1.json"))
    assert code == 0
    assert "(9/2, 9/2)" in out

    code, out, _ = run("correlated", fixture_path("chicken.json"), fixture_path("chicken_device_2.json"))
    assert code == 1
    assert "S: 17/4, C: 21/4" in out


def test_correlated_device_on_a_network_model(run, fixture_path):
    code, _, _ = run("correlated", fixture_path("fix_f.json"), fixture_path("fix_f_device.json"))
    assert code == 1
    code, out, _ = run("correlated", fixture_path("fix_f.json"), fixture_path("fix_f_device.json"),
                       "--mode", "ex-ante")
    assert code == 0
    assert "(11/3, 19/6, 37/12)" in out


def test_generate_trade(run, tmp_path):
    code, out, _ = run("generate-trade", 3, "13/25")
    assert code == 0
    data = json.loads(out)
    assert data["payoffs"]["12"] == ["-1/100", "-1/100", "0"]
    assert data["source"]["generator"] == "trade"

    target = tmp_path / "trade.json"
    code, out, _ = run("generate-trade", 3, "13/25", "--out", target)
    assert code == 0 and target.exists()


def test_export_dot(run, fixture_path, tmp_path):
    code, out, _ = run("export-dot", fixture_path("fix_a.json"), tmp_path / "dot")
    assert code == 0
    assert out.startswith("Wrote 8 DOT files")
    assert (tmp_path / "dot" / "g7.dot").exists()


def test_errors_exit_with_code_two(run, tmp_path, fixture_path):
    code, _, err = run("classify", tmp_path / "missing.json")
    assert code == 2 and err.startswith("ERROR:")

    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "payoffs": {"12": [0.5, 1]}}', encoding="utf-8")
    code, _, err = run("classify", bad)
    assert code == 2 and "inexact" in err

    code, _, _ = run("verify", "no-such-theorem", fixture_path("fix_a.json"))
    assert code == 2
