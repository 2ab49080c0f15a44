import csv
import io
import json
from pathlib import Path

import pytest

from qflab import cli, scenarios
from qflab.scenarios import Scenario

FAST = ["f4-over-f2", "f8-over-f2", "gaussian-rationals"]
REPO_GOLDENS = Path(__file__).resolve().parent.parent / "goldens"


def _strip_timing(reports):
    return [{k: v for k, v in r.items() if k != "elapsed-ms"} for r in reports]


@pytest.fixture
def injected_fault(monkeypatch):
    def builder(rec, params):
        rec("dim W", "q_phi", 3, 4, witness="basis pair (1, 2)")
    monkeypatch.setitem(scenarios.CATALOG, "injected-fault", Scenario("injected-fault", "always fails", builder))
    return "injected-fault"


@pytest.fixture
def fast_catalog(monkeypatch):
    monkeypatch.setattr(cli, "CATALOG", {n: scenarios.CATALOG[n] for n in FAST})


# exit codes


def test_list_names_the_whole_catalog(capsys):
    assert cli.main(["list"]) == cli.EXIT_PASS
    out = capsys.readouterr().out
    names = [line.split()[0] for line in out.splitlines()]
    assert names == sorted(scenarios.CATALOG) and len(names) == 10


def test_passing_run_exits_zero(capsys):
    assert cli.main(["run", "f4-over-f2"]) == cli.EXIT_PASS
    assert "f4-over-f2" in capsys.readouterr().out


def test_failing_run_exits_one_and_keeps_witness(capsys, injected_fault):
    assert cli.main(["run", injected_fault, "--format", "json"]) == cli.EXIT_FAIL
    rep = json.loads(capsys.readouterr().out)
    (a,) = rep["assertions"]
    assert a["verdict"] == "fail" and a["witness"] == "basis pair (1, 2)"
    assert (a["expected"], a["computed"]) == (3, 4)


def test_one_failure_fails_the_batch(capsys, injected_fault):
    assert cli.main(["run", "f4-over-f2", injected_fault]) == cli.EXIT_FAIL


@pytest.mark.parametrize("argv", [["run", "no-such-scenario"], ["run"], ["frobnicate"], [],
                                  ["run", "f4-over-f2", "--format", "yaml"], ["run", "f4-over-f2", "--all"],
                                  ["run", "f4-over-f2", "--workers", "0"], ["goldens"]])
def test_usage_errors_exit_two(capsys, argv):
    assert cli.main(argv) == cli.EXIT_USAGE
    assert "qflab:" in capsys.readouterr().err


def test_unknown_param_exits_two(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"scenario": "f4-over-f2", "params": {"p": 5}}))
    assert cli.main(["run", "--config", str(cfg)]) == cli.EXIT_USAGE


def test_guard_exits_three(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"scenario": "two-variable-char2", "params": {"degree": 2}}))
    assert cli.main(["run", "--config", str(cfg)]) == cli.EXIT_GUARD
    assert "guard" in capsys.readouterr().err


# configuration


@pytest.mark.parametrize("content,fragment", [
    ("{not json", "JSON"),
    ("[1, 2]", "object"),
    ('{"scenario": "f4-over-f2", "colour": "red"}', "unknown config keys"),
    ('{"scenario": "f4-over-f2", "params": 3}', "params"),
    ('{"scenario": "f4-over-f2", "format": "xml"}', "format"),
    ('{"scenario": "f4-over-f2", "workers": 0}', "workers"),
    ('{"scenario": 7}', "scenario"),
])
def test_config_validation(tmp_path, content, fragment):
    cfg = tmp_path / "c.json"
    cfg.write_text(content)
    with pytest.raises(scenarios.ConfigError, match=fragment):
        cli.load_config(cfg)


def test_missing_config_file_exits_two(tmp_path, capsys):
    assert cli.main(["run", "--config", str(tmp_path / "absent.json")]) == cli.EXIT_USAGE


def test_config_drives_the_run(tmp_path):
    out = tmp_path / "report.csv"
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"scenario": ["f8-over-f2"], "format": "csv", "out": str(out)}))
    assert cli.main(["run", "--config", str(cfg)]) == cli.EXIT_PASS
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert rows and {r["scenario"] for r in rows} == {"f8-over-f2"}


def test_flags_override_config(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"scenario": "f8-over-f2", "format": "csv"}))
    assert cli.main(["run", "--config", str(cfg), "--format", "json"]) == cli.EXIT_PASS
    assert json.loads(capsys.readouterr().out)["scenario"] == "f8-over-f2"


# formats


def test_json_report_shape(capsys):
    cli.main(["run", "gaussian-rationals", "--format", "json"])
    rep = json.loads(capsys.readouterr().out)
    assert set(rep) == {"scenario", "version", "assertions", "elapsed-ms"}
    for a in rep["assertions"]:
        assert {"name", "op", "expected", "computed", "verdict", "tag"} <= set(a)
        assert a["verdict"] == "pass"


def test_json_for_several_scenarios_is_a_list(capsys):
    cli.main(["run", "f8-over-f2", "f4-over-f2", "--format", "json"])
    reps = json.loads(capsys.readouterr().out)
    assert [r["scenario"] for r in reps] == ["f4-over-f2", "f8-over-f2"]


def test_csv_columns(capsys):
    cli.main(["run", "f4-over-f2", "--format", "csv"])
    reader = csv.DictReader(io.StringIO(capsys.readouterr().out))
    assert list(reader.fieldnames) == list(cli.CSV_COLUMNS)
    assert all(r["verdict"] == "pass" for r in reader)


def test_text_reports_each_assertion(capsys):
    cli.main(["run", "f4-over-f2", "--format", "text"])
    out = capsys.readouterr().out
    n = len(scenarios.run_scenario("f4-over-f2").assertions)
    assert out.count("pass") >= n


def test_out_writes_file_not_stdout(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert cli.main(["run", "f4-over-f2", "--format", "json", "--out", str(out)]) == cli.EXIT_PASS
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["scenario"] == "f4-over-f2"


def test_workers_do_not_change_results():
    one = [r.as_dict(timing=False) for r in cli.run_many(FAST, workers=1)]
    two = [r.as_dict(timing=False) for r in cli.run_many(list(reversed(FAST)), workers=2)]
    assert one == two


# goldens


def test_regen_then_verify(tmp_path, fast_catalog, capsys):
    d = tmp_path / "g"
    assert cli.main(["goldens", "regen", "--dir", str(d)]) == cli.EXIT_PASS
    assert sorted(p.stem for p in d.glob("*.json")) == sorted(FAST)
    assert cli.main(["goldens", "verify", "--dir", str(d)]) == cli.EXIT_PASS
    assert capsys.readouterr().out.count(": ok") >= len(FAST)


def test_perturbed_golden_fails_with_diff(tmp_path, fast_catalog, capsys):
    cli.regenerate_goldens(tmp_path)
    path = tmp_path / "f8-over-f2.json"
    data = json.loads(path.read_text())
    hit = next(a for a in data["assertions"] if isinstance(a["expected"], int) and "dim" in a["name"])
    hit["expected"] += 1
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    capsys.readouterr()
    assert cli.main(["goldens", "verify", "--dir", str(tmp_path)]) == cli.EXIT_FAIL
    out = capsys.readouterr().out
    assert "f8-over-f2: mismatch" in out
    assert any(line.startswith("  -") and str(hit["expected"]) in line for line in out.splitlines())
    assert "f4-over-f2: ok" in out


def test_missing_golden_fails(tmp_path, fast_catalog, capsys):
    cli.regenerate_goldens(tmp_path)
    (tmp_path / "gaussian-rationals.json").unlink()
    assert cli.main(["goldens", "verify", "--dir", str(tmp_path)]) == cli.EXIT_FAIL
    assert "missing golden" in capsys.readouterr().out


def test_golden_text_is_timing_free_and_stable():
    r = scenarios.run_scenario("f4-over-f2")
    text = cli.golden_text(r)
    assert "elapsed" not in text
    assert text == cli.golden_text(scenarios.run_scenario("f4-over-f2"))


def test_shipped_goldens_verify():
    ok, messages = cli.verify_goldens(REPO_GOLDENS, workers=2)
    assert ok, "\n".join(messages)
