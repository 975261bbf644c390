import csv
import io
import json

import pytest

from cli import (
    RunConfig,
    UsageError,
    config_hash,
    load_run_config,
    main,
    render_csv,
    save_run_config,
)


def _run(argv):
    stream = io.StringIO()
    code = main(argv, stream=stream)
    return code, stream.getvalue()


def _csv_rows(text):
    lines = text.splitlines()
    assert lines[0].startswith("# config_hash=")
    return list(csv.DictReader(lines[1:]))


def test_thresholds_table():
    code, text = _run(["thresholds", "--rates", "0.25,0.5,0.75"])
    assert code == 0
    assert text.splitlines()[1] == "q,R,easy,classical,tractable"
    rows = _csv_rows(text)
    assert [float(row["R"]) for row in rows] == [0.25, 0.5, 0.75]
    middle = rows[1]
    assert float(middle["easy"]) == pytest.approx(0.0670, abs=1e-4)
    assert float(middle["classical"]) == pytest.approx(0.1100, abs=1e-4)
    assert float(middle["tractable"]) == pytest.approx(0.1871, abs=1e-4)


def test_thresholds_needs_two_rates():
    assert _run(["thresholds", "--rates", "0.5"])[0] == 1


def test_reruns_are_byte_identical():
    argv = ["solve-qdp", "--n", "30", "--k", "10", "--omega", "0.05", "--trials", "4", "--seed", "7"]
    first, second = _run(argv), _run(argv)
    assert first[0] == 0
    assert first == second
    assert _run(argv[:-1] + ["8"])[1] != first[1]


def test_noiseless_runs_always_succeed():
    code, text = _run(["solve-qdp", "--n", "40", "--k", "10", "--omega", "0", "--trials", "5", "--seed", "1"])
    assert code == 0
    rows = _csv_rows(text)
    assert len(rows) == 5
    assert all(row["success"] == "1" for row in rows)


def test_out_directory_and_manifest(tmp_path):
    argv = ["solve-qdp", "--n", "30", "--k", "10", "--omega", "0.05", "--trials", "3", "--seed", "3",
            "--out", str(tmp_path)]
    assert main(argv) == 0
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    results = (tmp_path / "results.csv").read_text()
    assert results.startswith(f"# config_hash={manifest['config_hash']}\n")
    assert manifest["subcommand"] == "solve-qdp"
    assert manifest["files"] == ["results.csv"]
    assert manifest["seeds"]["root"] == 3
    assert len(manifest["seeds"]["trials"]) == 3
    assert manifest["summary"]["trials"] == 3
    assert "created_at" in manifest


def test_json_format(tmp_path):
    argv = ["solve-qdp", "--n", "30", "--k", "10", "--omega", "0.0", "--trials", "2", "--format", "json",
            "--out", str(tmp_path)]
    assert main(argv) == 0
    records = [json.loads(line) for line in (tmp_path / "results.jsonl").read_text().splitlines()]
    assert [record["trial"] for record in records] == [0, 1]
    assert all(record["config_hash"] and record["success"] == 1 for record in records)


def test_yaml_config_with_flag_override(tmp_path):
    path = tmp_path / "run.yaml"
    save_run_config(RunConfig(subcommand="solve-qdp", n=40, k=10, omega=0.0, trials=3, seed=5), path)
    run_config = load_run_config({"subcommand": "solve-qdp", "trials": 5, "omega": None}, path)
    assert (run_config.n, run_config.k, run_config.trials, run_config.seed) == (40, 10, 5, 5)
    assert load_run_config({"subcommand": "solve-qdp"}, path) == RunConfig(
        subcommand="solve-qdp", n=40, k=10, omega=0.0, trials=3, seed=5)

    code, text = _run(["solve-qdp", "--config", str(path), "--trials", "2"])
    assert code == 0
    assert len(_csv_rows(text)) == 2


def test_config_hash_ignores_the_output_location():
    base = RunConfig(subcommand="pgm", n=3, omega=0.1)
    assert config_hash(base) == config_hash(RunConfig(subcommand="pgm", n=3, omega=0.1, out="elsewhere"))
    assert config_hash(base) != config_hash(RunConfig(subcommand="pgm", n=3, omega=0.1, seed=1))
    assert render_csv(base.config_hash, ["a"], [[1]]) == f"# config_hash={base.config_hash}\na\n1\n"


@pytest.mark.parametrize("values", [
    {"subcommand": "solve-qdp", "n": 4, "k": 5},
    {"subcommand": "solve-qdp", "field": "6"},
    {"subcommand": "solve-qdp", "omega": 1.5},
    {"subcommand": "solve-qdp", "solver": "partial_usd", "omega": 0.1, "omega_prime": 0.2},
    {"subcommand": "nope"},
])
def test_invalid_configs(values):
    with pytest.raises(UsageError):
        load_run_config(values)


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["solve-qdp", "--n", "10"],
    ["solve-qdp", "--n", "10", "--k", "20", "--omega", "0.1"],
    ["solve-qdp", "--n", "10", "--k", "5", "--omega", "0.1", "--field", "4"],
    ["solve-qdp", "--n", "10", "--k", "5", "--omega", "0.1", "--solver", "partial_usd"],
    ["solve-qdp", "--n", "10", "--k", "5", "--omega", "0.1", "--theta", "1.0", "--solver", "pgm"],
    ["reduce", "--n", "40", "--k", "20", "--omega-prime", "0.2"],
])
def test_usage_errors_exit_with_one(argv):
    assert _run(argv)[0] == 1


def test_budget_exit_code():
    argv = ["solve-qdp", "--n", "40", "--k", "30", "--omega", "0.1", "--solver", "ml", "--budget", "1000"]
    assert _run(argv)[0] == 2


def test_verification_failure_exit_code(tmp_path, monkeypatch):
    monkeypatch.setattr("cli.verify.CHECKS", [("always_fails", lambda rng: (False, "forced"))])
    assert main(["verify", "--out", str(tmp_path)]) == 3
    rows = _csv_rows((tmp_path / "verify.csv").read_text())
    assert rows == [{"check": "always_fails", "status": "FAIL", "detail": "forced"}]
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["summary"]["failed"] == ["always_fails"]


def test_failing_check_that_raises_is_reported(monkeypatch):
    def broken(rng):
        raise RuntimeError("boom")

    monkeypatch.setattr("cli.verify.CHECKS", [("ok", lambda rng: (True, "")), ("broken", broken)])
    code, text = _run(["verify"])
    assert code == 3
    assert [row["status"] for row in _csv_rows(text)] == ["pass", "FAIL"]


@pytest.mark.slow
def test_verify_suite_passes():
    code, text = _run(["verify", "--seed", "1"])
    assert code == 0, text
    assert all(row["status"] == "pass" for row in _csv_rows(text))


def test_pgm_on_the_repetition_code(tmp_path):
    argv = ["pgm", "--code", "repetition", "--n", "3", "--omega", "0.1", "--out", str(tmp_path)]
    assert main(argv) == 0
    document = json.loads((tmp_path / "pgm_spectrum.json").read_text())
    assert document["p_pgm"] == pytest.approx(0.98819, abs=1e-5)
    assert document["counterexample"]["outcome"] == "bottom"
    weights = _csv_rows((tmp_path / "pgm_weights.csv").read_text())
    assert sum(float(row["p_plain"]) for row in weights) == pytest.approx(1.0)


def test_reduce_writes_trials_and_weights(tmp_path):
    argv = ["reduce", "--n", "60", "--k", "30", "--omega-prime", "0.3", "--trials", "4", "--out", str(tmp_path)]
    assert main(argv) == 0
    records = [json.loads(line) for line in (tmp_path / "reduce_trials.jsonl").read_text().splitlines()]
    assert len(records) == 4
    assert all(record["variant"] == "usd_path" for record in records)
    assert _csv_rows((tmp_path / "weights.csv").read_text()) is not None


def test_prange_and_sweep_tables():
    code, text = _run(["prange", "--n", "40", "--k", "20", "--omega-prime", "0.3", "--trials", "3"])
    assert code == 0
    assert text.splitlines()[1] == "weight,prange,usd_path"
    code, text = _run(["sweep", "--n", "8", "--k", "4", "--omega-grid", "0.05,0.2", "--trials", "20"])
    assert code == 0
    assert [float(row["omega"]) for row in _csv_rows(text)] == [0.05, 0.2]
