import csv
import json

import pytest

from karabounds import cli


def run(argv):
    return cli.main(argv)


class TestVerifyCommand:
    def test_single_suite_exit_zero(self, tmp_path, capsys):
        out = tmp_path / "rep.json"
        code = run(["verify", "--suite", "fuchs", "--trials", "25", "--seed", "1",
                    "--out", str(out)])
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload[0]["suite_id"] == "fuchs"
        assert payload[0]["failures"] == 0
        assert "elapsed_ms" not in payload[0]

    def test_zero_trials_empty_report(self, tmp_path):
        out = tmp_path / "rep.json"
        code = run(["verify", "--suite", "entropy_vn", "--trials", "0", "--seed", "9",
                    "--out", str(out)])
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload[0]["trials"] == 0
        assert payload[0]["failures"] == 0

    def test_unknown_suite_usage_error(self):
        with pytest.raises(SystemExit) as err:
            run(["verify", "--suite", "nonsense", "--trials", "5"])
        assert err.value.code == 2

    def test_negative_trials_usage_error(self):
        assert run(["verify", "--suite", "fuchs", "--trials", "-3"]) == 2

    def test_failing_suite_exit_one(self, tmp_path):
        out = tmp_path / "rep.json"
        code = run(["verify", "--suite", "mean_c_lhs_variant", "--trials", "6",
                    "--seed", "3", "--out", str(out)])
        assert code == 1
        payload = json.loads(out.read_text())
        assert payload[0]["failures"] > 0

    def test_seed_determinism_byte_identical(self, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        argv = ["verify", "--suite", "theorem_beta", "--trials", "20", "--seed", "42"]
        assert run(argv + ["--out", str(a)]) == 0
        assert run(argv + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_csv_streaming_rows(self, tmp_path):
        out = tmp_path / "rows.csv"
        code = run(["verify", "--suite", "entropy_vn", "--trials", "8", "--seed", "2",
                    "--format", "csv", "--out", str(out)])
        assert code == 0
        with open(out, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["suite_id", "trial", "margin", "pass", "dim", "r",
                           "alpha", "eps", "seed", "inequality_id"]
        assert len(rows) == 1 + 2 * 8  # two inequalities per trial
        assert all(row[3] == "1" for row in rows[1:])

    def test_dims_flag_restricts_dimensions(self, tmp_path):
        out = tmp_path / "rows.csv"
        run(["verify", "--suite", "entropy_vn", "--trials", "6", "--seed", "2",
             "--dims", "3", "--format", "csv", "--out", str(out)])
        with open(out, newline="") as fh:
            rows = list(csv.reader(fh))[1:]
        assert {row[4] for row in rows} == {"3"}

    def test_config_file_defaults_and_flag_override(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"suite": "fuchs", "trials": 4, "seed": 5}))
        out1 = tmp_path / "r1.json"
        assert run(["verify", "--config", str(cfg), "--out", str(out1)]) == 0
        payload = json.loads(out1.read_text())
        assert payload[0]["suite_id"] == "fuchs"
        assert payload[0]["trials"] == 4
        out2 = tmp_path / "r2.json"
        assert run(["verify", "--config", str(cfg), "--trials", "7",
                    "--out", str(out2)]) == 0
        assert json.loads(out2.read_text())[0]["trials"] == 7


class TestConstantsCommand:
    def test_default_rows_agree_with_oracle(self, tmp_path):
        out = tmp_path / "c.json"
        assert run(["constants", "--eps", "0.1", "--out", str(out)]) == 0
        rows = {row["name"]: row for row in json.loads(out.read_text())}
        assert rows["diff_neg_log_logS"]["abs_diff"] <= 1e-8
        assert rows["kantorovich_r_to_0"]["abs_diff"] <= 1e-5
        assert rows["linear_ratio_is_one"]["abs_diff"] <= 1e-9
        assert rows["linear_diff_is_zero"]["abs_diff"] <= 1e-9
        for row in rows.values():
            if row["name"] not in ("kantorovich_r_to_0",):
                assert row["abs_diff"] <= 1e-7, row

    def test_bad_eps_usage_error(self):
        assert run(["constants", "--eps", "1.5"]) == 2


class TestScanCommand:
    def test_fannes_crossover(self, tmp_path):
        out = tmp_path / "f.json"
        assert run(["scan", "fannes", "--dims", "1,2,3,4,5,6,7,8,9,10",
                    "--out", str(out)]) == 0
        rows = json.loads(out.read_text())
        tighter = {row["dim"]: row["tighter"] for row in rows}
        assert tighter[1] == "equal"
        assert all(tighter[d] == "ours" for d in range(2, 6))
        assert all(tighter[d] == "fannes_weak" for d in range(6, 11))

    def test_ls_r_scan_flags_bound(self, tmp_path):
        out = tmp_path / "ls.json"
        assert run(["scan", "ls_r", "--eps", "0.5", "--start", "0.1", "--stop", "2.0",
                    "--steps", "20", "--out", str(out)]) == 0
        rows = json.loads(out.read_text())
        assert len(rows) == 20
        assert all(row["ls_r"] >= 0.0 for row in rows)

    def test_specht_symmetry_scan(self, tmp_path):
        out = tmp_path / "s.json"
        assert run(["scan", "specht", "--start", "1.5", "--stop", "50.0",
                    "--steps", "12", "--out", str(out)]) == 0
        rows = json.loads(out.read_text())
        assert all(row["symmetry_gap"] <= 1e-12 * row["specht"] for row in rows)

    def test_empty_range_usage_error(self):
        assert run(["scan", "ls_r", "--steps", "0"]) == 2

    def test_csv_format(self, tmp_path):
        out = tmp_path / "k.csv"
        assert run(["scan", "kantorovich", "--h", "3.0", "--steps", "5",
                    "--format", "csv", "--out", str(out)]) == 0
        with open(out, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 5
        assert {"h", "r", "kantorovich"} <= set(rows[0])


class TestOracleCommand:
    def test_default_sweep_passes(self, tmp_path):
        out = tmp_path / "o.json"
        assert run(["oracle", "--out", str(out)]) == 0
        payload = json.loads(out.read_text())
        assert payload["pass"] is True
        assert payload["worst_abs_diff"] <= 1e-7

    def test_injected_error_exits_one(self, tmp_path, monkeypatch):
        from karabounds import verification as vf
        monkeypatch.setattr(vf.sb, "specht", lambda h: 1.0)
        out = tmp_path / "o.json"
        assert run(["oracle", "--out", str(out)]) == 1
