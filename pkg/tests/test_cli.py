import json

import pytest

from lattice_qre import cli


def run_cli(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEstimate:
    def test_qubitization_table_row(self, capsys):
        code, out, _ = run_cli(
            ["estimate", "--model", "fh", "--method", "qubitization", "--L", "8"],
            capsys)
        assert code == 0
        assert "1.36e+06" in out
        assert " 160" in out

    def test_json_full_precision(self, capsys):
        code, out, _ = run_cli(
            ["estimate", "--model", "fh", "--method", "trotter",
             "--strategy", "catalyzed", "--L", "4", "--format", "json"],
            capsys)
        assert code == 0
        payload = json.loads(out)
        row = payload["rows"][0]
        assert row["L"] == 4
        assert row["qubits"] == 66
        assert isinstance(row["toffoli"], float)

    def test_coupling_override(self, capsys):
        code, out, _ = run_cli(
            ["estimate", "--model", "fh", "--method", "qubitization",
             "--L", "4", "--u", "16", "--format", "json"], capsys)
        assert code == 0
        # doubling u raises lambda from 96 to 128, scaling the query count
        assert json.loads(out)["rows"][0]["toffoli"] > 5e5

    def test_config_file(self, tmp_path, capsys):
        path = tmp_path / "run.cfg"
        path.write_text("model = cuprate\nL = 8\nt_prime = 0.3\n")
        code, out, _ = run_cli(
            ["estimate", "--config", str(path), "--method", "qubitization",
             "--format", "json"], capsys)
        assert code == 0
        assert json.loads(out)["rows"][0]["model"] == "cuprate"

    def test_config_delta_e_override(self, tmp_path, capsys):
        path = tmp_path / "run.cfg"
        path.write_text("model = fh\nL = 8\ndelta_E_override = 0.1632\n")
        code, out, _ = run_cli(
            ["estimate", "--config", str(path), "--method", "qubitization",
             "--format", "json"], capsys)
        assert code == 0
        # halving the error target doubles the leading toffoli cost
        assert json.loads(out)["rows"][0]["toffoli"] > 2.4e6

    def test_missing_model_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["estimate", "--L", "4"])
        assert exc.value.code == 2

    def test_bad_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["estimate", "--model", "bogus", "--L", "4"])
        assert exc.value.code == 2

    def test_infeasible_exits_3(self, capsys):
        code, _, err = run_cli(
            ["estimate", "--model", "fh", "--method", "trotter", "--L", "4",
             "--delta-e", "-1"], capsys)
        assert code == 3
        assert "infeasible" in err


class TestSweep:
    def test_range(self, capsys):
        code, out, _ = run_cli(
            ["sweep", "--model", "fh", "--method", "qubitization",
             "--L-range", "4:8", "--format", "csv"], capsys)
        assert code == 0
        rows = cli.rows_from_csv(out)
        assert [r.L for r in rows] == [4, 6, 8]

    def test_comma_list(self, capsys):
        code, out, _ = run_cli(
            ["sweep", "--model", "pnictide", "--method", "qubitization",
             "--L-range", "4,8", "--format", "csv"], capsys)
        assert code == 0
        assert [r.L for r in cli.rows_from_csv(out)] == [4, 8]

    def test_bad_range_exits_2(self, capsys):
        code, _, err = run_cli(
            ["sweep", "--model", "fh", "--L-range", "4:8:2:1"], capsys)
        assert code == 2
        assert "error" in err


class TestAmortizeCatalyst:
    def test_flag_never_increases_cost(self, capsys):
        base_args = ["estimate", "--model", "fh", "--method", "trotter",
                     "--strategy", "catalyzed", "--L", "4", "--format", "json"]
        code, out, _ = run_cli(base_args, capsys)
        assert code == 0
        charged = json.loads(out)["rows"][0]["toffoli"]
        code, out, _ = run_cli(base_args + ["--amortize-catalyst"], capsys)
        assert code == 0
        amortized = json.loads(out)["rows"][0]["toffoli"]
        assert amortized <= charged


class TestReproduce:
    def test_table_one_deviations(self, capsys):
        code, out, err = run_cli(
            ["reproduce", "supp-table-1", "--format", "csv"], capsys)
        assert code == 0
        rows = cli.rows_from_csv(out)
        assert len(rows) == 15
        assert all(abs(r.rel_dev) <= 0.02 for r in rows)
        assert "max relative toffoli deviation" in err

    def test_strategy_filter(self, capsys):
        code, out, _ = run_cli(
            ["reproduce", "supp-table-5", "--strategy", "batched-baseline",
             "--format", "csv"], capsys)
        assert code == 0
        rows = cli.rows_from_csv(out)
        assert len(rows) == 8
        assert {r.strategy for r in rows} == {"batched-baseline"}

    def test_unknown_table_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["reproduce", "supp-table-9"])
        assert exc.value.code == 2


class TestCsvRoundTrip:
    def test_exact(self, capsys):
        code, out, _ = run_cli(
            ["reproduce", "supp-table-4", "--strategy", "catalyzed",
             "--format", "csv"], capsys)
        assert code == 0
        rows = cli.rows_from_csv(out)
        assert cli.rows_to_csv(rows) == out

    def test_output_file(self, tmp_path, capsys):
        path = tmp_path / "rows.csv"
        code, _, _ = run_cli(
            ["sweep", "--model", "fh", "--method", "qubitization",
             "--L-range", "4:6", "--format", "csv", "--output", str(path)],
            capsys)
        assert code == 0
        assert len(cli.rows_from_csv(path.read_text())) == 2


class TestVerifyCommand:
    def test_exit_zero_and_report(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        code, _, _ = run_cli(["verify", "--output", str(path)], capsys)
        assert code == 0
        report = json.loads(path.read_text())
        assert all(entry["passed"] for entry in report)
