import json

import pytest
from conftest import FIXTURES

from deskrisk import Assignment, basic_objective, load_instance, soft_objective
from deskrisk.cli import run_cli


def read_report(path):
    return json.loads(path.read_text())


class TestValidateCommand:
    def test_valid_fixture(self, capsys):
        assert run_cli(["validate", str(FIXTURES / "frac_2x2.json")]) == 0
        assert capsys.readouterr().out.strip() == "ok"

    def test_invalid_instance_lists_violations(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"n": 1, "m": 1, "papers": [[]], "p": [2.0]}))
        assert run_cli(["validate", str(path)]) == 1
        out = capsys.readouterr().out
        assert "paper 1 has no authors" in out
        assert "p_1 out of [0,1]" in out

    def test_missing_file(self, capsys):
        assert run_cli(["validate", "no-such-file.json"]) == 1


class TestGenCommand:
    def test_generates_a_valid_instance_file(self, tmp_path):
        out = tmp_path / "gen.json"
        code = run_cli(
            ["gen", "--n", "99", "--m", "20", "--amin", "3", "--amax", "8",
             "--seed", "7", "-o", str(out)]
        )
        assert code == 0
        inst = load_instance(out)
        assert inst.n == 99
        assert run_cli(["validate", str(out)]) == 0

    def test_impossible_spec_is_an_input_error(self, tmp_path, capsys):
        code = run_cli(
            ["gen", "--n", "5", "--m", "2", "--amin", "3", "--amax", "3",
             "-o", str(tmp_path / "x.json")]
        )
        assert code == 1
        assert "error:" in capsys.readouterr().err


class TestSolveCommand:
    def test_infeasible_instance_exits_2(self, tmp_path):
        out = tmp_path / "report.json"
        code = run_cli(
            ["solve", str(FIXTURES / "infeasible_5x1.json"), "--variant", "hard",
             "--b", "2", "--algorithm", "flow", "-o", str(out)]
        )
        assert code == 2
        report = read_report(out)
        assert report["status"] == "Infeasible"
        assert report["objective"] is None

    @pytest.mark.parametrize("algorithm", ["lp", "oracle"])
    def test_other_hard_algorithms_agree_on_infeasibility(self, algorithm, capsys):
        code = run_cli(
            ["solve", str(FIXTURES / "infeasible_5x1.json"), "--variant", "hard",
             "--b", "2", "--algorithm", algorithm]
        )
        assert code == 2

    def test_hard_lp_reports_one_third_and_integrality_flag(self, tmp_path):
        out = tmp_path / "report.json"
        code = run_cli(
            ["solve", str(FIXTURES / "frac_2x2.json"), "--variant", "hard",
             "--b", "1", "--algorithm", "lp", "-o", str(out)]
        )
        assert code == 0
        report = read_report(out)
        assert report["objective"] == pytest.approx(1 / 3, abs=1e-7)
        assert report["integral"] in (True, False)

    def test_greedy_objective_reevaluates_from_the_report(self, tmp_path):
        inst_path = tmp_path / "inst.json"
        run_cli(["gen", "--n", "99", "--m", "20", "--amin", "3", "--amax", "8",
                 "--seed", "7", "-o", str(inst_path)])
        out = tmp_path / "report.json"
        code = run_cli(
            ["solve", str(inst_path), "--variant", "basic", "--algorithm", "greedy",
             "-o", str(out)]
        )
        assert code == 0
        report = read_report(out)
        inst = load_instance(inst_path)
        assignment = Assignment(nominee=tuple(report["nominee"]))
        assert basic_objective(inst, assignment) == report["objective"]
        assert report["objective"] == sum(min(inst.p[j - 1] for j in row) for row in inst.rows)

    def test_soft_report_carries_bound_and_gap(self, tmp_path):
        out = tmp_path / "report.json"
        code = run_cli(
            ["solve", str(FIXTURES / "infeasible_5x1.json"), "--variant", "soft",
             "--b", "2", "--lambda", "0.4", "--algorithm", "lp-round", "-o", str(out)]
        )
        assert code == 0
        report = read_report(out)
        assert report["lp_bound"] == pytest.approx(1.7, abs=1e-7)
        assert report["gap"] == pytest.approx(0.0, abs=1e-7)
        assert report["objective"] == pytest.approx(
            report["expected_rejections"] + report["penalty"], abs=1e-9
        )
        inst = load_instance(FIXTURES / "infeasible_5x1.json")
        assignment = Assignment(nominee=tuple(report["nominee"]))
        objective, _, _ = soft_objective(inst, assignment, b=2, lam=0.4)
        assert objective == report["objective"]

    def test_exact_flow_agrees_with_lp_round_here(self, tmp_path):
        out = tmp_path / "report.json"
        code = run_cli(
            ["solve", str(FIXTURES / "infeasible_5x1.json"), "--variant", "soft",
             "--b", "2", "--lambda", "0.4", "--algorithm", "exact-flow", "-o", str(out)]
        )
        assert code == 0
        assert read_report(out)["objective"] == pytest.approx(1.7, abs=1e-9)

    def test_seeded_baseline_reports_are_byte_identical(self, tmp_path):
        first = tmp_path / "a.json"
        second = tmp_path / "b.json"
        for out in (first, second):
            code = run_cli(
                ["solve", str(FIXTURES / "prop35_tie_2x2.json"), "--variant", "hard",
                 "--b", "1", "--algorithm", "baseline-rand", "--seed", "0",
                 "-o", str(out)]
            )
            assert code == 0
        assert first.read_bytes() == second.read_bytes()

    def test_baseline_err_maps_to_infeasible_exit(self, tmp_path):
        code = run_cli(
            ["solve", str(FIXTURES / "prop35_tie_2x2.json"), "--variant", "hard",
             "--b", "1", "--algorithm", "baseline-rand", "--seed", "1",
             "-o", str(tmp_path / "r.json")]
        )
        assert code == 2

    def test_missing_limit_is_an_input_error(self, capsys):
        code = run_cli(
            ["solve", str(FIXTURES / "frac_2x2.json"), "--variant", "hard",
             "--algorithm", "flow"]
        )
        assert code == 1

    def test_wrong_variant_algorithm_combo_is_an_input_error(self, capsys):
        code = run_cli(
            ["solve", str(FIXTURES / "frac_2x2.json"), "--variant", "basic",
             "--algorithm", "flow"]
        )
        assert code == 1
        assert "does not apply" in capsys.readouterr().err

    def test_unknown_flag_exits_1_with_usage(self, capsys):
        code = run_cli(["solve", "x.json", "--frobnicate"])
        assert code == 1

    def test_help_exits_0(self, capsys):
        assert run_cli(["--help"]) == 0

    def test_dump_network_and_lp(self, tmp_path):
        net_path = tmp_path / "net.json"
        run_cli(
            ["solve", str(FIXTURES / "prop35_tie_2x2.json"), "--variant", "hard",
             "--b", "1", "--algorithm", "flow", "--dump-network", str(net_path),
             "-o", str(tmp_path / "r.json")]
        )
        net = json.loads(net_path.read_text())
        assert net["num_vertices"] == 6
        assert len(net["edges"]) == 8

        lp_path = tmp_path / "lp.json"
        run_cli(
            ["solve", str(FIXTURES / "frac_2x2.json"), "--variant", "hard",
             "--b", "1", "--algorithm", "lp", "--dump-lp", str(lp_path),
             "-o", str(tmp_path / "r2.json")]
        )
        lp = json.loads(lp_path.read_text())
        assert lp["num_vars"] == 4
        assert len(lp["eq"]) == 2


class TestOracleCommand:
    def test_oracle_subcommand_matches_solver(self, tmp_path):
        out = tmp_path / "report.json"
        code = run_cli(
            ["oracle", str(FIXTURES / "prop35_skew_2x2.json"), "--variant", "hard",
             "--b", "1", "-o", str(out)]
        )
        assert code == 0
        assert read_report(out)["objective"] == pytest.approx(0.1 + 0.9, abs=1e-9)

    def test_oracle_infeasible_exit(self):
        code = run_cli(
            ["oracle", str(FIXTURES / "infeasible_5x1.json"), "--variant", "hard",
             "--b", "2"]
        )
        assert code == 2

    def test_enumeration_cap_is_an_input_error(self, capsys):
        code = run_cli(
            ["oracle", str(FIXTURES / "frac_2x2.json"), "--variant", "basic",
             "--cap", "3"]
        )
        assert code == 1
        assert "enumeration cap" in capsys.readouterr().err


class TestImportCsvCommand:
    def test_csv_to_json(self, tmp_path):
        pairs = tmp_path / "pairs.csv"
        probs = tmp_path / "p.csv"
        pairs.write_text("paper_id,author_id\n1,1\n1,2\n2,1\n")
        probs.write_text("author_id,p\n1,0.1\n2,0.2\n")
        out = tmp_path / "inst.json"
        code = run_cli(["import-csv", str(pairs), str(probs), "--b", "1", "-o", str(out)])
        assert code == 0
        inst = load_instance(out)
        assert inst.rows == ((1, 2), (1,))
        assert inst.b == 1

    def test_duplicate_pairs_are_an_input_error(self, tmp_path, capsys):
        pairs = tmp_path / "pairs.csv"
        probs = tmp_path / "p.csv"
        pairs.write_text("1,1\n1,1\n")
        probs.write_text("1,0.5\n")
        code = run_cli(["import-csv", str(pairs), str(probs), "-o", str(tmp_path / "o.json")])
        assert code == 1
        assert "duplicate" in capsys.readouterr().err
