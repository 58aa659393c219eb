import json

import pytest

from basisket.cli import SEED_ENV_VAR, cli_dispatch


def run(capsys, *argv):
    code = cli_dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBases:
    def test_prints_members_and_rho(self, capsys):
        code, out, _ = run(capsys, "bases", "--recipe", "C2,C2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "Q2,Q2"
        assert lines[1] == "0001000100011110"
        assert len([l for l in lines if set(l) <= {"0", "1"}]) == 16
        assert "zero-count 10" in out

    def test_bad_recipe_is_usage_error(self, capsys):
        code, _, err = run(capsys, "bases", "--recipe", "H,X")
        assert code == 1
        assert "error" in err


class TestClassify:
    def test_csv_summary(self, capsys):
        code, out, _ = run(capsys, "classify", "--recipe", "C2,C2",
                           "--function", "0000000100011110")
        assert code == 0
        assert "index,bitstring,probability" in out
        assert "distance 1" in out
        assert "theta 0.765625" in out
        assert "nearest_kets [0]" in out

    def test_json_to_file(self, capsys, tmp_path):
        target = tmp_path / "dist.json"
        code, out, _ = run(capsys, "classify", "--recipe", "H,C2",
                           "--function", "00000001", "--format", "json",
                           "--out", str(target))
        assert code == 0
        doc = json.loads(target.read_text())
        assert len(doc["outcomes"]) == 8
        assert abs(sum(r["probability"] for r in doc["outcomes"]) - 1) < 1e-12

    def test_length_mismatch(self, capsys):
        code, _, err = run(capsys, "classify", "--recipe", "C2,C2",
                           "--function", "0001")
        assert code == 1
        assert "mismatch" in err


class TestEnumerate:
    def test_csv_and_manifest(self, capsys, tmp_path):
        target = tmp_path / "profile.csv"
        code, _, _ = run(capsys, "enumerate", "--recipe", "H,C2",
                         "--out", str(target))
        assert code == 0
        lines = target.read_text().splitlines()
        assert lines[0] == "distance,count,mean_theta,min_theta,max_theta"
        assert lines[1].startswith("0,8,")
        manifest = json.loads((tmp_path / "profile.csv.manifest.json").read_text())
        assert manifest["subcommand"] == "enumerate"
        assert manifest["recipe"] == "H,C2"
        assert manifest["runtime_seconds"] > 0

    def test_ascii_histogram_to_stdout(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--recipe", "H,H,H",
                           "--hist", "ascii")
        assert code == 0
        assert "recipe H,H,H" in out
        assert "#" in out and "*" in out

    def test_length32_rejected(self, capsys):
        code, _, err = run(capsys, "enumerate", "--recipe", "C2,C2,H")
        assert code == 1
        assert "exhaustive cap" in err


class TestSample:
    def test_quotas_probes_and_regions(self, capsys, tmp_path):
        target = tmp_path / "sampled.json"
        code, out, _ = run(
            capsys, "sample", "--recipe", "C2,C2,H", "--seed", "5",
            "--quota", "1=20", "--quota", "2=20",
            "--format", "json", "--out", str(target))
        assert code == 0
        doc = json.loads(target.read_text())
        assert doc["mode"] == "sampled"
        assert doc["seed"] == 5
        assert doc["quotas"] == {"1": 20, "2": 20}
        assert "# probes:" in out
        assert "all_ones" in out
        assert "# region [1, 4] (above_half): consistent" in out

    def test_seed_env_var_default(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "77")
        out_a = tmp_path / "a.json"
        # the env default is baked into the parser at build time
        code, _, _ = run(capsys, "sample", "--recipe", "C2,C2,H",
                         "--quota", "1=10", "--format", "json",
                         "--out", str(out_a))
        assert code == 0
        assert json.loads(out_a.read_text())["seed"] == 77

    def test_svg_histogram_written(self, capsys, tmp_path):
        target = tmp_path / "prof.csv"
        code, out, _ = run(capsys, "sample", "--recipe", "C2,C2,H",
                           "--seed", "1", "--quota", "1=10",
                           "--out", str(target), "--hist", "svg")
        assert code == 0
        svg = (tmp_path / "prof.csv.svg").read_text()
        assert svg.startswith("<svg")
        assert "histogram written" in out


class TestTables:
    def test_table_8_matches(self, capsys):
        code, out, _ = run(capsys, "tables", "--which", "8")
        assert code == 0
        assert "all cells within tolerance" in out

    def test_table_3_reports_known_diffs(self, capsys):
        # the shared length-8 column does not hold for the all-H recipe;
        # the diff exit code is the honest outcome
        code, out, _ = run(capsys, "tables", "--which", "3")
        assert code == 2
        assert "DIFF" in out
        assert "H,H,H" in out
        diff_lines = [l for l in out.splitlines() if l.startswith("DIFF")]
        assert all("H,H,H d=2" in l for l in diff_lines)

    def test_unknown_table_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "tables", "--which", "4")
        assert code == 1


class TestGame:
    def test_summary_json(self, capsys):
        code, out, _ = run(capsys, "game", "--recipe", "C2,C2",
                           "--bob", "at_distance", "--distance", "8",
                           "--trials", "50", "--seed", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["alice_win_rate"] == 1.0
        assert doc["trials"] == 50

    def test_rounds_out(self, capsys, tmp_path):
        target = tmp_path / "rounds.jsonl"
        code, out, _ = run(capsys, "game", "--recipe", "C2,C2",
                           "--trials", "20", "--seed", "4",
                           "--rounds-out", str(target))
        assert code == 0
        records = [json.loads(l) for l in target.read_text().splitlines()]
        assert len(records) == 20
        wins = sum(r["alice_wins"] for r in records)
        assert json.loads(out)["alice_win_rate"] == pytest.approx(wins / 20)
        assert all(len(r["function"]) == 16 for r in records)


class TestTopLevel:
    def test_version(self, capsys):
        assert run(capsys, "--version")[0] == 0

    def test_missing_subcommand(self, capsys):
        assert run(capsys)[0] == 1
