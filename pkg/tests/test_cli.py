import json

import pytest

from hopfgenus import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


class TestSymmCommand:
    def test_identity_check(self, capsys):
        code, out = run(
            ["symm", "identity-check", "--which", "d-classes", "--max-weight", "10"],
            capsys,
        )
        assert code == 0
        report = json.loads(out)
        assert report["status"] == "exact-match"
        assert report["max_weight"] == 10
        assert report["config"]["degree"] == 30

    def test_a_classes(self, capsys):
        code, out = run(
            ["symm", "identity-check", "--which", "a-classes", "--max-weight", "10"],
            capsys,
        )
        assert code == 0
        assert json.loads(out)["status"] == "exact-match"


class TestMzvCommand:
    def test_eval(self, capsys):
        code, out = run(["mzv", "eval", "--index", "(2)", "--error", "1e-8"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["admissible"] is True
        assert abs(report["value"] - 1.6449340668) < 1e-8
        assert report["error_bound"] <= 1e-8

    def test_divergent_exit_1(self, capsys):
        code, out = run(["mzv", "eval", "--index", "(1)"], capsys)
        assert code == 1
        assert json.loads(out)["code"] == "divergent-index"

    def test_bad_index_exit_2(self, capsys):
        code, out = run(["mzv", "eval", "--index", "nope"], capsys)
        assert code == 2
        assert json.loads(out)["code"] == "parse-error"


class TestTorCommand:
    def test_exterior_csv(self, capsys):
        code, out = run(
            ["tor", "--algebra", "exterior:5,9", "--bound", "20", "--format", "csv"],
            capsys,
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "s,t,total,dim"
        assert "1,5,6,1" in lines

    def test_bound_guard(self, capsys):
        code, out = run(["tor", "--algebra", "exterior:5", "--bound", "40", "--degree", "30"], capsys)
        assert code == 1
        assert json.loads(out)["code"] == "value-error"

    def test_unknown_kind(self, capsys):
        code, out = run(["tor", "--algebra", "divided:5", "--bound", "10"], capsys)
        assert code == 2


class TestSeriesCommand:
    def test_thh(self, capsys):
        code, out = run(["series", "--which", "THH", "--bound", "12", "--format", "csv"], capsys)
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "degree,dim"
        assert lines[1] == "0,1"
        assert lines[-1] == "12,4"

    def test_model_flag(self, capsys):
        _, out_k = run(["series", "--which", "KTheoryFiber", "--bound", "4", "--format", "csv"], capsys)
        _, out_i = run(
            ["series", "--which", "KTheoryFiber", "--bound", "4", "--model", "igt0", "--format", "csv"],
            capsys,
        )
        assert "2,1" in out_k and "2,0" in out_i


class TestGenusCommand:
    def test_compute(self, capsys):
        code, out = run(["genus", "compute", "--manifold", "CP2", "--series", "A-hat"], capsys)
        assert code == 0
        assert json.loads(out)["value"] == "-1/8"

    def test_deform(self, capsys):
        code, out = run(
            ["genus", "deform", "--manifold", "CP1", "--series", "A-hat", "--t", "1:1/3,3:0"],
            capsys,
        )
        assert code == 0
        assert json.loads(out)["value"] == "2/3"

    def test_unknown_manifold(self, capsys):
        code, out = run(["genus", "compute", "--manifold", "K3"], capsys)
        assert code == 1
        assert json.loads(out)["code"] == "unknown-name"

    def test_manifold_file(self, capsys, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(
            json.dumps(
                {
                    "name": "myCP1",
                    "dim_c": 1,
                    "generators": [{"sym": "x", "deg": 2, "nilpotency": 1}],
                    "total_chern": "1 + 2*x[1]",
                    "volume_monomial": "x[1]",
                }
            )
        )
        code, out = run(
            ["genus", "compute", "--manifold-file", str(path), "--series", "Todd"],
            capsys,
        )
        assert code == 0
        assert json.loads(out)["value"] == "1"


class TestCoactionCommand:
    def test_cp1(self, capsys):
        code, out = run(["coaction", "--manifold", "CP1", "--class", "1", "--bound", "4"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["components"]["1"] == "1"
        assert report["components"]["y2"] == "-4*x[1]"


class TestConfigHandling:
    def test_file_then_flag_precedence(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"degree": 8}))
        code, out = run(
            ["symm", "identity-check", "--which", "d-classes", "--config", str(cfg)],
            capsys,
        )
        assert code == 0
        assert json.loads(out)["config"]["degree"] == 8
        code, out = run(
            [
                "symm",
                "identity-check",
                "--which",
                "d-classes",
                "--config",
                str(cfg),
                "--degree",
                "6",
            ],
            capsys,
        )
        assert json.loads(out)["config"]["degree"] == 6

    def test_malformed_config_exit_2(self, capsys, tmp_path):
        cfg = tmp_path / "bad.json"
        cfg.write_text("not json")
        code, out = run(["acceptance", "--config", str(cfg)], capsys)
        assert code == 2
        assert json.loads(out)["code"] == "config-error"

    def test_unknown_key_exit_2(self, capsys, tmp_path):
        cfg = tmp_path / "bad.json"
        cfg.write_text(json.dumps({"bogus": 1}))
        code, out = run(["series", "--which", "THH", "--bound", "4", "--config", str(cfg)], capsys)
        assert code == 2

    def test_determinism(self, capsys):
        argv = ["series", "--which", "sOmega", "--bound", "15", "--format", "json"]
        _, out1 = run(argv, capsys)
        _, out2 = run(argv, capsys)
        assert out1 == out2

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "out.csv"
        code, _ = run(
            ["series", "--which", "sOmega", "--bound", "5", "--format", "csv", "--output", str(path)],
            capsys,
        )
        assert code == 0
        assert path.read_text().startswith("degree,dim")


class TestAcceptanceCommand:
    def test_subset_runs(self, capsys):
        code, out = run(["acceptance", "--only", "4", "7", "12"], capsys)
        assert code == 0
        assert "all passed" in out

    def test_lowered_degree_skips(self, capsys):
        code, out = run(["acceptance", "--only", "1", "9", "--degree", "4"], capsys)
        assert code == 0
        assert "SKIPPED" in out and "FAIL" not in out

    def test_json_format(self, capsys):
        code, out = run(["acceptance", "--only", "10", "--format", "json"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["all_passed"] is True
        assert report["results"][0]["id"] == 10
