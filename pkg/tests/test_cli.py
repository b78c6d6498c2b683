"""Command-line interface: subcommands, reports, exit-code contract."""

import json

import pytest

from h14.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_config(tmp_path, data, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


class TestCheckConditions:
    def test_default_instance(self, capsys):
        code, out, _ = run(capsys, "check-conditions")
        assert code == 0
        assert "value\t3/4" in out
        assert "holds\tTrue" in out

    def test_n3_counterexample(self, capsys, tmp_path):
        cfg = write_config(tmp_path, {"n": 3, "gamma": 1, "delta": [[3, 1], [1, 1]]})
        code, out, _ = run(capsys, "check-conditions", "--config", cfg)
        assert code == 0
        assert "value\t5/4" in out
        assert "holds\tFalse" in out
        assert "det_T\t2" in out

    def test_malformed_delta(self, capsys, tmp_path):
        cfg = write_config(tmp_path, {"n": 3, "gamma": 1, "delta": [[0, 1], [1, 1]]})
        code, _, err = run(capsys, "check-conditions", "--config", cfg)
        assert code == 2
        assert "delta" in err

    def test_unknown_key_rejected(self, capsys, tmp_path):
        cfg = write_config(tmp_path, {"n": 3, "gamma": 1, "delta": [[1, 1], [1, 1]], "x": 1})
        code, _, err = run(capsys, "check-conditions", "--config", cfg)
        assert code == 2
        assert "unknown config keys" in err


class TestHilbert:
    def test_worked_example(self, capsys, tmp_path):
        cfg = write_config(tmp_path, {"U": [[1, 1], [1, -1]]})
        code, out, _ = run(capsys, "hilbert", "--config", cfg)
        assert code == 0
        assert "1 * X1^1 X2^1" in out
        assert "1 * X1^2 X2^0" in out
        assert "1 * X1^0 X2^2" in out

    def test_identity_u(self, capsys, tmp_path):
        cfg = write_config(tmp_path, {"U": [[1, 0], [0, 1]]})
        code, out, _ = run(capsys, "hilbert", "--config", cfg)
        assert code == 0
        assert "1 * X1^1 X2^0" in out and "1 * X1^0 X2^1" in out

    def test_rank_deficient_exit3(self, capsys, tmp_path):
        cfg = write_config(tmp_path, {"U": [[1, 1], [2, 2]]})
        code, _, err = run(capsys, "hilbert", "--config", cfg)
        assert code == 3

    def test_missing_u(self, capsys, tmp_path):
        cfg = write_config(tmp_path, {"n": 4, "gamma": 1, "delta": [[1, 1, 1]] * 3})
        code, _, _ = run(capsys, "hilbert", "--config", cfg)
        assert code == 2


class TestVerify:
    @pytest.mark.parametrize(
        "check_id",
        ["t2.5i", "t2.5ii", "p2.6", "t2.8", "t2.14", "l2.13", "l2.15", "r2.16", "l3.2"],
    )
    def test_all_pass(self, capsys, check_id):
        code, out, _ = run(capsys, "verify", check_id, "--dmax", "6")
        assert code == 0, out
        assert "RESULT\tpass" in out

    def test_unknown_id(self, capsys):
        code, _, err = run(capsys, "verify", "nope")
        assert code == 2
        assert "valid ids" in err

    def test_field_option(self, capsys):
        code, out, _ = run(capsys, "verify", "l2.15", "--field", "Fp:5", "--dmax", "8")
        assert code == 0
        assert "RESULT\tpass" in out

    def test_bad_field(self, capsys):
        code, _, err = run(capsys, "verify", "l2.15", "--field", "Fp:9")
        assert code == 2


class TestIntersectAndScan:
    def test_intersect_report(self, capsys):
        code, out, _ = run(capsys, "intersect", "--dmax", "4")
        assert code == 0
        assert "degree\tpi_monomials\tconstraints\tdim\tnew_generators" in out
        assert "1 * X1^0 X2^0 X3^0 X4^0" in out  # the constant basis element

    def test_scan(self, capsys):
        code, out, _ = run(capsys, "scan")
        assert code == 0
        lines = [l for l in out.splitlines() if not l.startswith("#")]
        assert lines[0].split("\t") == ["n", "bound", "instances", "implication_violations", "converse_witnesses"]
        assert lines[1].split("\t")[:4] == ["3", "4", "256", "0"]
        assert lines[2].split("\t")[:4] == ["4", "2", "512", "0"]

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "report.tsv"
        code, out, _ = run(capsys, "scan", "--out", str(target))
        assert code == 0
        assert out == ""
        assert "instances" in target.read_text()

    def test_header_lines(self, capsys):
        code, out, _ = run(capsys, "check-conditions", "--seed", "7")
        header = [l for l in out.splitlines() if l.startswith("#")]
        assert any("h14" in l for l in header)
        assert any("seed: 7" in l for l in header)

    def test_determinism(self, capsys):
        _, out1, _ = run(capsys, "verify", "t2.14", "--seed", "3")
        _, out2, _ = run(capsys, "verify", "t2.14", "--seed", "3")
        assert out1 == out2
