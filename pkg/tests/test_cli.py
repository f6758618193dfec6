"""CLI contract: golden outputs, JSON round-trips, exit codes."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from blockalg.cli import main
from blockalg.criterion import Report

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_geometric_text_golden(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", str(DATA / "geometric2.json"))
        assert code == 0
        assert out == (GOLDEN / "analyze_geometric2.txt").read_text()

    def test_geometric_json_golden(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", str(DATA / "geometric2.json"), "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == json.loads(
            (GOLDEN / "analyze_geometric2.json").read_text()
        )

    def test_json_roundtrip_lossless(self, capsys):
        _, out, _ = run_cli(
            capsys, "analyze", str(DATA / "geometric2.json"), "--format", "json"
        )
        data = json.loads(out)
        assert Report.from_json_dict(data).to_json_dict() == data

    def test_zero_weight_unit_witness(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", str(DATA / "zero.json"), "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["verdict"] == "REDUCIBLE"
        assert data["witness"]["text"] == "1"

    def test_central_only_irreducible_up_to(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", str(DATA / "central1.json"))
        assert code == 0
        assert "IRREDUCIBLE-UP-TO(8)" in out

    def test_text_and_json_same_rationals(self, capsys):
        _, text_out, _ = run_cli(capsys, "analyze", str(DATA / "geometric2.json"))
        _, json_out, _ = run_cli(
            capsys, "analyze", str(DATA / "geometric2.json"), "--format", "json"
        )
        data = json.loads(json_out)
        assert f"witness: {data['witness']['text']}" in text_out
        first_series = data["series"][0]
        rendered = "[" + ", ".join(first_series["coefficients"]) + "]"
        assert rendered in text_out


class TestAct:
    def test_word_action(self, capsys):
        code, out, _ = run_cli(
            capsys, "act", str(DATA / "finite_spike.json"), "L[1,0].L[-1,0].v"
        )
        assert code == 0
        assert out.strip() == "-10 v"

    def test_element_evaluation(self, capsys):
        code, out, _ = run_cli(
            capsys, "act", str(DATA / "zero.json"), "[L[1,0], L[-1,0]]"
        )
        assert code == 0
        assert out.strip() == "-2 L[0,0]"

    def test_json_shape(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "act",
            str(DATA / "finite_spike.json"),
            "L[1,0].L[-1,0].v",
            "--format",
            "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["kind"] == "module-vector"
        assert data["text"] == "-10 v"


class TestSeries:
    def test_sigma_window(self, capsys):
        code, out, _ = run_cli(
            capsys, "series", str(DATA / "central1.json"), "--j", "2", "--terms", "3"
        )
        assert code == 0
        assert out.strip() == "[0, 0, -1, 0]"

    def test_json_golden(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "series",
            str(DATA / "central1.json"),
            "--j",
            "2",
            "--terms",
            "3",
            "--format",
            "json",
        )
        assert code == 0
        assert json.loads(out) == json.loads(
            (GOLDEN / "series_central1.json").read_text()
        )


class TestOrder:
    def test_embedding_text_golden(self, capsys):
        code, out, _ = run_cli(capsys, "order", str(DATA / "emb_sqrt2.json"))
        assert code == 0
        assert out == (GOLDEN / "order_emb_sqrt2.txt").read_text()

    def test_lex_delegation_json_golden(self, capsys):
        code, out, _ = run_cli(
            capsys, "order", str(DATA / "lex2.json"), "--weight-zero", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == json.loads((GOLDEN / "order_lex2.json").read_text())

    def test_rank1_minimal_positive(self, capsys):
        code, out, _ = run_cli(capsys, "order", str(DATA / "rank1.json"))
        assert code == 0
        assert "discrete, archimedean" in out
        assert "minimal positive element: [1]" in out

    def test_conflicting_weight_flags(self, capsys):
        code, _, err = run_cli(
            capsys, "order", str(DATA / "emb_sqrt2.json"), "--weight-zero", "--weight-nonzero"
        )
        assert code == 2
        assert "exclusive" in err


class TestExitCodes:
    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "/no/such/file.json")
        assert code == 2
        assert err

    def test_malformed_weight(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"central_charge": "1.5"}')
        code, _, err = run_cli(capsys, "analyze", str(bad))
        assert code == 2
        assert "1.5" in err

    def test_invalid_json(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        assert run_cli(capsys, "analyze", str(bad))[0] == 2

    def test_window_insufficient(self, capsys):
        code, _, err = run_cli(
            capsys, "analyze", str(DATA / "geometric2.json"), "--window", "3"
        )
        assert code == 3
        assert "rows" in err

    def test_syntax_error(self, capsys):
        code, _, err = run_cli(capsys, "act", str(DATA / "zero.json"), "L[1,0")
        assert code == 2
        assert "column 6" in err

    def test_series_short_window_for_analysis(self, capsys):
        code, _, err = run_cli(
            capsys,
            "analyze",
            str(DATA / "geometric2.json"),
            "--terms",
            "3",
            "--max-deg",
            "8",
        )
        assert code == 3


class TestSelftest:
    def test_passes(self, capsys):
        code, out, _ = run_cli(capsys, "selftest", "--trials", "40")
        assert code == 0
        assert "selftest: PASS" in out

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "selftest", "--trials", "20", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["passed"] is True
        assert any(s["name"] == "corrupted_fixture_detected" for s in data["scans"])


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "blockalg.cli", "act", str(DATA / "zero.json"), "C"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "1 C"

    def test_no_command_exits_nonzero(self):
        proc = subprocess.run(
            [sys.executable, "-m", "blockalg.cli"], capture_output=True, text=True
        )
        assert proc.returncode != 0
