"""CLI behavior: goldens, exit codes, piping, determinism.

Most tests drive main(argv) in process; one subprocess test checks the
installed console script end to end.
"""

import json
import math
import subprocess
import sys

import pytest

from blockspectra import complete_graph, format_edge_list, path_graph, spectral_radius
from blockspectra.cli import main


def run_cli(capsys, argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_cliquepath_header(self, capsys):
        code, out, err = run_cli(capsys, ["gen", "cliquepath:3,3"])
        assert code == 0
        assert out.splitlines()[0] == "5 6"

    def test_path(self, capsys):
        code, out, _ = run_cli(capsys, ["gen", "path:4"])
        assert code == 0
        assert out == "4 3\n0 1\n1 2\n2 3\n"

    def test_invalid_size_exits_1(self, capsys):
        code, out, err = run_cli(capsys, ["gen", "cliquepath:1,3"])
        assert code == 1
        assert out == "" and err != ""

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "g.txt"
        code, out, _ = run_cli(capsys, ["gen", "broom:5", "--out", str(target)])
        assert code == 0 and out == ""
        assert target.read_text() == format_edge_list(parse_spec("broom:5"))

    def test_unwritable_out_exits_1(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, ["gen", "path:3", "--out", str(tmp_path / "no" / "g.txt")]
        )
        assert code == 1 and err != ""


def parse_spec(text):
    from blockspectra import parse_family_spec

    return parse_family_spec(text)


class TestSpectrum:
    def test_k5_adjacency_golden(self, capsys, monkeypatch):
        code, out, _ = run_cli(
            capsys,
            ["spectrum"],
            stdin_text=format_edge_list(complete_graph(5)),
            monkeypatch=monkeypatch,
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "4.00000000000"
        assert len(lines[1].split()) == 5

    def test_p3_distance_golden(self, capsys, monkeypatch):
        code, out, _ = run_cli(
            capsys,
            ["spectrum", "--matrix", "distance"],
            stdin_text=format_edge_list(path_graph(3)),
            monkeypatch=monkeypatch,
        )
        assert code == 0
        assert out.splitlines()[0] == "2.73205080757"
        assert float(out.splitlines()[0]) == pytest.approx(1 + math.sqrt(3), abs=1e-10)

    def test_cdistance_of_small_diameter_exits_1(self, capsys, monkeypatch):
        code, _, err = run_cli(
            capsys,
            ["spectrum", "--matrix", "cdistance"],
            stdin_text=format_edge_list(path_graph(3)),
            monkeypatch=monkeypatch,
        )
        assert code == 1 and "disconnected" in err

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "p5.txt"
        path.write_text(format_edge_list(path_graph(5)))
        code, out, _ = run_cli(capsys, ["spectrum", str(path), "--matrix", "cadjacency"])
        assert code == 0
        ref = spectral_radius(path_graph(5), "complement_adjacency").value
        assert out.splitlines()[0] == format(ref, "#.12g")

    def test_malformed_input_exits_1(self, capsys, monkeypatch):
        code, _, err = run_cli(
            capsys, ["spectrum"], stdin_text="2 1\n0 5\n", monkeypatch=monkeypatch
        )
        assert code == 1 and err != ""

    def test_missing_file_exits_1(self, capsys):
        code, _, err = run_cli(capsys, ["spectrum", "/nonexistent/g.txt"])
        assert code == 1 and err != ""


class TestVerify:
    def test_pass_exits_0(self, capsys):
        code, out, _ = run_cli(capsys, ["verify", "L4.1", "--n", "5"])
        assert code == 0
        report = json.loads(out)
        assert report["theorem"] == "L4.1" and report["violations"] == []

    def test_unknown_id_exits_1(self, capsys):
        code, _, err = run_cli(capsys, ["verify", "X9.9"])
        assert code == 1 and "known ids" in err

    def test_violation_exits_2(self, capsys):
        code, out, _ = run_cli(capsys, ["verify", "L3.1", "--n", "5", "--d", "3"])
        assert code == 2
        assert json.loads(out)["violations"]

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, ["verify", "T2.4", "--n", "5", "--format", "csv"]
        )
        assert code == 0
        assert out.splitlines()[0] == "theorem,graph,side,lhs,rhs,margin,status"

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys, ["verify", "T2.5", "--n", "7", "--out", str(target)]
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["theorem"] == "T2.5"

    def test_jobs_do_not_change_bytes(self, capsys):
        outs = []
        for jobs in ("1", "2"):
            _, out, _ = run_cli(capsys, ["verify", "T2.4", "--n", "6", "--jobs", jobs])
            outs.append("\n".join(l for l in out.splitlines() if '"elapsed"' not in l))
        assert outs[0] == outs[1]

    def test_alias_accepted(self, capsys):
        code, out, _ = run_cli(capsys, ["verify", "T4.4", "--n", "5"])
        assert code == 0 and json.loads(out)["theorem"] == "L4.4"


class TestEnumerate:
    def test_trees_4(self, capsys):
        code, out, _ = run_cli(capsys, ["enumerate", "trees", "--n", "4"])
        assert code == 0
        blocks = out.strip().split("\n\n")
        assert len(blocks) == 2
        from blockspectra import parse_edge_list

        for block in blocks:
            g = parse_edge_list(block)
            assert g.n == 4 and len(g.edges) == 3

    def test_trees_8_count(self, capsys):
        code, out, _ = run_cli(capsys, ["enumerate", "trees", "--n", "8", "--count-only"])
        assert code == 0 and out == "23\n"

    def test_cliquetrees_4_2(self, capsys):
        code, out, _ = run_cli(
            capsys, ["enumerate", "cliquetrees", "--n", "4", "--s", "2", "--count-only"]
        )
        assert code == 0 and out == "1\n"

    def test_connected_5(self, capsys):
        code, out, _ = run_cli(
            capsys, ["enumerate", "connected", "--n", "5", "--count-only"]
        )
        assert code == 0 and out == "21\n"

    def test_s_outside_cliquetrees_exits_1(self, capsys):
        code, _, err = run_cli(capsys, ["enumerate", "trees", "--n", "4", "--s", "2"])
        assert code == 1 and "--s only applies" in err

    def test_infeasible_exits_1(self, capsys):
        code, _, err = run_cli(
            capsys, ["enumerate", "cliquetrees", "--n", "3", "--s", "5"]
        )
        assert code == 1 and err != ""

    def test_connected_cap_exits_1(self, capsys):
        code, _, err = run_cli(capsys, ["enumerate", "connected", "--n", "8"])
        assert code == 1 and "capped" in err


class TestUsage:
    def test_no_command_exits_1(self, capsys):
        assert run_cli(capsys, [])[0] == 1

    def test_bad_choice_exits_1(self, capsys):
        assert run_cli(capsys, ["enumerate", "widgets", "--n", "4"])[0] == 1

    def test_bad_flag_exits_1(self, capsys):
        assert run_cli(capsys, ["verify", "T2.4", "--frobnicate"])[0] == 1


def test_console_script_pipe():
    gen = subprocess.run(
        ["blockspectra", "gen", "complete:5"], capture_output=True, text=True
    )
    assert gen.returncode == 0
    spec = subprocess.run(
        ["blockspectra", "spectrum"],
        input=gen.stdout,
        capture_output=True,
        text=True,
    )
    assert spec.returncode == 0
    assert spec.stdout.splitlines()[0] == "4.00000000000"
