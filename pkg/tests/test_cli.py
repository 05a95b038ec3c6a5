import json
import subprocess
import sys

import pytest

from planacyclic import construct, fixture_bytes, write_edge_list
from planacyclic.cli import main

K4_PLC = (b">>planar_code<<"
          + bytes([4, 2, 3, 4, 0, 3, 1, 4, 0, 1, 2, 4, 0, 2, 1, 3, 0]))


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConstruct:
    def test_record_fields(self, capsys):
        code, out, err = run_cli(capsys, "construct", "--g", "3", "--f", "2")
        assert code == 0
        record = json.loads(out)
        assert record["n"] == 5 and record["m"] == 8
        assert record["claimed_fvs"] == 2 and record["claimed_mas"] == 3
        assert record["euler"] == 2
        assert "euler=2" in err

    def test_triangle_edge_list(self, capsys, tmp_path):
        out_file = tmp_path / "d.edges"
        code, out, _ = run_cli(capsys, "construct", "--g", "3", "--f", "1",
                               "--out", str(out_file))
        assert code == 0
        assert out_file.read_text() == "3 3\n0 1\n1 2\n2 0\n"

    def test_invalid_digirth_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "construct", "--g", "2", "--f", "1")
        assert code == 2 and "error" in err

    def test_dot_output(self, capsys, tmp_path):
        dot = tmp_path / "d.dot"
        code, _, _ = run_cli(capsys, "construct", "--g", "3", "--f", "2",
                             "--dot", str(dot))
        assert code == 0
        text = dot.read_text()
        assert "doublecircle" in text and "s1.L2" in text


class TestSolve:
    def test_fvs_on_constructed(self, capsys, tmp_path):
        path = tmp_path / "d.edges"
        path.write_text(write_edge_list(construct(3, 4).digraph))
        code, out, _ = run_cli(capsys, "solve", str(path), "--mode", "fvs")
        assert code == 0
        assert json.loads(out)["size"] == 4

    def test_mas_on_dag(self, capsys, tmp_path):
        path = tmp_path / "dag.edges"
        path.write_text("4 3\n0 1\n1 2\n2 3\n")
        code, out, _ = run_cli(capsys, "solve", str(path), "--mode", "mas")
        assert code == 0
        record = json.loads(out)
        assert record["size"] == 4 and record["vertices"] == [0, 1, 2, 3]

    def test_forest_on_k4_planar_code(self, capsys, tmp_path):
        path = tmp_path / "k4.plc"
        path.write_bytes(K4_PLC)
        code, out, _ = run_cli(capsys, "solve", str(path), "--mode", "forest")
        assert code == 0
        assert json.loads(out)["size"] == 2

    def test_forest_on_edge_list(self, capsys, tmp_path):
        path = tmp_path / "c4.edges"
        path.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
        code, out, _ = run_cli(capsys, "solve", str(path), "--mode", "forest")
        assert code == 0
        assert json.loads(out)["size"] == 3

    def test_parse_failure_exit(self, capsys, tmp_path):
        path = tmp_path / "bad.edges"
        path.write_text("3 5\n0 1\n")
        code, _, err = run_cli(capsys, "solve", str(path), "--mode", "fvs")
        assert code == 2 and "offset" in err


class TestScan:
    def test_n4_fixture(self, capsys, tmp_path):
        path = tmp_path / "n4.plc"
        path.write_bytes(fixture_bytes(4))
        code, out, err = run_cli(capsys, "scan", str(path))
        assert code == 0
        record = json.loads(out)
        assert record["tight"] is True and record["holds"] is True
        assert record["threshold"] == 3 and record["orientations"] == 32
        assert "tight=1" in err

    def test_n10_sweep_gated_without_long(self, capsys, tmp_path):
        from planacyclic import load_fixtures, write_planar_code, find_tight
        tight10 = find_tight(load_fixtures([10])[10])[:1]
        path = tmp_path / "n10.plc"
        path.write_bytes(write_planar_code(tight10))
        code, out, err = run_cli(capsys, "scan", str(path))
        assert code == 0
        record = json.loads(out)
        assert record["tight"] is True and record["holds"] is None
        assert record["orientations"] == 0
        assert "--long" in err

    def test_non_triangulation_rejected(self, capsys, tmp_path):
        path = tmp_path / "sq.plc"
        path.write_bytes(bytes([4, 2, 4, 0, 1, 3, 0, 2, 4, 0, 3, 1, 0]))
        code, _, err = run_cli(capsys, "scan", str(path))
        assert code == 2 and "not plane triangulations" in err

    def test_summary_counts_multiple_files(self, capsys, tmp_path):
        p4 = tmp_path / "n4.plc"
        p4.write_bytes(fixture_bytes(4))
        p6 = tmp_path / "n6.plc"
        p6.write_bytes(fixture_bytes(6))
        code, out, err = run_cli(capsys, "scan", str(p4), str(p6))
        assert code == 0
        assert len(out.splitlines()) == 3
        assert "tight=2" in err and "swept=2" in err


class TestProblem1:
    def test_k4(self, capsys, tmp_path):
        path = tmp_path / "k4.plc"
        path.write_bytes(K4_PLC)
        code, out, _ = run_cli(capsys, "problem1", str(path))
        assert code == 0
        record = json.loads(out)
        assert record["threshold"] == 3 and record["holds"] is True


class TestBound:
    def test_g3(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--n", "11", "--g", "3")
        assert code == 0
        record = json.loads(out)
        assert record["theorem_upper"] == 6
        assert record["table1_lower"] == "22/5"
        assert record["gr_lower"] is None

    def test_g5(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--n", "10", "--g", "5")
        record = json.loads(out)
        assert record["table1_lower"] == "5"
        assert record["theorem_upper"] == 8

    def test_g8(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--n", "8", "--g", "8")
        record = json.loads(out)
        assert record["gr_lower"] == "23/4"


class TestEmitDot:
    def test_construction(self, capsys):
        code, out, _ = run_cli(capsys, "emit-dot", "--g", "4", "--f", "2")
        assert code == 0
        assert out.startswith("digraph") and "s2.L2" in out

    def test_edge_list_input(self, capsys, tmp_path):
        path = tmp_path / "d.edges"
        path.write_text("2 1\n0 1\n")
        code, out, _ = run_cli(capsys, "emit-dot", "--input", str(path))
        assert code == 0
        assert "0 -> 1;" in out

    def test_missing_arguments(self, capsys):
        with pytest.raises(SystemExit):
            main(["emit-dot"])


class TestEntryPoints:
    def test_module_invocation(self):
        proc = subprocess.run([sys.executable, "-m", "planacyclic",
                               "bound", "--n", "3", "--g", "3"],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["theorem_upper"] == 2

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
