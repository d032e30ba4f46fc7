import csv
import json
import os
import subprocess
import sys

import pytest

from turan_lab.claims import VerificationReport, verify_all, thread_cap
from turan_lab.cli import main
from turan_lab.constructions import catalog
from turan_lab.errors import ParseError
from turan_lab.hypergraph import new_hypergraph
from turan_lab.io import (
    CSV_COLUMNS,
    atomic_write_text,
    hypergraph_from_json,
    read_hypergraph,
    report_to_csv,
    write_hypergraph,
    write_report,
)

F5 = new_hypergraph(5, 3, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])
CATALOG_MEMBERS = ["F5", "H1", "H2", "H2minus", "H3", "H4", "H7", "T(3)", "T(4)", "Fan(3)", "Fan(4)", "Ha(2)", "Ha(3)"]


class TestHypergraphFiles:
    @pytest.mark.parametrize("name", CATALOG_MEMBERS)
    def test_round_trip(self, tmp_path, name):
        H = catalog(name)
        path = tmp_path / "h.json"
        write_hypergraph(H, path)
        assert read_hypergraph(path) == H

    def test_family_round_trip(self, tmp_path):
        for i, H in enumerate(catalog("HaFamily", 2)):
            write_hypergraph(H, tmp_path / f"m{i}.json")
            assert read_hypergraph(tmp_path / f"m{i}.json") == H

    def test_unsorted_input_accepted(self):
        H = hypergraph_from_json('{"n": 5, "r": 3, "edges": [[4, 3, 2], [1, 0, 2], [3, 1, 0]]}')
        assert H == F5

    def test_bad_edge_size_position(self):
        text = '{"n": 5, "r": 3,\n "edges": [[0, 1, 2],\n   [0, 1]]}'
        with pytest.raises(ParseError) as info:
            hypergraph_from_json(text)
        assert (info.value.line, info.value.column) == (3, 4)

    def test_bad_vertex_position(self):
        text = '{"n": 5, "r": 3, "edges": [[0, 1, 9]]}'
        with pytest.raises(ParseError) as info:
            hypergraph_from_json(text)
        assert (info.value.line, info.value.column) == (1, 28)

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as info:
            hypergraph_from_json('{"n": 5,\n "r": 3, "edges": [[0,1,2]')
        assert info.value.line == 2

    def test_missing_key(self):
        with pytest.raises(ParseError):
            hypergraph_from_json('{"n": 5, "edges": []}')

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            read_hypergraph(tmp_path / "absent.json")


class TestReports:
    def report(self):
        return VerificationReport(
            "demo", {"n": 3}, "pass",
            [{"check": "a", "expected": "1", "got": "1", "tolerance": "0", "status": "pass"}], 7, 0.1,
        )

    def test_csv_header(self):
        text = report_to_csv(self.report())
        assert text.splitlines()[0] == "claim_id,status,expected,got,tolerance"
        rows = list(csv.reader(text.splitlines()))
        assert rows[1] == ["demo", "pass", "1", "1", "0"]
        assert CSV_COLUMNS == rows[0]

    def test_json_report(self, tmp_path):
        write_report(self.report(), tmp_path / "r.json")
        data = json.loads((tmp_path / "r.json").read_text())
        assert data["claim_id"] == "demo" and data["seed"] == 7

    def test_bad_format(self, tmp_path):
        with pytest.raises(ValueError):
            write_report(self.report(), tmp_path / "r.txt", "xml")

    def test_atomic_write_leaves_no_temp(self, tmp_path):
        path = tmp_path / "out.txt"
        atomic_write_text(path, "one")
        atomic_write_text(path, "two")
        assert path.read_text() == "two"
        assert os.listdir(tmp_path) == ["out.txt"]


class TestCli:
    def run(self, capsys, *argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    def test_construct_K(self, capsys):
        code, out, _ = self.run(capsys, "construct", "--family", "K", "--n", "9", "--r", "3",
                                "--a", "1", "--k", "2", "--sizes", "3,3,3")
        assert code == 0
        data = json.loads(out)
        assert (data["n"], data["r"], len(data["edges"])) == (9, 3, 57)

    def test_property_golden(self, capsys, tmp_path):
        path = tmp_path / "f5.json"
        write_hypergraph(F5, path)
        code, out, _ = self.run(capsys, "property", "--in", str(path), "--q", "4", "--p", "3")
        assert code == 0
        assert json.loads(out) == {"holds": True, "witness": None, "checked": 5}

    def test_property_failing_witness(self, capsys, tmp_path):
        path = tmp_path / "f5.json"
        write_hypergraph(F5, path)
        code, out, _ = self.run(capsys, "property", "--in", str(path), "--q", "5", "--p", "4", "--dual")
        data = json.loads(out)
        assert code == 0 and not data["holds"] and data["duality_agrees"]

    def test_out_flag(self, capsys, tmp_path):
        dest = tmp_path / "h.json"
        code, out, _ = self.run(capsys, "catalog", "H7", "--out", str(dest))
        assert code == 0 and out == ""
        assert read_hypergraph(dest) == catalog("H7")

    def test_omega_alpha(self, capsys, tmp_path):
        path = tmp_path / "f5.json"
        write_hypergraph(F5, path)
        assert json.loads(self.run(capsys, "omega", "--in", str(path))[1])["omega"] == 3
        assert json.loads(self.run(capsys, "alpha", "--in", str(path))[1])["alpha"] == 3

    def test_verify_rho_k2(self, capsys):
        code, out, _ = self.run(capsys, "verify", "--claim", "rho-k2", "--n", "120")
        assert code == 0 and out.startswith("rho-k2: pass")

    def test_verify_report_csv(self, capsys, tmp_path):
        dest = tmp_path / "rep.csv"
        code, _, _ = self.run(capsys, "verify", "--claim", "eta-remark", "--param", "r=4",
                              "--report", str(dest), "--format", "csv")
        assert code == 0
        lines = dest.read_text().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS) and all(l.startswith("eta-remark,pass") for l in lines[1:])

    def test_verification_failure_exit_1(self, capsys, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text('{"n": 8, "r": 3, "edges": []}')
        code, out, _ = self.run(capsys, "reduce", "--in", str(path), "--q", "4", "--p", "3",
                                "--gamma", "2", "--ell", "5", "--verify")
        assert code == 1 and json.loads(out)["verified"] is False
        code, _, _ = self.run(capsys, "verify", "--claim", "rho-k2", "--param", "tol=0.0001", "--n", "60")
        assert code == 1

    @pytest.mark.parametrize("argv", [
        [],
        ["nonsense"],
        ["construct", "--family", "K", "--n", "9"],
        ["property", "--in", "/nonexistent.json", "--q", "4", "--p", "3"],
        ["verify", "--claim", "no-such-claim"],
        ["exact", "--mode", "T", "--n", "5", "--r", "3", "--q", "2", "--p", "3"],
    ])
    def test_usage_errors(self, capsys, argv):
        assert main(argv) == 2

    def test_module_entry_point(self, tmp_path):
        res = subprocess.run([sys.executable, "-m", "turan_lab", "catalog", "--list"],
                             capture_output=True, text=True, check=False)
        assert res.returncode == 0 and "F5" in res.stdout


class TestVerifyAll:
    def test_deterministic_and_parallel(self, monkeypatch):
        monkeypatch.setenv("TURAN_LAB_THREADS", "4")
        assert thread_cap() == 4
        first = verify_all(seed=11)
        second = verify_all(seed=11, workers=1)
        strip = lambda reps: [(r.claim_id, r.status, r.details) for r in reps]
        assert strip(first) == strip(second)
        assert all(r.status == "pass" for r in first)

    def test_thread_cap_parsing(self, monkeypatch):
        monkeypatch.setenv("TURAN_LAB_THREADS", "zero")
        assert thread_cap() == 1
        monkeypatch.delenv("TURAN_LAB_THREADS")
        assert thread_cap() == 1
