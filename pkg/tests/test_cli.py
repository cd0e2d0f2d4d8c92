import json

import pytest

from cvckit.cli import (
    gen_random,
    main,
    parse_graph,
    parse_graph_text,
    serialize_graph,
)
from cvckit.errors import InputFormatError

P4_TEXT = "p cvc 4 3\ne 1 2\ne 2 3\ne 3 4\n"
C4_TEXT = "p cvc 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n"


class TestParse:
    def test_p3_with_comment(self):
        g, weights = parse_graph_text("c a path\np cvc 3 2\ne 1 2\ne 2 3\n")
        assert g.n == 3 and g.edges == ((0, 1), (1, 2))
        assert weights == [1.0, 1.0, 1.0]

    def test_weight_record(self):
        g, weights = parse_graph_text("p cvc 3 2\ne 1 2\ne 2 3\nw 2 5.0\n")
        assert weights == [1.0, 5.0, 1.0]

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("p cvc 3 2\ne 1 1\ne 2 3\n", "self-loop"),
            ("p cvc 3 2\ne 1 2\ne 2 1\n", "duplicate edge"),
            ("p cvc 3 2\ne 1 4\ne 2 3\n", "out of range"),
            ("p cvc 3 2\ne 1 2\n", "mismatch"),
            ("e 1 2\n", "before problem line"),
            ("p cvc 3 2\ne 1 2\ne 2 3\nw 2 -1\n", "negative weight"),
            ("p cvc 3 2\ne 1 2\ne 2 3\nw 2 1\nw 2 2\n", "duplicate weight"),
            ("p cvc 3 2\ne 1 2\ne 2 3\nq 1\n", "unknown record"),
            ("p cvc 3 2\np cvc 3 2\n", "duplicate problem"),
        ],
    )
    def test_malformed_inputs(self, text, fragment):
        with pytest.raises(InputFormatError, match=fragment):
            parse_graph_text(text)

    def test_error_carries_line_number(self):
        with pytest.raises(InputFormatError, match="line 3"):
            parse_graph_text("p cvc 3 2\ne 1 2\ne 1 1\n")


class TestGenAndRoundTrip:
    def test_same_seed_same_bytes(self):
        assert gen_random(30, 0.1, 42) == gen_random(30, 0.1, 42)

    def test_p1_is_complete(self):
        g, _ = parse_graph_text(gen_random(4, 1.0, 0))
        assert g.m == 6

    def test_p0_is_edgeless(self):
        g, _ = parse_graph_text(gen_random(5, 0.0, 0))
        assert g.m == 0

    def test_round_trip_is_byte_exact(self):
        text = gen_random(30, 0.1, 42)
        g, weights = parse_graph_text(text)
        assert serialize_graph(g, weights) == text

    def test_weighted_round_trip(self):
        text = "p cvc 3 2\ne 1 2\ne 2 3\nw 2 5.0\n"
        g, weights = parse_graph_text(text)
        assert serialize_graph(g, weights) == text


class TestCommands:
    def run(self, capsys, *argv):
        code = main(list(argv))
        return code, capsys.readouterr().out

    def test_decide_found(self, tmp_path, capsys):
        f = tmp_path / "p4.cvc"
        f.write_text(P4_TEXT)
        code, out = self.run(capsys, "decide", "--input", str(f), "-k", "2", "--json")
        report = json.loads(out)
        assert code == 0
        assert report["status"] == "FOUND"
        assert report["vertices"] == [2, 3]
        assert report["ledger"]["steiner_weight_sum"] <= report["ledger"]["bound"]

    def test_decide_infeasible(self, tmp_path, capsys):
        f = tmp_path / "c4.cvc"
        f.write_text(C4_TEXT)
        code, out = self.run(capsys, "decide", "--input", str(f), "-k", "2", "--json")
        assert code == 1
        assert json.loads(out)["status"] == "INFEASIBLE"

    def test_malformed_file_is_an_input_error(self, tmp_path, capsys):
        f = tmp_path / "bad.cvc"
        f.write_text("p cvc 2 1\ne 1 1\n")
        code, out = self.run(capsys, "decide", "--input", str(f), "-k", "1", "--json")
        assert code == 2
        assert json.loads(out)["status"] == "ERROR"

    def test_missing_file_is_an_input_error(self, capsys):
        code, out = self.run(capsys, "decide", "--input", "/no/such/file", "-k", "1", "--json")
        assert code == 2

    def test_weighted(self, tmp_path, capsys):
        f = tmp_path / "p3.cvc"
        f.write_text("p cvc 3 2\ne 1 2\ne 2 3\nw 1 1.0\nw 2 5.0\nw 3 1.0\n")
        code, out = self.run(capsys, "weighted", "--input", str(f), "-k", "2", "--json")
        report = json.loads(out)
        assert code == 0
        assert report["weight"] == 5.0 and report["vertices"] == [2]

    def test_count(self, tmp_path, capsys):
        f = tmp_path / "p3.cvc"
        f.write_text("p cvc 3 2\ne 1 2\ne 2 3\n")
        code, out = self.run(capsys, "count", "--input", str(f), "-k", "2", "--json")
        report = json.loads(out)
        assert code == 0 and report["count"] == "3"

    def test_approx(self, tmp_path, capsys):
        f = tmp_path / "p4.cvc"
        f.write_text(P4_TEXT)
        code, out = self.run(capsys, "approx", "--input", str(f), "--json")
        report = json.loads(out)
        assert code == 0 and report["size"] <= 4

    def test_oracle_modes(self, tmp_path, capsys):
        f = tmp_path / "p4.cvc"
        f.write_text(P4_TEXT)
        code, out = self.run(capsys, "oracle", "decide", "--input", str(f), "-k", "2", "--json")
        assert code == 0 and json.loads(out)["size"] == 2
        code, out = self.run(capsys, "oracle", "count", "--input", str(f), "-k", "2", "--json")
        assert code == 0 and json.loads(out)["count"] == "1"
        code, out = self.run(capsys, "oracle", "decide", "--input", str(f), "-k", "1", "--json")
        assert code == 1

    def test_verify_bound(self, capsys):
        code, out = self.run(capsys, "verify-bound", "--n", "4", "--json")
        report = json.loads(out)
        assert code == 0 and report["violations"] == 0
        assert report["graphs"] == 1 + 1 + 4 + 38

    def test_phi_check(self, capsys):
        code, out = self.run(capsys, "phi-check", "--n", "3", "--json")
        report = json.loads(out)
        assert code == 0 and report["collisions"] == 0

    def test_gen_writes_file(self, tmp_path, capsys):
        out_path = tmp_path / "g.cvc"
        code, _ = self.run(capsys, "gen", "--n", "6", "--p", "0.5", "--seed", "1",
                           "--output", str(out_path))
        assert code == 0
        g, _ = parse_graph(str(out_path))
        assert g.n == 6

    def test_bench_rows(self, capsys):
        code, out = self.run(
            capsys, "bench", "--n", "12", "--p", "0.3", "--seed", "3",
            "--k-min", "4", "--k-max", "6", "--json",
        )
        report = json.loads(out)
        assert code == 0
        rows = report["rows"]
        assert len(rows) == 3
        for row in rows:
            assert row["status"] in ("FOUND", "INFEASIBLE", "ERROR")
            if row["status"] != "ERROR":
                assert row["enumerated"] <= 2 ** (row["k"] + 2)

    def test_bench_both_backends(self, capsys):
        code, out = self.run(
            capsys, "bench", "--n", "10", "--p", "0.3", "--seed", "3",
            "--k-min", "5", "--k-max", "5", "--backend", "both", "--json",
        )
        report = json.loads(out)
        assert code == 0
        backends = {row["backend"] for row in report["rows"]}
        assert "py" in backends

    def test_limit_cells_flag_gives_resource_error(self, tmp_path, capsys):
        f = tmp_path / "p4.cvc"
        f.write_text(P4_TEXT)
        code, out = self.run(capsys, "decide", "--input", str(f), "-k", "2",
                             "--limit-cells", "1", "--json")
        assert code == 2
        assert json.loads(out)["status"] == "ERROR"

    def test_env_var_cell_limit(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("CVCKIT_LIMIT_CELLS", "1")
        f = tmp_path / "p4.cvc"
        f.write_text(P4_TEXT)
        code, _ = self.run(capsys, "decide", "--input", str(f), "-k", "2", "--json")
        assert code == 2

    def test_unknown_flag_exits_2(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["decide", "--nope"])
        assert exc.value.code == 2
