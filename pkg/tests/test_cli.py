import json

from typer.testing import CliRunner

from drinfeld_charpoly.cli import app
from drinfeld_charpoly.config import BENCH_CSV_HEADER
from drinfeld_charpoly.instance_io import generate_instance, write_instance

from conftest import INSTANCES

runner = CliRunner()

RANK4 = str(INSTANCES / "rank4_f2.json")
WORKED_TEXT = "Z^4 + x*Z^2 + x*Z + x^3 + x^2 + 1"


class TestCharpoly:
    def test_worked_example_text(self) -> None:
        result = runner.invoke(app, ["charpoly", "--module", RANK4, "--frobenius", "--format", "text"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == WORKED_TEXT
        assert "a_0 = x^3 + x^2 + 1  [1, 0, 1, 1]" in lines

    def test_every_algorithm(self) -> None:
        for algorithm in ("auto", "recurrence", "euclidean", "bsgs"):
            result = runner.invoke(app, ["charpoly", "--module", RANK4, "--frobenius", "--algorithm", algorithm])
            assert result.exit_code == 0
            assert result.stdout.splitlines()[0] == WORKED_TEXT

    def test_endo_from_instance_file(self) -> None:
        result = runner.invoke(app, ["charpoly", "--module", RANK4])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == WORKED_TEXT

    def test_long_inline_endo(self, tmp_path) -> None:
        tower, module, _ = generate_instance(4, 2, 90, 2)
        path = tmp_path / "n90.json"
        write_instance(path, tower, module)
        endo = json.dumps([[]] * 90 + [[1]])
        assert len(endo) > 255
        inline = runner.invoke(app, ["charpoly", "--module", str(path), "--endo", endo])
        assert inline.exit_code == 0, inline.output
        frobenius = runner.invoke(app, ["charpoly", "--module", str(path), "--frobenius"])
        assert inline.stdout.splitlines()[0] == frobenius.stdout.splitlines()[0]

    def test_endo_from_file(self, tmp_path) -> None:
        path = tmp_path / "endo.json"
        path.write_text("[[], [], [], [1]]")
        result = runner.invoke(app, ["charpoly", "--module", RANK4, "--endo", str(path)])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == WORKED_TEXT

    def test_json_output(self) -> None:
        result = runner.invoke(app, ["charpoly", "--module", RANK4, "--frobenius", "--format", "json"])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["a"] == [[1, 0, 1, 1], [0, 1], [0, 1], []]
        assert report["text"] == WORKED_TEXT
        assert report["verified"] is None

    def test_verify(self) -> None:
        result = runner.invoke(app, ["charpoly", "--module", RANK4, "--frobenius", "--verify"])
        assert result.exit_code == 0
        assert "verified: annihilation ok" in result.stdout

    def test_explicit_endo_with_recurrence(self) -> None:
        result = runner.invoke(
            app, ["charpoly", "--module", RANK4, "--endo", "[[], [], [], [1]]", "--algorithm", "recurrence"]
        )
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == WORKED_TEXT

    def test_non_endomorphism(self) -> None:
        result = runner.invoke(app, ["charpoly", "--module", RANK4, "--endo", "[[], [1]]"])
        assert result.exit_code == 1
        assert "error: endo:" in result.output
        assert "Traceback" not in result.output

    def test_bsgs_rejects_other_endomorphisms(self) -> None:
        result = runner.invoke(
            app, ["charpoly", "--module", RANK4, "--endo", "[[1]]", "--algorithm", "bsgs"]
        )
        assert result.exit_code == 1
        assert "error: algorithm:" in result.output

    def test_precision_below_minimum(self) -> None:
        result = runner.invoke(app, ["charpoly", "--module", RANK4, "--frobenius", "--k", "0"])
        assert result.exit_code == 1
        assert "error: k:" in result.output

    def test_conflicting_endo_flags(self) -> None:
        result = runner.invoke(app, ["charpoly", "--module", RANK4, "--frobenius", "--endo", "[[1]]"])
        assert result.exit_code == 1
        assert "error: endo:" in result.output

    def test_unknown_format(self) -> None:
        result = runner.invoke(app, ["charpoly", "--module", RANK4, "--frobenius", "--format", "xml"])
        assert result.exit_code == 1
        assert "error: format:" in result.output

    def test_invalid_instance_names_field(self, tmp_path) -> None:
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "version": 1, "p": 2, "ell": [1, 1, 0, 1], "gamma_x": [1, 1], "delta": [[0, 1], []],
        }))
        result = runner.invoke(app, ["charpoly", "--module", str(path), "--frobenius"])
        assert result.exit_code == 1
        assert "error: delta:" in result.output

    def test_missing_endomorphism(self, tmp_path) -> None:
        path = tmp_path / "plain.json"
        path.write_text(json.dumps({
            "version": 1, "p": 2, "ell": [1, 1, 0, 1], "gamma_x": [1, 1], "delta": [[0, 1], [1]],
        }))
        result = runner.invoke(app, ["charpoly", "--module", str(path)])
        assert result.exit_code == 1
        assert "error: endo:" in result.output


class TestVerify:
    def _report(self, tmp_path):
        result = runner.invoke(app, ["charpoly", "--module", RANK4, "--frobenius", "--format", "json"])
        assert result.exit_code == 0
        return json.loads(result.stdout)

    def test_accepts_own_result(self, tmp_path) -> None:
        path = tmp_path / "result.json"
        path.write_text(json.dumps(self._report(tmp_path)))
        result = runner.invoke(app, ["verify", "--module", RANK4, "--frobenius", "--result", str(path)])
        assert result.exit_code == 0
        assert result.stdout.startswith("ok:")

    def test_rejects_tampered_result(self, tmp_path) -> None:
        report = self._report(tmp_path)
        report["a"][0] = [0, 0, 1, 1]
        path = tmp_path / "result.json"
        path.write_text(json.dumps(report))
        result = runner.invoke(app, ["verify", "--module", RANK4, "--frobenius", "--result", str(path)])
        assert result.exit_code == 2
        assert "error: verify:" in result.output


class TestRandom:
    def test_same_seed_same_bytes(self, tmp_path) -> None:
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        for path in (first, second):
            result = runner.invoke(app, ["random", "--seed", "7", "--q", "5", "--n", "4", "--r", "3", "-o", str(path)])
            assert result.exit_code == 0
        assert first.read_bytes() == second.read_bytes()

    def test_stdout_instance_is_usable(self, tmp_path) -> None:
        result = runner.invoke(app, ["random", "--seed", "2", "--q", "3", "--n", "4", "--r", "2", "--m", "2"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["version"] == 1
        assert data["endo"] == "frobenius"
        path = tmp_path / "instance.json"
        path.write_text(result.stdout)
        charpoly = runner.invoke(app, ["charpoly", "--module", str(path), "--verify"])
        assert charpoly.exit_code == 0

    def test_bad_m(self) -> None:
        result = runner.invoke(app, ["random", "--seed", "1", "--q", "2", "--n", "6", "--r", "2", "--m", "4"])
        assert result.exit_code == 1
        assert "error: m:" in result.output


class TestBench:
    def test_csv_layout(self) -> None:
        result = runner.invoke(app, ["bench", "--grid", "4,6/1,2", "--q", "2"])
        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert lines[0] == ",".join(BENCH_CSV_HEADER)
        assert len(lines) == 5
        cells = [line.split(",") for line in lines[1:]]
        assert [(c[0], c[1]) for c in cells] == [("4", "1"), ("4", "2"), ("6", "1"), ("6", "2")]
        assert all(c[2] == "bsgs" for c in cells)

    def test_skips_n_not_divisible_by_m(self) -> None:
        result = runner.invoke(app, ["bench", "--grid", "4,5/2", "--q", "2", "--m", "2"])
        assert result.exit_code == 0
        rows = [line for line in result.stdout.splitlines() if line[:1].isdigit()]
        assert [row.split(",")[:2] for row in rows] == [["4", "2"]]

    def test_bad_grid(self) -> None:
        result = runner.invoke(app, ["bench", "--grid", "4,6", "--q", "2"])
        assert result.exit_code == 1
        assert "error: grid:" in result.output
