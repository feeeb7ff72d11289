import json

import pytest

from critcolor.graph.formats import from_graph6, parse_dimacs
from critcolor.harness.generators import fixture_figure1
from critcolor.main import main


@pytest.fixture
def figure1_file(tmp_path, capsys):
    assert main(["fixture", "figure1"]) == 0
    path = tmp_path / "figure1.g6"
    path.write_text(capsys.readouterr().out)
    return path


def test_fixture_emit(capsys):
    assert main(["fixture", "figure1"]) == 0
    assert from_graph6(capsys.readouterr().out) == fixture_figure1()
    assert main(["fixture", "figure1", "--emit", "dimacs"]) == 0
    assert parse_dimacs(capsys.readouterr().out.splitlines()) == fixture_figure1()


def test_verify_fixture(capsys):
    assert main(["verify", "--statement", "corollary-o", "--fixture", "figure1", "--budget-ms", "0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "verify"
    assert doc["hypothesis_satisfied"] == {"corollary-o": 0}
    assert len(doc["notes"]) == 1


def test_verify_exhaustive(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "--statement", "theorem-m", "--exhaustive-n", "7", "--min-deg", "6",
                 "--workers", "1", "--json", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["scanned"] == 1
    assert doc["hypothesis_satisfied"] == {"theorem-m": 1}
    assert doc["parameters"]["statement"] == "theorem-m"


def test_exhaustive_needs_min_deg():
    with pytest.raises(SystemExit) as info:
        main(["verify", "--statement", "kk", "--exhaustive-n", "7"])
    assert info.value.code == 2


def test_exhaustive_out_of_range():
    assert main(["verify", "--statement", "kk", "--exhaustive-n", "12", "--min-deg", "11"]) == 2


def test_analyze(figure1_file, capsys):
    assert main(["analyze", "--input", str(figure1_file), "--budget-ms", "0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["scanned"] == 1
    assert doc["records"][0]["detail"]["chi"] == 5


def test_missing_input(tmp_path):
    assert main(["analyze", "--input", str(tmp_path / "missing.g6")]) == 2


def test_walk_trace(figure1_file, tmp_path):
    trace_path = tmp_path / "trace.json"
    code = main(["walk", "--input", str(figure1_file), "--start", "0", "--trace", str(trace_path)])
    assert code == 0
    doc = json.loads(trace_path.read_text())
    assert doc["start"] == 0
    assert doc["scheme"]["group_sizes"] == [2, 2]
    assert doc["outside_theorem_range"] is True
    assert doc["snapshots"][0][0] == 0


def test_walk_high_start(figure1_file):
    assert main(["walk", "--input", str(figure1_file), "--start", "3"]) == 2


def test_walk_bad_index(figure1_file):
    assert main(["walk", "--input", str(figure1_file), "--start", "0", "--index", "4"]) == 2


def test_lemma1(capsys):
    code = main(["lemma1", "--samples", "5", "--max-n", "6", "--seed", "2", "--workers", "1", "--budget-ms", "0"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "lemma1"
    assert doc["violations"] == {"lemma1": 0}
