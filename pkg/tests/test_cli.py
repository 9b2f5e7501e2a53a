import io
import json

import pytest

from bipturan.bigraph import parse_graph
from bipturan.cli import main, parse_range, parse_vertex
from bipturan.constructions import build_gyori_extremal, build_L


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _strip_timing(doc):
    doc = dict(doc)
    doc.get("stats", {}).pop("seconds", None)
    return doc


def test_construct_round_trip(capsys):
    code, out, _ = run(capsys, "construct", "L", "5", "5", "2")
    assert code == 0
    assert parse_graph(out) == build_L(5, 5, 2)


def test_construct_writes_file(tmp_path, capsys):
    path = tmp_path / "g.bip"
    assert main(["construct", "gyori", "6", "6", "1", "-o", str(path)]) == 0
    assert parse_graph(path.read_text()) == build_gyori_extremal(6, 6, 1)


def test_gyori_then_longest_cycle(capsys, monkeypatch):
    _, text, _ = run(capsys, "construct", "gyori", "6", "6", "1")
    code, out, _ = run(capsys, "cycles", "-", "--longest", stdin=text, monkeypatch=monkeypatch)
    doc = json.loads(out)
    assert code == 0 and doc["length"] == 8 and len(doc["cycle"]) == 8


def test_cycles_modes(tmp_path, capsys):
    path = tmp_path / "k33.bip"
    main(["construct", "complete", "3", "3", "-o", str(path)])
    _, out, _ = run(capsys, "cycles", str(path), "--spectrum")
    doc = json.loads(out)
    assert doc["present_lengths"] == [4, 6] and doc["girth"] == 4
    _, out, _ = run(capsys, "cycles", str(path), "--length", "6")
    assert json.loads(out)["found"] is True
    code, _, err = run(capsys, "cycles", str(path), "--length", "5")
    assert code == 2 and "length" in err


def test_turan_json(capsys):
    code, out, _ = run(capsys, "turan", "4", "4", "6")
    doc = json.loads(out)
    assert code == 0
    assert doc["value"] == 10 and doc["formula_value"] == 10 and doc["in_proven_range"] is True
    assert doc["command"] == "turan" and doc["parameters"]["m"] == 4
    assert len(doc["witness"]) == 10
    assert set(doc["stats"]) == {"nodes", "seconds"} and "version" in doc


def test_turan_probe(capsys):
    code, out, _ = run(capsys, "turan", "4", "4", "4", "--probe-outside-range")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 9 and doc["excess"] == 2


def test_turan_guard_exit_code(capsys):
    code, _, err = run(capsys, "turan", "7", "7", "6")
    assert code == 3 and "guard" in err


def test_verify_exit_codes(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "T1.7", "--m", "4", "--n", "4", "--exhaustive")
    assert code == 0 and json.loads(out)["violations"] == []
    code, out, _ = run(capsys, "verify", "T1.2", "--m", "3..4", "--n", "4", "--t", "3",
                       "--samples", "50", "--seed", "5", "--out-dir", str(tmp_path))
    assert code == 0 and json.loads(out)["parameters"]["mode"] == "random"


def test_verify_is_reproducible(capsys):
    argv = ["verify", "T1.7", "--m", "2..5", "--n", "2..5", "--samples", "200", "--seed", "9"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert _strip_timing(json.loads(a)) == _strip_timing(json.loads(b))


def test_witness_subcommand(tmp_path, capsys):
    path = tmp_path / "k33.bip"
    main(["construct", "complete", "3", "3", "-o", str(path)])
    code, out, _ = run(capsys, "witness", "L2.9", str(path), "x1", "x2")
    doc = json.loads(out)
    assert code == 0 and doc["validation"]["valid"] and doc["witness"]["path"][0] == "x1"
    code, out, _ = run(capsys, "witness", "L2.2", str(path), "x1", "y1")
    assert code == 0 and json.loads(out)["validation"]["order"] == 6
    code, _, _ = run(capsys, "witness", "L2.2", str(path), "x1")
    assert code == 2

    path = tmp_path / "k34.bip"
    main(["construct", "complete", "3", "4", "-o", str(path)])
    code, out, _ = run(capsys, "witness", "L2.6", str(path), "y4")
    assert code == 0 and json.loads(out)["validation"]["edges"] == 3
    path = tmp_path / "k32.bip"
    main(["construct", "complete", "3", "2", "-o", str(path)])
    code, out, _ = run(capsys, "witness", "L2.1", str(path), "y1")
    assert code == 0 and json.loads(out)["validation"]["terminus_side"] == "X"


def test_bounds_formats(capsys):
    code, out, _ = run(capsys, "bounds", "5", "5", "3")
    doc = json.loads(out)
    assert doc["bounds"]["turan_formula"]["value"] == 13
    assert doc["bounds"]["turan_formula"]["applicable"] is False
    _, out, _ = run(capsys, "bounds", "4", "4", "3", "--format", "tsv")
    assert "bounds.turan_formula\t" in out


def test_usage_errors(capsys):
    assert main(["nonsense"]) == 2
    assert main(["cycles", "/no/such/file"]) == 2
    assert main(["construct", "L", "1", "2"]) == 2


def test_argument_helpers():
    assert parse_range("4..6") == [4, 5, 6]
    assert parse_range("4,5,7") == [4, 5, 7]
    assert parse_vertex("y3").index == 2
    with pytest.raises(Exception):
        parse_vertex("z1")
