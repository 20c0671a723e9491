import json

import pytest

from enabling.cli import main
from enabling.graphs import EdgeColouredGraph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_emits_graph_json_with_metadata(capsys):
    code, out, _ = run(capsys, "construct", "--family", "p4", "--params", "8")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 8
    assert doc["meta"]["construction"] == "p4"
    # the graph payload itself parses
    assert EdgeColouredGraph.from_json_dict(doc).n == 8


def test_construct_then_verify_pipe(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "--family", "extremal", "--params", "3,9")
    assert code == 0
    path = tmp_path / "g.json"
    path.write_text(out)
    code, out, _ = run(capsys, "verify", "--graph", str(path), "--targets", "0:3,1:9")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_verify_failure_exits_one(tmp_path, capsys):
    g = EdgeColouredGraph(4, 2, (0,) * 6)
    path = tmp_path / "red.json"
    path.write_text(g.to_json())
    code, out, err = run(capsys, "verify", "--graph", str(path), "--targets", "0:2,1:2")
    assert code == 1
    doc = json.loads(out)
    assert doc["ok"] is False
    assert doc["first_failure"] == [0, 1]


def test_certify_exits_zero_and_emits_exact_rationals(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "--family", "p4", "--params", "4")
    path = tmp_path / "p4.json"
    path.write_text(out)
    code, out, _ = run(capsys, "certify", "--graph", str(path), "--targets", "0:2,1:2")
    assert code == 0
    doc = json.loads(out)
    deltas = [c["delta"] for c in doc["certificates"]]
    assert deltas == [{"num": "1", "den": "2"}, {"num": "1", "den": "2"}]
    assert doc["bound"]["ceiling"] == 4


def test_certify_check_mode_round_trips(tmp_path, capsys):
    code, gout, _ = run(capsys, "construct", "--family", "p4", "--params", "4")
    gpath = tmp_path / "g.json"
    gpath.write_text(gout)
    code, cout, _ = run(
        capsys, "certify", "--graph", str(gpath), "--targets", "0:2,1:2"
    )
    cpath = tmp_path / "cert.json"
    cpath.write_text(cout)
    code, out, _ = run(capsys, "certify", "--graph", str(gpath), "--check", str(cpath))
    assert code == 0
    assert json.loads(out) == {"ok": True, "issues": []}

    # corrupt it and the checker must exit 1
    doc = json.loads(cout)
    doc["certificates"][0]["delta"] = {"num": "3", "den": "4"}
    cpath.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "certify", "--graph", str(gpath), "--check", str(cpath))
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_certify_not_enabling_is_exit_one(tmp_path, capsys):
    g = EdgeColouredGraph(4, 2, (0,) * 6)
    path = tmp_path / "red.json"
    path.write_text(g.to_json())
    code, _, err = run(capsys, "certify", "--graph", str(path), "--targets", "0:2,1:2")
    assert code == 1
    assert "not enabling" in err


def test_bound_two_colour(capsys):
    code, out, _ = run(capsys, "bound", "--two-colour", "3", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["lower"] == 8 and doc["exact"] == 8


def test_bound_multicolour(capsys):
    code, out, _ = run(capsys, "bound", "--multicolour", "4", "3")
    assert code == 0
    assert json.loads(out)["exact"] == 9


def test_search_existence_and_exit_codes(capsys):
    code, out, err = run(
        capsys, "search", "--k1", "3", "--k2", "3", "--n", "6", "--quiet"
    )
    assert code == 1
    assert json.loads(out)["found"] is False

    code, out, _ = run(capsys, "search", "--k1", "2", "--k2", "2", "--n", "4", "--quiet")
    assert code == 0
    doc = json.loads(out)
    assert doc["witness"] == [[0, 3], [1, 2]]
    assert "elapsed_seconds" not in doc


def test_search_min_n_mode(capsys):
    code, out, _ = run(
        capsys, "search", "--k1", "2", "--k2", "3", "--min-n", "--n-max", "8", "--quiet"
    )
    assert code == 0
    assert json.loads(out)["min_n"] == 6

    code, out, _ = run(
        capsys, "search", "--k1", "2", "--k2", "2", "--min-n", "--n-max", "3", "--quiet"
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["min_n"] is None and doc["reason"] == "exceeds n_max"


def test_search_witness_out(tmp_path, capsys):
    wpath = tmp_path / "w.json"
    code, _, _ = run(
        capsys,
        "search", "--k1", "2", "--k2", "2", "--n", "5",
        "--quiet", "--witness-out", str(wpath),
    )
    assert code == 0
    g = EdgeColouredGraph.from_json(wpath.read_text())
    assert g.n == 5


def test_search_timings_flag(capsys):
    code, out, _ = run(
        capsys, "search", "--k1", "2", "--k2", "2", "--n", "4", "--quiet", "--timings"
    )
    assert code == 0
    assert "elapsed_seconds" in json.loads(out)


def test_export_dot_uses_fixed_palette(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "--family", "prime", "--params", "2")
    path = tmp_path / "g.json"
    path.write_text(out)
    code, out, _ = run(capsys, "export-dot", "--graph", str(path))
    assert code == 0
    assert out.startswith("graph enabling {")
    assert 'color="red"' in out and 'color="blue"' in out and 'color="green"' in out
    assert out.rstrip().endswith("}")


def test_outputs_are_byte_deterministic(capsys):
    runs = []
    for _ in range(2):
        code, out, _ = run(capsys, "search", "--k1", "2", "--k2", "3", "--n", "6", "--quiet")
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]
    # shard count must not change the bytes either
    code, sharded, _ = run(
        capsys,
        "search", "--k1", "2", "--k2", "3", "--n", "6", "--quiet",
        "--shards-log2", "3",
    )
    assert sharded == runs[0]


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "construct", "--family", "p4", "--params", "x")[0] == 2
    assert run(capsys, "construct", "--family", "extremal", "--params", "2,3")[0] == 2
    assert run(capsys, "verify", "--graph", "/nonexistent", "--targets", "0:2")[0] == 2
    assert run(capsys, "search", "--k1", "2", "--k2", "2")[0] == 2
    assert run(capsys, "certify", "--graph", "x.json")[0] == 2
    assert run(capsys, "search", "--k1", "2", "--k2", "2", "--min-n")[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_output_file_flag(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(
        capsys, "bound", "--two-colour", "2", "2", "-o", str(target)
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["exact"] == 4
