import json
import subprocess
import sys

import oracles
from chordlab.cli import main
from chordlab.graph6 import write_edge_list, write_graph6


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_counts(tmp_path, capsys):
    code, out, _ = run_cli(["generate", "--n", "4"], capsys)
    assert code == 0
    assert len(out.strip().splitlines()) == 1
    code, out, _ = run_cli(["generate", "--n", "6"], capsys)
    assert code == 0
    assert len(out.strip().splitlines()) == 2


def test_generate_rejects_odd(capsys):
    code, _, err = run_cli(["generate", "--n", "5"], capsys)
    assert code == 2
    assert "even" in err


def test_generate_to_file_roundtrips(tmp_path, capsys):
    out = tmp_path / "c8.g6"
    code, _, _ = run_cli(["generate", "--n", "8", "--out", str(out)], capsys)
    assert code == 0
    from chordlab.graph6 import parse_graph6

    lines = out.read_text().strip().splitlines()
    assert len(lines) == 5
    for line in lines:
        parse_graph6(line)


def _write_corpus(tmp_path, graphs, name="corpus.g6"):
    f = tmp_path / name
    f.write_text("".join(write_graph6(g) + "\n" for g in graphs))
    return f


def test_verify_zhan2_json(tmp_path, capsys, corpus):
    f = _write_corpus(tmp_path, corpus[6])
    code, out, _ = run_cli(["verify", "--mode", "zhan2", "--in", str(f)], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["graphs"] == 2 == len(rep["rows"])
    assert rep["minimum"] >= 1
    assert rep["violations"] == 0


def test_verify_chords_includes_petersen(tmp_path, capsys):
    f = _write_corpus(tmp_path, [oracles.petersen()])
    code, out, _ = run_cli(["verify", "--mode", "chords", "--in", str(f)], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["rows"][0]["value"] == 3


def test_verify_skips_gated_graphs(tmp_path, capsys):
    f = _write_corpus(tmp_path, [oracles.two_k4_minus_edge_bridge()])
    code, out, _ = run_cli(["verify", "--mode", "chords", "--in", str(f)], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["rows"][0]["value"] is None
    assert rep["checked"] == 0


def test_verify_deterministic_and_csv(tmp_path, capsys, corpus):
    f = _write_corpus(tmp_path, corpus[6] + [oracles.petersen()])
    code, out1, _ = run_cli(["verify", "--mode", "zhan2", "--in", str(f)], capsys)
    code, out2, _ = run_cli(["verify", "--mode", "zhan2", "--in", str(f)], capsys)
    assert out1 == out2
    code, out_csv, _ = run_cli(
        ["verify", "--mode", "zhan2", "--in", str(f), "--format", "csv"], capsys
    )
    assert code == 0
    lines = out_csv.strip().splitlines()
    assert lines[0].startswith("graph6,")
    assert len(lines) == 4


def test_verify_parse_error_names_line(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_text(write_graph6(oracles.k4()) + "\nC\n")
    code, _, err = run_cli(["verify", "--mode", "zhan2", "--in", str(f)], capsys)
    assert code == 3
    assert "line 2" in err


def test_verify_missing_file(tmp_path, capsys):
    code, _, err = run_cli(
        ["verify", "--mode", "zhan2", "--in", str(tmp_path / "nope.g6")], capsys
    )
    assert code == 3


def test_verify_jobs_matches_serial(tmp_path, capsys, corpus):
    f = _write_corpus(tmp_path, corpus[8])
    _, serial, _ = run_cli(["verify", "--mode", "zhan2", "--in", str(f)], capsys)
    _, parallel, _ = run_cli(
        ["verify", "--mode", "zhan2", "--in", str(f), "--jobs", "2"], capsys
    )
    assert serial == parallel


def test_extend_k33(tmp_path, capsys):
    f = tmp_path / "k33.txt"
    f.write_text(write_edge_list(oracles.k33()))
    trace = tmp_path / "trace.json"
    code, out, err = run_cli(
        ["extend", "--graph", str(f), "--path", "0,4,1,3", "--trace", str(trace)],
        capsys,
    )
    assert code == 0
    vertices = [int(tok) for tok in out.strip().split(",")]
    assert len(vertices) >= 5
    blob = json.loads(trace.read_text())
    assert blob["final_path"] == vertices


def test_extend_refusal_names_bound_vertices(tmp_path, capsys):
    f = tmp_path / "k4.g6"
    f.write_text(write_graph6(oracles.k4()) + "\n")
    code, _, err = run_cli(["extend", "--graph", str(f), "--path", "0,2,3,1"], capsys)
    assert code == 2
    assert "P-bound vertex" in err and "v=2" in err


def test_extend_malformed_path(tmp_path, capsys):
    f = tmp_path / "k4.g6"
    f.write_text(write_graph6(oracles.k4()) + "\n")
    code, _, err = run_cli(["extend", "--graph", str(f), "--path", "0,zz"], capsys)
    assert code == 2


def test_lemmas_suites(capsys):
    for which in ("parity", "second-cycle", "coloring"):
        code, out, _ = run_cli(["lemmas", "--which", which, "--seeds", "8"], capsys)
        assert code == 0
        assert "8/8 pass" in out


def test_lemmas_krange(capsys):
    code, out, _ = run_cli(
        ["lemmas", "--which", "parity", "--seeds", "6", "--k", "3..4"], capsys
    )
    assert code == 0


def test_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("CHORDLAB_SEED", "17")
    code, out, _ = run_cli(["lemmas", "--which", "parity", "--seeds", "4"], capsys)
    assert code == 0


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chordlab.cli", "generate", "--n", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "C~"
