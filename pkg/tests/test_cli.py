import json
import subprocess
import sys

import pytest

from fands.cli import main


def run(*argv):
    return main([str(a) for a in argv])


def test_build_small_table(tmp_path, small_table_path, capsys):
    out = tmp_path / "g.json"
    assert run("build", "--table", small_table_path, "--out", out) == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats["n_edges"] == 4
    assert stats["n_pairs_with_repeats"] == 4
    assert stats["n_conflict_topics"] == 3
    assert stats["n_stances"] == 9
    assert len(json.loads(out.read_text())["edges"]) == 4


def test_build_fnc_mini(tmp_path, data_dir, capsys):
    out = tmp_path / "g.json"
    code = run("build", "--stances", data_dir / "mini_stances.csv",
               "--bodies", data_dir / "mini_bodies.csv", "--out", out)
    assert code == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats["n_topics"] == 2 and stats["n_articles"] == 4 and stats["n_edges"] == 2


def test_build_missing_file_leaves_no_output(tmp_path):
    out = tmp_path / "g.json"
    assert run("build", "--table", tmp_path / "absent.csv", "--out", out) == 2
    assert not out.exists()
    assert list(tmp_path.iterdir()) == []


def test_build_bad_record_exit_code(tmp_path):
    bad = tmp_path / "t.csv"
    bad.write_text("topic_id,news_id,stance\n1,a,agree\n")
    assert run("build", "--table", bad, "--out", tmp_path / "g.json") == 2


def test_synth_and_rank_graph_b(tmp_path):
    g = tmp_path / "b.json"
    assert run("synth", "--preset", "graph-b", "--out", g) == 0
    out = tmp_path / "r.csv"
    assert run("rank", "--graph", g, "--method", "fands", "--out", out) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "rank,group,node_id,score,method"
    assert lines[1].split(",")[:3] == ["1", "1", "10"]
    assert lines[2].split(",")[:3] == ["2", "2", "1"]
    meta = json.loads((tmp_path / "r.convergence.json").read_text())
    assert meta["converged"] is True and meta["iterations"] > 0


def test_rank_count_graph_a(tmp_path):
    g = tmp_path / "a.json"
    run("synth", "--preset", "graph-a", "--out", g)
    out = tmp_path / "r.csv"
    assert run("rank", "--graph", g, "--method", "count", "--out", out) == 0
    assert out.read_text().splitlines()[1].split(",")[2] == "1"


def test_rank_percentage_needs_table(tmp_path):
    g = tmp_path / "a.json"
    table = tmp_path / "a.csv"
    run("synth", "--preset", "graph_a", "--out", g, "--table-out", table)
    assert run("rank", "--graph", g, "--method", "percentage", "--out", tmp_path / "x.csv") == 1
    out = tmp_path / "p.csv"
    assert run("rank", "--graph", g, "--method", "percentage", "--table", table, "--out", out) == 0
    rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
    assert [r[2] for r in rows[:3]] == ["1", "10", "11"]


def test_rank_bad_p(tmp_path):
    g = tmp_path / "a.json"
    run("synth", "--preset", "star", "--k", "3", "--out", g)
    assert run("rank", "--graph", g, "--method", "fands", "--p", "0", "--out", tmp_path / "r.csv") == 1


def test_rank_non_convergence_exit_code(tmp_path):
    g = tmp_path / "b.json"
    run("synth", "--preset", "graph_b", "--out", g)
    out = tmp_path / "r.csv"
    code = run("rank", "--graph", g, "--method", "fands", "--p", "0.25", "--max-iters", "2", "--out", out)
    assert code == 3
    assert json.loads((tmp_path / "r.convergence.json").read_text())["converged"] is False
    assert out.exists()


def test_synth_sizes(tmp_path):
    g = tmp_path / "s.json"
    assert run("synth", "--preset", "star", "--k", "8", "--out", g) == 0
    assert len(json.loads(g.read_text())["nodes"]) == 9
    assert run("synth", "--preset", "polygon", "--s", "4", "--t", "4", "--out", g) == 0
    assert len(json.loads(g.read_text())["edges"]) == 16
    assert run("synth", "--preset", "graph-a", "--out", g) == 0
    assert len(json.loads(g.read_text())["nodes"]) == 17
    assert run("synth", "--preset", "star", "--out", g) == 1


def test_compare_self(tmp_path, capsys):
    g = tmp_path / "a.json"
    run("synth", "--preset", "graph_b", "--out", g)
    capsys.readouterr()
    out = tmp_path / "c.json"
    assert run("compare", "--graph", g, "--methods", "fands,count,hits", "--top", "3", "--out", out) == 0
    data = json.loads(out.read_text())
    assert {(o["a"], o["b"]): o["overlap"] for o in data["overlap"]}[("fands", "count")] == 3
    json.loads(capsys.readouterr().out)


def test_export_dot_and_json(tmp_path, capsys):
    g = tmp_path / "m.json"
    run("synth", "--preset", "moon_hoax_path", "--out", g)
    e = tmp_path / "e.csv"
    run("rank", "--graph", g, "--method", "fands", "--out", tmp_path / "r.csv", "--energies-out", e)
    capsys.readouterr()
    assert run("export", "--graph", g, "--format", "dot", "--energies", e) == 0
    assert '2 [energy="150"]' in capsys.readouterr().out
    assert run("export", "--graph", g, "--format", "json") == 0
    assert len(json.loads(capsys.readouterr().out)["links"]) == 2


def test_export_empty_graph(tmp_path, capsys):
    g = tmp_path / "empty.json"
    g.write_text('{"nodes": [], "edges": []}')
    assert run("export", "--graph", g, "--format", "dot") == 0
    assert capsys.readouterr().out == "graph {}\n"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["rank", "--graph"])
    assert info.value.code == 1


def test_output_dir_env(tmp_path, monkeypatch):
    monkeypatch.setenv("FANDS_OUTPUT_DIR", str(tmp_path / "outdir"))
    assert run("synth", "--preset", "graph_a") == 0
    assert (tmp_path / "outdir" / "graph_a.json").exists()


def test_reproducible_outputs(tmp_path):
    outs = []
    for i in range(2):
        g = tmp_path / f"g{i}.json"
        r = tmp_path / f"r{i}.csv"
        run("synth", "--preset", "graph_b", "--out", g)
        run("rank", "--graph", g, "--method", "fands", "--out", r)
        outs.append((g.read_bytes(), r.read_bytes()))
    assert outs[0] == outs[1]


def test_console_entry_point(tmp_path):
    g = tmp_path / "a.json"
    proc = subprocess.run([sys.executable, "-m", "fands.cli", "synth", "--preset", "graph_a", "--out", str(g)],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert g.exists()


def test_compare_duplicate_methods_is_usage_error(tmp_path):
    g = tmp_path / "a.json"
    run("synth", "--preset", "graph_a", "--out", g)
    out = tmp_path / "c.csv"
    assert run("compare", "--graph", g, "--methods", "fands,fands", "--out", out) == 1
    assert not out.exists()


def test_compare_csv_output(tmp_path):
    g = tmp_path / "a.json"
    table = tmp_path / "a.csv"
    run("synth", "--preset", "graph_a", "--out", g, "--table-out", table)
    out = tmp_path / "c.csv"
    assert run("compare", "--graph", g, "--table", table, "--methods", "fands,percentage", "--top", "2", "--out", out) == 0
    assert out.read_text().splitlines()[1] == "1,1,1,1,1"
