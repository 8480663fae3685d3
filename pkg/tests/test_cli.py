import json

import pytest

from grakit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hpoly_json(capsys):
    code, out, _ = run(capsys, "hpoly", "--graph", "path:3")
    assert code == 0
    assert json.loads(out) == {"graph": "path:3", "h": [1, 3, 1]}


def test_normal_count(capsys):
    code, out, _ = run(capsys, "normal-count", "--system", "hyper", "--graph", "complete:4")
    assert code == 0
    assert json.loads(out)["count"] == 24


def test_tubes_singleton(capsys):
    code, out, _ = run(capsys, "tubes", "--graph", "path:1")
    assert code == 0
    assert json.loads(out)["tubes"] == [[1]]


def test_fvector_formats(capsys):
    code, out, _ = run(capsys, "fvector", "--graph", "path:3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["dim,count", "0,5", "1,5", "2,1"]
    code, out, _ = run(capsys, "fvector", "--graph", "path:3", "--format", "text")
    assert code == 0
    assert "f: [5, 5, 1]" in out


def test_sweep_catalan_and_factorial(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "path", "--range", "2..6",
                       "--command", "vertex-count")
    assert code == 0
    values = [line.split(",")[-1] for line in out.splitlines()[1:]]
    assert values == ["2", "5", "14", "42", "132"]
    code, out, _ = run(capsys, "sweep", "--family", "complete", "--range", "2..5",
                       "--command", "vertex-count")
    assert values and code == 0
    assert [line.split(",")[-1] for line in out.splitlines()[1:]] == ["2", "6", "24", "120"]


def test_sweep_single_row_and_jobs_determinism(capsys):
    code, out1, _ = run(capsys, "sweep", "--family", "path", "--range", "1..1",
                        "--command", "nested-count")
    assert code == 0
    assert out1.splitlines()[1:] == ["path,1,nested-count,1"]
    code, out_serial, _ = run(capsys, "sweep", "--family", "path", "--range", "2..5",
                              "--command", "normal-count", "--system", "grav")
    code2, out_parallel, _ = run(capsys, "sweep", "--family", "path", "--range", "2..5",
                                 "--command", "normal-count", "--system", "grav",
                                 "--jobs", "4")
    assert code == code2 == 0
    assert out_serial == out_parallel
    assert [line.split(",")[-1] for line in out_serial.splitlines()[1:]] == \
        ["2", "4", "8", "16"]


def test_tree_dot(capsys):
    code, out, _ = run(capsys, "tree", "--graph", "path:3",
                       "--tau", '{"tubes": [[1], [1, 2], [1, 2, 3]]}')
    assert code == 0
    assert out.startswith("digraph")
    assert "{1,2} | λ={2}" in out


def test_reduce_and_induce(capsys):
    code, out, _ = run(capsys, "reduce", "--graph", "complete:2",
                       "--tau", '{"tubes": [[1], [1, 2]]}')
    assert code == 0
    assert json.loads(out)["reduced"] == [[1, 2]]
    code, out, _ = run(capsys, "induce", "--graph", "path:3",
                       "--omega", '{"tubes": [[2, 3], [1, 2, 3]]}')
    assert code == 0
    assert json.loads(out)["induced"] == [[2], [2, 3], [1, 2, 3]]


def test_relations_which_and_system_flags(capsys):
    code, out1, _ = run(capsys, "relations", "--which", "hyper", "--graph", "path:3")
    code2, out2, _ = run(capsys, "relations", "--system", "hyper", "--graph", "path:3")
    assert code == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["span_dim"] == 2
    code, out, _ = run(capsys, "relations", "--graph", "path:3")
    assert code == 1


def test_identity_commands_exit_zero(capsys):
    for argv in (
        ["koszul-check", "--graph", "path:3"],
        ["check-gravity", "--graph", "path:3"],
        ["grav-dims", "--graph", "path:3"],
        ["axioms", "--graph", "path:3"],
    ):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert json.loads(out)["ok"] is True


def test_identity_failure_exits_two(capsys, monkeypatch):
    import grakit.cli as cli

    monkeypatch.setattr(cli.groebner, "koszul_check", lambda g, cap: {0: 2, 1: 1})
    code, out, _ = run(capsys, "koszul-check", "--graph", "path:3")
    assert code == 2
    assert json.loads(out)["ok"] is False


def test_input_errors_exit_one(capsys):
    assert run(capsys, "fvector", "--graph", "path:zzz")[0] == 1
    assert run(capsys, "fvector", "--graph", "banana:3")[0] == 1
    assert run(capsys, "fvector", "--graph", '{"vertices": [1], "edges": [[1, 1]]}')[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 1


def test_cap_and_env(capsys, monkeypatch):
    monkeypatch.setenv("GRAKIT_CAP", "3")
    assert run(capsys, "fvector", "--graph", "path:4")[0] == 1
    assert run(capsys, "fvector", "--graph", "path:4", "--cap", "9")[0] == 0
    monkeypatch.delenv("GRAKIT_CAP")
    assert run(capsys, "fvector", "--graph", "path:4")[0] == 0


def test_graph_file_input(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text('{"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]]}')
    code, out, _ = run(capsys, "betti", "--graph", str(path))
    assert code == 0
    assert json.loads(out)["betti"] == [1, 3, 1]


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "nested", "--graph", "path:4", "--augmented")[1] for _ in range(3)}
    assert len(outs) == 1
