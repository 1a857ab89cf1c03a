"""Command-line surface: schemas, determinism, exit codes."""

import json

import pytest

from c2spider import cli
from c2spider.tqft import Spine


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_simples(capsys):
    code, out, _ = run(capsys, "cat", "simples", "--level", "2")
    assert code == 0
    data = json.loads(out)
    assert data["simples"] == [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]]
    assert data["q_order"] == 20


def test_determinism(capsys):
    outs = set()
    for _ in range(2):
        code, out, _ = run(capsys, "cat", "smatrix", "--level", "1")
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_fusion_cli(capsys):
    code, out, _ = run(capsys, "cat", "fusion", "--generic",
                       "--lhs", "1,0", "--rhs", "1,0")
    assert code == 0
    data = json.loads(out)
    assert data["decomposition"] == [[[0, 0], 1], [[0, 1], 1], [[2, 0], 1]]
    code, out, _ = run(capsys, "cat", "fusion", "--level", "1",
                       "--lhs", "1,0", "--rhs", "1,0")
    assert json.loads(out)["decomposition"] == [[[0, 0], 1], [[0, 1], 1]]


def test_web_eval_empty_and_loop(capsys, tmp_path):
    empty = {"schema": "c2spider/web/1", "vertices": [], "half_edges": [],
             "pairing": [], "edge_types": {}, "boundary": [], "n_in": 0,
             "free_loops": []}
    path = tmp_path / "empty.json"
    path.write_text(json.dumps(empty))
    code, out, _ = run(capsys, "web", "eval", "--web", str(path))
    assert code == 0
    assert json.loads(out)["scalar"] == {"num": [[0, 1, 1]], "den": [[0, 1, 1]]}
    loop = dict(empty, free_loops=["s"])
    path.write_text(json.dumps(loop))
    code, out, _ = run(capsys, "web", "eval", "--web", str(path))
    data = json.loads(out)
    assert data["scalar"]["num"] == [[-4, -1, 1], [-2, -1, 1], [2, -1, 1], [4, -1, 1]]


def test_web_rules_text_and_json(capsys):
    code, out, _ = run(capsys, "--format", "text", "web", "rules")
    assert code == 0 and "closed single loop" in out
    code, out, _ = run(capsys, "web", "rules")
    data = json.loads(out)
    assert data["schema"] == "c2spider/rules/1"
    assert len(data["faces"]) == 9


def test_clasp_cli(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("C2SPIDER_CACHE", str(tmp_path))
    code, out, _ = run(capsys, "clasp", "expand", "--n", "2")
    assert code == 0
    assert len(json.loads(out)["terms"]) == 3
    code, out, _ = run(capsys, "clasp", "trace", "--a", "1")
    scalar = json.loads(out)["scalar"]
    assert scalar["num"] == [[-4, -1, 1], [-2, -1, 1], [2, -1, 1], [4, -1, 1]]
    code, out, _ = run(capsys, "clasp", "theta", "--a", "1", "--b", "1", "--c", "1")
    assert json.loads(out)["scalar"]["num"] == []


def test_tqft_cli(capsys, tmp_path):
    spine_path = tmp_path / "theta.json"
    spine_path.write_text(json.dumps(Spine.theta_graph().to_json()))
    code, out, _ = run(capsys, "tqft", "dim", "--spine", str(spine_path),
                       "--level", "1", "--verlinde")
    data = json.loads(out)
    assert data["dimension"] == 10 and data["verlinde"] == 10
    code, out, _ = run(capsys, "tqft", "torus", "--level", "1")
    data = json.loads(out)
    assert len(data["twist"]) == 3


def test_faithful_cli(capsys, tmp_path):
    spine_path = tmp_path / "theta.json"
    spine_path.write_text(json.dumps(Spine.theta_graph().to_json()))
    walk_path = tmp_path / "walk.json"
    walk_path.write_text(json.dumps(
        {"schema": "c2spider/walk/1", "steps": [[0, 0], [1, 1]]}))
    code, out, _ = run(capsys, "faithful", "certify", "--spine", str(spine_path),
                       "--walk", str(walk_path), "--level", "1")
    data = json.loads(out)
    assert data["conclusion"] == "detected"
    code, out, _ = run(capsys, "faithful", "torus", "--max-n", "10")
    data = json.loads(out)
    assert len(data["table"]) == 10
    assert all(row["min_level"] >= 1 for row in data["table"])


def test_cache_gc_cli(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("C2SPIDER_CACHE", str(tmp_path))
    code, out, _ = run(capsys, "cache", "gc")
    assert code == 0
    data = json.loads(out)
    assert data["removed"] == 0


def test_domain_error_exit_code(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("C2SPIDER_CACHE", str(tmp_path))
    code, out, err = run(capsys, "clasp", "trace", "--a", "0", "--b", "3")
    assert code == 1
    assert json.loads(err)["error"] == "NotImplementedError"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["cat", "simples"])
    assert exc.value.code == 2


def test_precision_display_only(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("C2SPIDER_CACHE", str(tmp_path))
    code, out, _ = run(capsys, "--precision", "3", "clasp", "trace", "--a", "1")
    data = json.loads(out)
    assert data["scalar"]["display_at_q1"] == -4.0
