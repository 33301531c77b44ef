import json

import pytest

from cvectors import quiverio
from cvectors.cli import main
from cvectors.quiverio import QuiverFileError


def write(tmp_path, obj, name="q.json"):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots_and_max(capsys):
    code, out, _ = run(capsys, "roots", "D4")
    assert code == 0 and json.loads(out)["count"] == 12
    code, out, _ = run(capsys, "roots", "--max", "E8")
    assert json.loads(out) == {"type": "E8", "value": 6, "vertices": [4]}


def test_mutate_word(capsys, tmp_path):
    path = write(tmp_path, {"n": 2, "arrows": [[1, 2]]})
    code, out, _ = run(capsys, "mutate", "--quiver", path, "--word", "1")
    seed = json.loads(out)
    assert code == 0
    assert seed["c"] == [[-1, 1], [0, 1]]


def test_seeds_and_dot(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, out, err = run(capsys, "seeds", "--type", "A2", "--dot", str(dot))
    assert code == 0 and len(json.loads(out)) == 10
    text = dot.read_text()
    assert text.startswith("graph exchange {") and text.count(" -- ") >= 9
    assert "exhaustive=True" in err


def test_cvectors_threads_do_not_matter(capsys):
    _, one, _ = run(capsys, "cvectors", "--type", "A3")
    _, four, _ = run(capsys, "--threads", "4", "cvectors", "--type", "A3")
    assert one == four
    assert len(json.loads(one)["positive"]) == 6


def test_classify(capsys, tmp_path):
    path = write(tmp_path, {"b": [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]})
    code, out, _ = run(capsys, "classify", "--quiver", path)
    assert code == 0 and json.loads(out)["type"] == "A3"
    code, out, _ = run(capsys, "classify", "--quiver", write(tmp_path, {"n": 2, "arrows": [[1, 2]] * 2}, "k.json"))
    assert json.loads(out)["type"] == "infinite"


def test_rep_commands(capsys, tmp_path):
    path = write(tmp_path, {"n": 3, "arrows": [[1, 2], [2, 3]]})
    code, out, _ = run(capsys, "rep", "indecomposables", path)
    assert code == 0 and json.loads(out)["count"] == 6
    code, out, _ = run(capsys, "rep", "hom", path, "1,1,0", "0,1,0")
    h = json.loads(out)
    assert h["hom"] - h["ext"] == h["euler"]
    code, _, err = run(capsys, "rep", "hom", path, "2,0,0", "0,1,0")
    assert code == 2 and "no indecomposable" in err


def test_cat_clusters(capsys, tmp_path):
    path = write(tmp_path, {"n": 2, "arrows": [[1, 2]]})
    dot = tmp_path / "c.dot"
    code, out, _ = run(capsys, "cat", "clusters", path, "--dot", str(dot))
    res = json.loads(out)
    assert code == 0 and res["count"] == 5 and res["exhaustive"]
    assert dot.read_text().count(" -- ") == 5


def test_cat_cmodule_example(capsys, tmp_path):
    # arrows in the orientation matching the worked example (see README)
    path = write(tmp_path, {"n": 3, "arrows": [[3, 2], [2, 1], [3, 1]]})
    code, out, _ = run(capsys, "cat", "cmodule", path, "--word", "1,3,2", "--j", "2")
    res = json.loads(out)
    assert code == 0
    assert res["neg"] == [0, 1, 1] and res["c"] == [0, -1, -1]
    assert res["sign"] == "negative" and res["agrees"]


@pytest.mark.parametrize("claim, extra", [
    ("theorem6", ["--type", "A3"]),
    ("theorem2", ["--type", "A2", "--depth", "4"]),
    ("remark7", ["--type", "A3"]),
    ("bound", ["--rank-cap", "4"]),
])
def test_verify_claims(capsys, claim, extra):
    code, out, err = run(capsys, "verify", claim, *extra)
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"
    assert "timing_seconds" not in rep
    assert claim in err


def test_verify_json_file_and_timing(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "theorem6", "--type", "A2", "--timing", "--json", str(target))
    assert code == 0 and out == ""
    assert "timing_seconds" in json.loads(target.read_text())


def test_verify_bound_limited_exits_one(capsys, tmp_path):
    path = write(tmp_path, {"n": 3, "arrows": [[1, 2], [2, 3], [1, 3]]})
    code, out, _ = run(capsys, "verify", "remark7", "--quiver", path, "--budget", "100")
    assert code == 1 and json.loads(out)["status"] == "bound-limited"


def test_version_and_claims(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("cvectors ")
    with pytest.raises(SystemExit):
        main(["--list-claims"])
    ids = [c["id"] for c in json.loads(capsys.readouterr().out)]
    assert ids == ["theorem2", "theorem6", "remark7", "bound", "example10"]


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    err = capsys.readouterr().err
    assert json.loads(err.strip().splitlines()[-1])["error"]["type"] == "UsageError"
    code, _, err = run(capsys, "mutate")
    assert code == 2 and "quiver is required" in err
    code, _, err = run(capsys, "roots", "F4")
    assert code == 2


@pytest.mark.parametrize("text, position", [
    ('{"n": 3, "arrows": [[1, 2], [2, 4]]}', "$.arrows[1][1]"),
    ('{"n": 3, "arrows": [[1, 1]]}', "$.arrows[0]"),
    ('{"n": 2, "arrows": [[1, "x"]]}', "$.arrows[0][1]"),
    ('{"b": [[0, 1], [1, 0]]}', "$.b[0][1]"),
    ('{"b": [[0, 1], [-1]]}', "$.b[1]"),
    ('{"n": 2, "colour": 1}', "$.colour"),
    ('{"n": 2, "word": [3]}', "$.word[0]"),
    ('[1, 2]', "$"),
    ('{"n": 2,\n "arrows": [[1 2]]}', "line 2, column 16"),
])
def test_malformed_files(capsys, tmp_path, text, position):
    path = write(tmp_path, text)
    with pytest.raises(QuiverFileError) as exc:
        quiverio.load(path)
    assert exc.value.position == position
    code, _, err = run(capsys, "seeds", "--quiver", path)
    assert code == 2
    e = json.loads(err)["error"]
    assert e["type"] == "QuiverFileError" and e["position"] == position and e["source"] == path


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "seeds", "--quiver", str(tmp_path / "none.json"))
    assert code == 2 and json.loads(err)["error"]["position"] == "file"


def test_word_parsing():
    assert quiverio.parse_word("1,3,2", 3) == (0, 2, 1)
    assert quiverio.parse_word(" ", 3) == ()
    with pytest.raises(QuiverFileError):
        quiverio.parse_word("1,4", 3)
    with pytest.raises(QuiverFileError):
        quiverio.parse_word("1,a", 3)


def test_quiver_file_roundtrip():
    qf = quiverio.parse_quiver({"n": 3, "arrows": [[1, 2], [1, 2], [3, 2]], "name": "x", "word": [2]})
    again = quiverio.parse_quiver(qf.to_json())
    assert (again.b == qf.b).all() and again.word == (1,) and again.name == "x"
    assert quiverio.b_to_arrows(qf.b) == [(0, 1), (0, 1), (2, 1)]
