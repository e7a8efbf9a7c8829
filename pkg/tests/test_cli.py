import json
from pathlib import Path

import pytest

from lfrep import io
from lfrep.cli import main
from lfrep.fixtures import FIXTURES, a_n
from lfrep.homs import is_isomorphic
from lfrep.rep import projective_at
from lfrep.verify import EXPECTED_CLASSIFICATION

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, payload) -> Path:
    p = tmp_path / name
    p.write_text(json.dumps(payload))
    return p


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_shipped_fixture_files_match_code(name):
    assert io.load_quiver(FIX / f"{name}.json") == FIXTURES[name]()


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_classify(capsys, name):
    code, out, _ = run(capsys, "classify", FIX / f"{name}.json")
    assert code == 0
    doc = json.loads(out)
    assert (doc["star"], doc["dynkin"], doc["sourced"], doc["sinked"]) == EXPECTED_CLASSIFICATION[name]


def test_classify_zigzag_payload(capsys):
    code, out, _ = run(capsys, "classify", FIX / "zigzag.json")
    assert code == 0
    assert json.loads(out) == {"star": False, "dynkin": "A_inf", "sourced": False, "sinked": False}


def test_corrupted_arrow_field(capsys, tmp_path):
    doc = json.loads((FIX / "dinf.json").read_text())
    doc["core"]["arrows"][0]["from"] = 7
    code, _, err = run(capsys, "classify", write(tmp_path, "bad.json", doc))
    assert code == 2
    assert "$.core.arrows[0].from" in err


def test_unknown_field_and_command(capsys, tmp_path):
    doc = json.loads((FIX / "ray.json").read_text())
    doc["extra"] = 1
    assert run(capsys, "classify", write(tmp_path, "bad.json", doc))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    code, _, err = run(capsys, "classify", tmp_path / "missing.json")
    assert code == 2 and err.count("$:") == 1


def test_validate_exit_codes(capsys, tmp_path):
    assert run(capsys, "validate", FIX / "ray.json")[0] == 0
    cyc = {"core": {"vertices": ["a", "b"], "arrows": [{"id": "x", "from": "a", "to": "b"}, {"id": "y", "from": "b", "to": "a"}]}, "tails": []}
    code, out, _ = run(capsys, "validate", write(tmp_path, "cyc.json", cyc))
    assert code == 1
    assert json.loads(out)["violations"][0]["kind"] == "directed_cycle"


def test_inventory(capsys):
    code, out, _ = run(capsys, "inventory", FIX / "example2.json")
    assert code == 0
    doc = json.loads(out)
    assert doc["quasi_wings"] == 2 and doc["linear_components"] is True and doc["preprojective_full"] is False


def test_knit(capsys, tmp_path):
    code, out, _ = run(capsys, "knit", FIX / "ray.json", "--depth", 2, "--radius", 6)
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "preprojective" and any(v["status"] == "unresolved" for v in doc["vertices"])
    assert run(capsys, "knit", FIX / "ray.json")[0] == 2  # tails need a radius
    a2 = write(tmp_path, "a2.json", io.quiver_to_json(a_n("R")))
    code, out, _ = run(capsys, "knit", a2, "--preinjective")
    doc = json.loads(out)
    assert doc["kind"] == "preinjective" and len(doc["vertices"]) == 3


def test_rep_round_trips_through_status_and_hom(capsys, tmp_path):
    q = FIX / "dinf.json"
    made = {}
    for label, extra in [
        ("p", ["--make", "proj", "--at", "x0"]),
        ("i", ["--make", "inj", "--at", "@0:2"]),
        ("s", ["--make", "simple", "--at", "y"]),
        ("w", ["--make", "walk", "--start", "x0", "--steps", "a,b^-1"]),
        ("r", ["--make", "walk", "--start", "x1", "--tail-out", "0"]),
    ]:
        code, out, _ = run(capsys, "rep", q, *extra)
        assert code == 0
        made[label] = write(tmp_path, f"{label}.json", json.loads(out))
    qp = io.load_quiver(q)
    assert is_isomorphic(io.load_rep(qp, made["p"]), projective_at(qp, "x0"))
    for path in made.values():
        code, out, _ = run(capsys, "status", q, path)
        assert code == 0 and json.loads(out)["indecomposable"] is True
    code, out, _ = run(capsys, "status", q, made["r"])
    doc = json.loads(out)
    assert doc["fg"] and doc["fp"] and not doc["fcg"] and not doc["finite_dimensional"]
    code, out, _ = run(capsys, "hom", q, made["p"], made["w"])
    assert code == 0 and json.loads(out)["dim"] == 1
    code, out, _ = run(capsys, "hom", q, made["p"], made["p"])
    assert json.loads(out)["dim"] == 1


def test_rep_errors(capsys):
    assert run(capsys, "rep", FIX / "dinf.json", "--make", "proj")[0] == 2
    assert run(capsys, "rep", FIX / "dinf.json", "--make", "proj", "--at", "nope")[0] == 2
    assert run(capsys, "rep", FIX / "dinf.json", "--make", "walk", "--start", "x0", "--steps", "a,a^-1")[0] == 2


def test_chain(capsys, tmp_path):
    code, out, _ = run(capsys, "rep", FIX / "zigzag.json", "--make", "walk", "--start", "0", "--tail-out", "0")
    seed = write(tmp_path, "m0.json", json.loads(out))
    code, out, _ = run(capsys, "chain", FIX / "zigzag.json", seed, "--steps", 2)
    assert code == 0
    doc = json.loads(out)
    assert len(doc["members"]) == 3 and doc["links"] == ["mono", "epi"] and doc["repeated_classes"] == []


def test_wing(capsys):
    code, out, _ = run(capsys, "wing", "--lo", 0, "--hi", 2)
    assert code == 0 and len(json.loads(out)["vertices"]) == 6
    assert run(capsys, "wing", "--lo", 0)[0] == 2
    code, out, _ = run(capsys, "wing", "--lo", 0, "--window", -3, 3, 4)
    assert code == 0
    assert run(capsys, "wing", "--lo", 3, "--hi", 1)[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "oracle", "--n", 3)
    assert code == 0 and json.loads(out)["violations"] == []
    assert run(capsys, "verify", "oracle")[0] == 2
    assert run(capsys, "verify", "oracle", "--n", 40)[0] == 2


def test_verify_exit_code_on_violation(capsys, monkeypatch):
    from lfrep import cli
    from lfrep.verify import SuiteResult

    def broken(*a, **k):
        res = SuiteResult()
        res.add("planted", False, "deliberate")
        return res

    monkeypatch.setattr(cli, "fixture_suite", broken)
    code, out, _ = run(capsys, "verify", "fixtures")
    assert code == 1 and json.loads(out)["violations"][0]["name"] == "planted"


def test_export_dot(capsys, tmp_path):
    a2 = write(tmp_path, "a2.json", io.quiver_to_json(a_n("R")))
    code, out, _ = run(capsys, "export", "dot", "knit", a2)
    assert code == 0 and out.startswith("digraph") and out.count(" -> ") == 2
    code, out, _ = run(capsys, "export", "dot", "wing", "--lo", 0, "--hi", 0)
    assert code == 0 and out.count("[label=") == 1
    code, out, _ = run(capsys, "export", "dot", "oracle", a2)
    assert code == 0 and out.count("[label=") == 3


def test_output_is_deterministic(capsys):
    first = run(capsys, "knit", FIX / "dinf.json", "--depth", 2, "--radius", 5)
    second = run(capsys, "knit", FIX / "dinf.json", "--depth", 2, "--radius", 5)
    assert first == second
