import contextlib
import io
import json

import pytest

from minuscule.catalog import FamilyId, all_family_ids, build
from minuscule.cli import run


def capture(argv):
    buf = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = run(argv)
    return code, buf.getvalue(), err.getvalue()


def family_args(fam: FamilyId) -> list[str]:
    kind = {
        "A_standard": "a-standard",
        "A_exterior": "a-exterior",
        "B": "b",
        "C": "c",
        "D_standard": "d-standard",
        "D_spin": "d-spin",
        "E6": "e6",
        "E7": "e7",
    }[fam.kind]
    args = ["catalog", "--family", kind]
    if fam.kind not in ("E6", "E7"):
        args += ["--n", str(fam.n)]
    if fam.kind == "A_exterior":
        args += ["--j", str(fam.j)]
    return args


def test_catalog_classify_round_trip(tmp_path):
    for fam in all_family_ids(5) + [FamilyId("E6", 6), FamilyId("E7", 7)]:
        code, out, _ = capture(family_args(fam))
        assert code == 0
        path = tmp_path / "poset.json"
        path.write_text(out)
        code, out, _ = capture(["classify", str(path)])
        assert code == 0
        data = json.loads(out)
        assert data["minuscule"] is True
        assert data["components"][0]["family"] is not None
        matches = set(data["components"][0]["matches"])
        assert str(fam) in matches, (str(fam), matches)


def test_verify_verb(tmp_path):
    code, out, _ = capture(["catalog", "--family", "b", "--n", "3"])
    path = tmp_path / "b3.json"
    path.write_text(out)
    code, out, _ = capture(["verify", str(path)])
    assert code == 0
    data = json.loads(out)
    assert data["holds"] is True
    assert {r["property"] for r in data["reports"]} == {
        "EC", "NA", "AC", "ICE2", "UCB1", "LCB1",
    }
    code, out, _ = capture(["verify", str(path), "--property", "S2", "--property", "S3"])
    assert code == 0


def test_verify_negative_exit(tmp_path):
    code, out, _ = capture(["extend", "--shape", "2,2,2"])
    assert code == 1
    data = json.loads(out)
    path = tmp_path / "blocked.json"
    path.write_text(json.dumps(data["poset"]))
    code, out, _ = capture(["verify", str(path)])
    assert code == 1
    reports = {r["property"]: r for r in json.loads(out)["reports"]}
    assert reports["LCB1"]["holds"] is False


def test_extend_verbs():
    code, out, _ = capture(["extend", "--shape", "3,1,2", "--trace"])
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "minuscule"
    assert data["stages"][0]["extension_set"] == ["3"]
    assert len(data["poset"]["elements"]) == 16

    code, out, _ = capture(["extend", "--shape", "5,1,2", "--trace"])
    assert code == 1
    data = json.loads(out)
    assert data["reason"]["census"] == 3
    assert data["assessments"] == 9


def test_extend_matches_fig_extension_sets():
    # seed ids: 1..5 down the top chain (5 = splitting element), 6 the short
    # arm, 7..8 the long arm
    code, out, _ = capture(["extend", "--shape", "5,1,2", "--trace"])
    data = json.loads(out)
    sets = [tuple(stage["extension_set"]) for stage in data["stages"]]
    assert sets == [
        ("5",),
        ("4", "7"),
        ("3", "5"),
        ("2", "4", "6"),
        ("1", "3", "5"),
        ("2", "4", "7"),
        ("3", "5", "8"),
        ("4", "6", "7"),
    ]


def test_represent_verb(tmp_path):
    code, out, _ = capture(["catalog", "--index", "A,4,2"])
    path = tmp_path / "a42.json"
    path.write_text(out)
    code, out, _ = capture(["represent", str(path), "--relations", "--weights"])
    assert code == 0
    data = json.loads(out)
    assert data["splits"] == 10
    assert data["relations"]["all_pass"] is True
    assert len(data["weights"]) == 10
    for entry in data["weights"]:
        assert set(entry["weight"].values()) <= {-1, 0, 1}


def test_coroots_verb():
    code, out, _ = capture(["coroots", "--type", "A", "--n", "4", "--j", "2"])
    assert code == 0
    data = json.loads(out)
    assert data["highest"] == [1, 1, 1, 1]
    assert data["colors_in_order"] == ["2", "1", "3", "2", "4", "3"]
    assert len(data["filter"]) == 6


def test_coroots_psi_on_file(tmp_path):
    code, out, _ = capture(["catalog", "--index", "A,4,2"])
    path = tmp_path / "a42.json"
    path.write_text(out)
    code, out, _ = capture(
        ["coroots", "--type", "A", "--n", "4", "--j", "2", "--psi", str(path)]
    )
    assert code == 0
    data = json.loads(out)
    assert data["psi"]["j"] == 2
    assert data["psi"]["colors_in_order"] == ["2", "1", "3", "2", "4", "3"]


def test_window_verb():
    code, out, _ = capture(["window", "--chain", "4,3"])
    assert code == 0
    assert json.loads(out)["holds"] is True

    code, _, err = capture(["window", "--chain", "2,3"])
    assert code == 2
    assert "error" in err


def test_window_verb_on_catalog_file(tmp_path):
    code, out, _ = capture(["catalog", "--family", "a-exterior", "--n", "4", "--j", "2"])
    data = json.loads(out)
    data["boundary"] = []
    path = tmp_path / "win.json"
    path.write_text(json.dumps(data))
    code, out, _ = capture(["window", str(path)])
    assert code == 1  # G3-window fails on a finite poset
    reports = {r["property"]: r for r in json.loads(out)["reports"]}
    assert reports["G3-window"]["holds"] is False


def test_classify_window_file_is_out_of_scope(tmp_path):
    code, out, _ = capture(["window", "--chain", "3,2"])
    code, out, _ = capture(["catalog", "--family", "b", "--n", "2"])
    data = json.loads(out)
    data["boundary"] = [1]
    path = tmp_path / "w.json"
    path.write_text(json.dumps(data))
    code, out, _ = capture(["classify", str(path)])
    assert code == 1
    assert json.loads(out)["classification"] == "infinite-out-of-scope"


def test_input_errors_exit_two(tmp_path):
    code, _, err = capture(["classify", "/does/not/exist.json"])
    assert code == 2
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"version": 99}))
    code, _, err = capture(["classify", str(path)])
    assert code == 2
    assert "version" in err
    code, _, _ = capture(["catalog", "--family", "nope"])
    assert code == 2
    code, _, _ = capture(["catalog", "--index", "A,4,9"])
    assert code == 2


def test_byte_for_byte_determinism():
    for argv in (
        ["catalog", "--family", "d-spin", "--n", "6"],
        ["extend", "--shape", "4,1,2", "--trace"],
        ["coroots", "--type", "E", "--n", "6", "--j", "1"],
    ):
        _, first, _ = capture(argv)
        _, second, _ = capture(argv)
        assert first == second


def test_dot_outputs():
    code, out, _ = capture(["catalog", "--family", "e6", "--dot"])
    assert code == 0
    assert out.startswith("digraph")
    code, out, _ = capture(["coroots", "--type", "A", "--n", "4", "--j", "2", "--dot"])
    assert code == 0
    assert "digraph" in out


def test_poset_files_validate_against_published_schema(tmp_path):
    jsonschema = pytest.importorskip("jsonschema")
    import importlib.resources as resources

    schema = json.loads(
        resources.files("minuscule").joinpath("schemas/poset.schema.json").read_text()
    )
    for argv in (
        ["catalog", "--family", "e6"],
        ["catalog", "--index", "B,3,3"],
        ["window", "--chain", "3,2"],
    ):
        code, out, _ = capture(argv)
        assert code == 0
        payload = json.loads(out)
        if argv[0] == "window":
            # re-emit the window's poset with its boundary for validation
            code, out, _ = capture(["catalog", "--family", "b", "--n", "2"])
            payload = json.loads(out)
            payload["boundary"] = [1]
        jsonschema.validate(payload, schema)


def test_classify_reads_stdin(monkeypatch):
    code, out, _ = capture(["catalog", "--family", "c", "--n", "3", "--json"])
    assert code == 0
    import io as _io
    import sys as _sys

    monkeypatch.setattr(_sys, "stdin", _io.StringIO(out))
    code, out, _ = capture(["classify", "-"])
    assert code == 0
    assert json.loads(out)["components"][0]["family"] == "C(3)"
