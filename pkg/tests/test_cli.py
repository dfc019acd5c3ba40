import json

import pytest

from polity import InputError, nerve
from polity.cli import io, main
from polity.cli.fixtures import DEMOS, demo_files, gallopolis_site
from polity.cli.scenarios import WeightProfile, project_boxes, project_site, winning_viable


@pytest.fixture
def demo(tmp_path):
    for name in DEMOS:
        assert main(["demo", name, "--out", str(tmp_path)]) == 0
    return tmp_path


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nerve_and_knit_commands(demo, capsys):
    code, out, _ = run(capsys, "nerve", demo / "gallopolis.json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["complex"]) == 9 and [] not in doc["complex"]
    code, out, _ = run(capsys, "knit", demo / "gallopolis.json")
    assert [] in json.loads(out)["complex"]
    code, out, _ = run(capsys, "nerve", "--dot", demo / "gallopolis.json")
    assert out.startswith("graph nerve {") and '"CONS" -- "RIGHT";' in out


def test_canon_then_knit_round_trips(demo, capsys, tmp_path):
    site = tmp_path / "canon.json"
    assert main(["canon", str(demo / "appendix_formation.json"), "-o", str(site)]) == 0
    code, out, _ = run(capsys, "nerve", site)
    assert json.loads(out) == json.loads((demo / "appendix_formation.json").read_text())


def test_check_and_find(demo, capsys, tmp_path):
    left, right = demo / "triangle_left.json", demo / "triangle_right.json"
    code, out, _ = run(capsys, "find", "--kind", "s", left, right)
    assert code == 0
    mapfile = tmp_path / "map.json"
    mapfile.write_text(out)
    code, out, _ = run(capsys, "check", "--kind", "s", "--map", mapfile, left, right)
    assert code == 0 and json.loads(out)["holds"] is True
    code, out, _ = run(capsys, "find", "--kind", "b", left, right)
    assert code == 1 and out == "NONE\n"
    code, out, _ = run(capsys, "check", "--kind", "bg", right, right)
    assert code == 0
    code, out, _ = run(capsys, "check", "--kind", "bg", "--map", mapfile, left, right)
    assert code == 2


def test_check_c_maps(demo, capsys):
    f = demo / "triangle_boundary.json"
    code, out, _ = run(capsys, "check", "--kind", "bc", f, f)
    assert code == 0


def test_iso(demo, capsys):
    left, right = demo / "triangle_left.json", demo / "triangle_right.json"
    assert run(capsys, "iso", "--kind", "sg", left, right)[0] == 0
    assert run(capsys, "iso", "--kind", "bg", left, right)[0] == 1
    code, out, _ = run(capsys, "iso", "--kind", "b", left, left)
    assert code == 0 and json.loads(out)["base_map"] == {"1": "1", "2": "2", "3": "3"}


def test_delegation_command(demo, capsys):
    code, out, _ = run(capsys, "delegation", "--from", "1", "--to", "2", demo / "triangle_boundary.json")
    doc = json.loads(out)
    assert code == 0
    assert doc["simplicial"] and not doc["friendly"]
    assert doc["image"] == [["2"], ["3"], ["2", "3"]]
    assert "foundation_witness" not in doc
    code, out, _ = run(capsys, "delegation", "--from", "4", "--to", "2", demo / "appendix_formation.json")
    doc = json.loads(out)
    assert doc["friendly"]
    assert doc["foundation_witness"] == json.loads((demo / "appendix_site.json").read_text())


def test_projection_and_winning(demo, capsys, tmp_path):
    g, w = demo / "gallopolis.json", demo / "gallopolis_weights.json"
    assert run(capsys, "winning", "--weights", w, g)[0] == 1
    expected = {"E": ["LEFT", "SOCD", "LIBER"], "S": ["CONS", "LIBER", "RIGHT"]}
    for dim, coalition in expected.items():
        p = tmp_path / f"drop{dim}.json"
        assert main(["project", "--drop", dim, str(g), "-o", str(p)]) == 0
        code, out, _ = run(capsys, "winning", "--weights", w, p)
        assert code == 0
        assert [c["coalition"] for c in json.loads(out)["winning"]] == [coalition]


def test_box_route_matches_map_route():
    doc = gallopolis_site()
    a = io.load_site(doc)
    boxes = io.load_site_boxes(doc)
    for dim in ("E", "S", "O"):
        assert project_boxes(boxes, a.ground, dim) == project_site(a, dim)


def test_projection_needs_two_remaining_dimensions():
    doc = {"base": ["p"], "ground": {"product": {"dims": [
        {"name": "E", "values": ["1"]}, {"name": "S", "values": ["l", "r"]}]}},
        "profile": {"p": [{"E": ["1"], "S": ["l"]}]}}
    with pytest.raises(InputError):
        project_site(io.load_site(doc), "E")


def test_winning_coalitions_sorted_heaviest_first():
    a = project_site(io.load_site(gallopolis_site()), "E")
    w = WeightProfile({"LEFT": 28, "SOCD": 12, "CONS": 18, "LIBER": 20, "RIGHT": 22}, 30)
    weights = [w.of(s) for s in winning_viable(a, w)]
    assert weights == sorted(weights, reverse=True)
    with pytest.raises(InputError):
        WeightProfile({"LEFT": 1}, 2)


@pytest.mark.parametrize("name", DEMOS)
def test_save_load_save_is_byte_identical(name):
    for doc in demo_files(name).values():
        text = io.dumps(doc)
        if "weights" in doc:
            again = io.dumps(io.weights_doc(io.load_weights(json.loads(text))))
            assert again == text
        elif "complex" in doc:
            again = io.save_formation(io.load_formation(json.loads(text)))
            assert io.save_formation(io.load_formation(json.loads(again))) == again
        else:
            again = io.save_site(io.load_site(json.loads(text)))
            assert io.save_site(io.load_site(json.loads(again))) == again


def test_state_id_documents_round_trip_exactly(demo):
    text = (demo / "triangle_left.json").read_text()
    assert io.save_site(io.load_site(json.loads(text))) == text


@pytest.mark.parametrize("doc, path", [
    ({"base": ["a"], "ground": {"states": ["x"]}, "profile": {}}, "$.profile"),
    ({"base": ["a"], "ground": {"states": ["x"]}, "profile": {"a": ["q"]}}, "$.profile.a[0]"),
    ({"base": ["a"], "ground": {"states": ["x"]}, "profile": {"a": []}, "extra": 1}, "$"),
    ({"base": ["a", "a"], "ground": {"states": []}, "profile": {"a": []}}, "$.base"),
])
def test_bad_sites_name_the_offending_path(doc, path):
    with pytest.raises(InputError) as exc:
        io.load_site(doc)
    assert exc.value.path == path


def test_bad_input_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "nerve", bad)
    assert code == 2 and "line 1" in err
    assert run(capsys, "nerve", tmp_path / "missing.json")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_laws_and_oracle_commands(capsys):
    code, out, _ = run(capsys, "laws", "--suite", "naturality", "--seed", 1, "--trials", 20)
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "oracle", "--check", "PI_GAMMA", "--max-base", 2, "--max-ground", 2,
                       "--seed", 0, "--trials", 5)
    assert code == 0 and json.loads(out)["by_size"]["(2, 2)"] == 16
    code, out, _ = run(capsys, "oracle", "--list")
    assert "CANON_KNIT" in json.loads(out)
    assert run(capsys, "oracle", "--check", "PI_GAMMA")[0] == 2


def test_gallopolis_nerve_via_library():
    a = io.load_site(gallopolis_site())
    assert len(nerve(a)) == 9
