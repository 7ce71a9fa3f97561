import pytest
from hypothesis import given

from conftest import staircase_paths
from nubrick.grid import build_region
from nubrick.projection import export_realization
from nubrick.serialize import (
    SCHEMA,
    RealizationBundle,
    dot_string,
    dumps,
    loads,
    off_string,
    parse_off,
    write_atomic,
)


@given(staircase_paths)
def test_json_round_trip(s):
    b = export_realization(build_region(s))
    assert loads(dumps(b)) == b
    assert dumps(loads(dumps(b))) == dumps(b)


def test_json_is_deterministic():
    r = build_region("NENENEENE")
    assert dumps(export_realization(r)) == dumps(export_realization(r))


def test_schema_is_checked():
    d = export_realization(build_region("NENE")).to_dict()
    assert d["schema"] == SCHEMA
    d["schema"] = "other/0"
    with pytest.raises(ValueError):
        RealizationBundle.from_dict(d)


def test_off_export():
    b = export_realization(build_region("NENEENE"))
    verts, tris = parse_off(off_string(b))
    assert len(verts) == 7
    assert len(tris) == 3 + 2  # pentagon + square, fan-triangulated
    assert all(len(v) == 3 for v in verts)
    assert off_string(b) == off_string(export_realization(build_region("NENEENE")))


def test_off_rejects_high_dimension():
    b = export_realization(build_region("ENEEN"))  # unprojected, 6 coordinates
    with pytest.raises(ValueError):
        off_string(b)


def test_write_atomic(tmp_path):
    target = tmp_path / "x.json"
    write_atomic(target, "abc\n")
    write_atomic(target, "def\n")
    assert target.read_text() == "def\n"
    assert [p.name for p in tmp_path.iterdir()] == ["x.json"]


def test_dot_string():
    text = dot_string("g", ["a", "b"], [("a", "b")], {"a": "A"})
    assert '"a" [label="A"];' in text and '"a" -> "b";' in text
