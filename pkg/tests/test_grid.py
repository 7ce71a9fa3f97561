import pytest
from hypothesis import given

from conftest import paths
from nubrick.grid import GridPoint, build_region, compatible, parse_path, path_string


def test_parse_path():
    assert parse_path("eneen") == ("E", "N", "E", "E", "N")
    assert path_string(parse_path(" NE ")) == "NE"
    for bad in ["", "NEX", "N E", "12"]:
        with pytest.raises(ValueError):
            parse_path(bad)


def test_eneen_region_and_word():
    r = build_region("ENEEN")
    assert r.row_max == (3, 3, 1)
    assert len(r) == 10
    assert r.rank == 5 and r.size == 6
    assert r.word == (3, 2, 1, 4, 3, 2, 4, 3, 5, 4)
    assert r.point_at(1) == GridPoint(0, 2)


def test_degenerate_regions():
    for s, n in [("E", 2), ("N", 2), ("EEE", 4), ("NNN", 4)]:
        r = build_region(s)
        assert r.is_degenerate
        assert len(r) == n


@given(paths)
def test_points_fill_rows(s):
    r = build_region(s)
    assert len(r) == sum(m + 1 for m in r.row_max)
    assert r.row_max == tuple(sorted(r.row_max, reverse=True))
    assert r.row_max[0] == s.count("E") and r.height == s.count("N")
    assert all(r.contains(p) for p in r.points)
    assert [r.position[p] for p in r.points] == list(range(1, len(r) + 1))


@given(paths)
def test_compatibility_is_symmetric(s):
    r = build_region(s)
    for p in r.points:
        assert compatible(p, p, r)
        for q in r.points:
            assert compatible(p, q, r) == compatible(q, p, r)


def test_compatibility_rejects_outside_points():
    r = build_region("EN")
    with pytest.raises(ValueError):
        compatible(GridPoint(0, 0), GridPoint(5, 5), r)


def test_incompatible_pair():
    r = build_region("ENEEN")
    # (0,2) is SW of (1,1) and the corner (1,2) lies in the region
    assert not compatible(GridPoint(0, 2), GridPoint(1, 1), r)
    # corner (2,2) is outside
    assert compatible(GridPoint(0, 2), GridPoint(2, 1), r)
