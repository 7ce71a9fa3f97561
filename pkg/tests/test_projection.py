import pytest
from hypothesis import given

from conftest import NENEENE_BRICK, NENEENE_PI, NENEENE_Y, staircase_paths
from nubrick.checks import flip_law_holds
from nubrick.faces import NuBrickData, affine_rank
from nubrick.grid import build_region, path_string
from nubrick.pipedream import brick_vector_fast
from nubrick.projection import (
    area_coords,
    export_realization,
    is_staircase,
    normalize,
    parse_staircase,
    project,
    project_groups,
    reduce,
    region_constants,
    y_coords,
)
from nubrick.trees import enumerate_trees


def test_m_sets():
    assert parse_staircase("NENEENE").m_sets == (frozenset({1}), frozenset({2, 4}), frozenset({3}))
    assert parse_staircase("NENENEENE").m_sets == (
        frozenset({1}), frozenset({2, 5}), frozenset({3}), frozenset({4}),
    )


@pytest.mark.parametrize("bad", ["NENNE", "ENEEN", "NENEN"])
def test_parse_staircase_errors(bad):
    with pytest.raises(ValueError):
        parse_staircase(bad)


def test_normalize():
    assert path_string(normalize("ENEEN")) == "NENEENE"
    assert is_staircase(normalize("ENEEN"))


def test_neneene_table():
    r = build_region("NENEENE")
    spec = parse_staircase(r.path)
    trees = enumerate_trees(r)
    bricks = [brick_vector_fast(t, r) for t in trees]
    assert bricks == NENEENE_BRICK
    assert [project(reduce(b, spec), spec) for b in bricks] == NENEENE_PI
    assert [y_coords(t, r) for t in trees] == NENEENE_Y
    assert region_constants(r) == (-12, 0)


def test_nenenenee_worked_chain():
    r = build_region("NENENEENE")
    spec = parse_staircase(r.path)
    b = (-17, -13, -13, -9, -13, -2, 0)
    (t,) = [t for t in enumerate_trees(r) if brick_vector_fast(t, r) == b]
    bt = reduce(b, spec, first=-17, last=0)
    assert bt == (-13, -13, -9, -13, -2)
    assert project_groups(bt, spec) == (-13, -15, -9, -13)
    assert project(bt, spec) == (-13, -28, -37)
    assert y_coords(t, r) == (3, 2, 3)
    assert area_coords(t, r) == (3, 2, 3)


def test_reduce_checks_constants():
    spec = parse_staircase("NENEENE")
    with pytest.raises(ValueError):
        reduce((1, 2, 3), spec)
    with pytest.raises(ValueError):
        reduce((-11, -11, -8, -7, -2, 0), spec, first=-12)


@given(staircase_paths)
def test_y_equals_area(s):
    r = build_region(s)
    for t in enumerate_trees(r):
        assert y_coords(t, r) == area_coords(t, r)


@given(staircase_paths)
def test_flip_update_law(s):
    r = build_region(s)
    assert flip_law_holds(r, NuBrickData(r))


@given(staircase_paths)
def test_projected_dimension(s):
    r = build_region(s)
    bundle = export_realization(r)
    assert bundle.projected
    assert affine_rank(list(bundle.vertices.values())) == r.height - 1
    assert bundle.vertices["T0"] == (0,) * (r.height - 1)


def test_export_falls_back_for_other_paths():
    b = export_realization(build_region("ENEEN"))
    assert not b.projected
    assert b.vertices == b.brick
    assert b.cone == ("e3-e5", "e4-e5")


def test_polygons_are_cycles():
    b = export_realization(build_region("NENENEENE"))
    edges = {frozenset(e[:2]) for e in b.edges}
    for f in b.faces:
        if f.dim == 2:
            cyc = f.polygon
            assert sorted(cyc) == sorted(f.vertices)
            assert all(frozenset((a, c)) in edges for a, c in zip(cyc, cyc[1:] + cyc[:1]))
