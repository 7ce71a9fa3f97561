import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import paths
from nubrick.coxeter import Root, positive_roots
from nubrick.faces import (
    ConstraintSystem,
    NuBrickData,
    affine_rank,
    all_marked_feasible,
    constraint_system,
    exact_rank,
    face_hasse,
    feasible,
    in_root_cone,
    independence_check,
    local_cone_check,
    minimal_vertex,
    satisfies,
    witness,
)
from nubrick.grid import build_region
from nubrick.subword import facet_tree
from nubrick.trees import MarkedTree

ENEEN = build_region("ENEEN")


def gale_oracle(v, roots):
    """Uncapacitated transshipment: feasible iff total supply is zero and no
    set closed under the arcs ``i -> j`` holds positive net supply."""
    if sum(v) != 0:
        return False
    size = len(v)
    for mask in range(1 << size):
        s = {i + 1 for i in range(size) if mask >> i & 1}
        if any(r.i in s and r.j not in s for r in roots):
            continue
        if sum(v[i - 1] for i in s) > 0:
            return False
    return True


def brute_feasible(cs):
    values = range(1, cs.size + 1)
    return any(satisfies(x, cs) for x in itertools.product(values, repeat=cs.size))


root_sets = st.sets(st.sampled_from(positive_roots(5) + [-r for r in positive_roots(5)]), max_size=6)


@given(st.lists(st.integers(-3, 3), min_size=5, max_size=5), root_sets)
def test_cone_membership_matches_gale(v, roots):
    assert in_root_cone(v, roots) == gale_oracle(v, roots)


def test_cone_membership_examples():
    assert in_root_cone((1, 0, -1), [Root(1, 2), Root(2, 3)])
    assert not in_root_cone((-1, 0, 1), [Root(1, 2), Root(2, 3)])
    assert in_root_cone((0, 0, 0), [])


pairs = st.tuples(st.integers(1, 4), st.integers(1, 4)).filter(lambda p: p[0] != p[1])


@given(st.sets(pairs, max_size=5), st.sets(pairs, max_size=2))
def test_feasibility_matches_brute_force(strict, equal):
    cs = ConstraintSystem(4, frozenset(strict), frozenset(frozenset(p) for p in equal))
    assert feasible(cs) == brute_feasible(cs)
    x = witness(cs)
    assert (x is not None) == feasible(cs)
    if x is not None:
        assert satisfies(x, cs)


def marked(facet, mark_positions):
    t = facet_tree(facet, ENEEN)
    return MarkedTree(t, frozenset(ENEEN.point_at(k) for k in mark_positions))


def test_feasibility_triptych():
    t_m2 = constraint_system(marked({1, 2, 3, 4, 7, 9}, {1, 2}), ENEEN)
    t_m3 = constraint_system(marked({1, 2, 3, 4, 7, 9}, {4, 7}), ENEEN)
    t2_m4 = constraint_system(marked({3, 4, 6, 7, 8, 9}, {4, 6}), ENEEN)
    assert feasible(t_m2)
    assert not feasible(t_m3)
    assert not feasible(t2_m4)


def test_marks_must_be_nodes():
    t = facet_tree({1, 2, 3, 4, 7, 9}, ENEEN)
    with pytest.raises(ValueError):
        MarkedTree(t, frozenset({ENEEN.point_at(5)}))


def test_eneen_face_structure():
    data = NuBrickData(ENEEN)
    faces = data.faces
    assert len(faces) == 17
    polys = sorted(len(f.vertex_trees) for f in faces if f.dim == 2)
    assert polys == [4, 5]
    for f in faces:
        assert affine_rank(f.vertices) == f.dim
        assert minimal_vertex(f) == f.base
    g = face_hasse(faces, ENEEN)
    assert sum(1 for a, b in g.edges if faces[b].dim == 1) == 16


@given(paths)
def test_every_marked_tree_feasible(s):
    assert all_marked_feasible(NuBrickData(build_region(s)))


@given(paths)
def test_local_cones_and_independence(s):
    r = build_region(s)
    data = NuBrickData(r)
    for t in data.trees:
        assert local_cone_check(t, data)
    for f in data.faces:
        assert independence_check(f.base, f.interior_face.ascents_marked, r, data.inst)


def test_exact_rank():
    assert exact_rank([]) == 0
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_rank([(0, 0), (1, 0), (0, 1)]) == 2


def test_minimal_vertex_needs_decreasing_eta():
    f = NuBrickData(ENEEN).faces[0]
    with pytest.raises(ValueError):
        minimal_vertex(f, (1, 2, 3, 4, 5, 6))
