"""Cross-module invariant suite.

Each check returns ``True``/``False``; :func:`run_checks` collects them into a
report.  The brute-force tree oracle lives here too.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .coxeter import evaluate, is_reduced
from .faces import (
    NuBrickData,
    affine_rank,
    all_marked_feasible,
    in_root_cone,
    independence_check,
    local_cone_check,
    minimal_vertex,
    node_roots,
)
from .grid import FerrersRegion, GridPoint, compatible
from .pipedream import elbow_pipes, exit_permutation, pipe_dream
from .projection import area_coords, is_staircase, parse_staircase, root_path, y_coords
from .subword import brick_vector_def, flip, tree_facet, w_nu
from .trees import NuTree, ascents, rotate, tamari_hasse

DEFAULT_MAX_SIZE = 12


class SizeLimitError(ValueError):
    pass


def brute_force_trees(region: FerrersRegion) -> list[NuTree]:
    """Maximal pairwise-compatible point sets, by bitmask search."""
    pts = region.points
    m = len(pts)
    ok = [0] * m
    for a, b in combinations(range(m), 2):
        if compatible(pts[a], pts[b], region):
            ok[a] |= 1 << b
            ok[b] |= 1 << a
    full = (1 << m) - 1
    cliques = []
    for mask in range(1 << m):
        bits = [k for k in range(m) if mask >> k & 1]
        if all((ok[k] | 1 << k) & mask == mask for k in bits):
            cliques.append(mask)
    clique_set = set(cliques)
    maximal = [
        c for c in cliques
        if not any((c | 1 << k) in clique_set for k in range(m) if not c >> k & 1)
    ]
    assert all(c <= full for c in maximal)
    return sorted(NuTree.of(pts[k] for k in range(m) if c >> k & 1) for c in maximal)


def subtree(tree: NuTree, r: GridPoint) -> list[GridPoint]:
    return [p for p in tree.nodes if r in root_path(tree, p)]


def flip_law_holds(region: FerrersRegion, data: NuBrickData) -> bool:
    """On every cover ``T -> T'`` at ``q``: ``b' - b = c (e_i - e_j)`` with
    ``c > 0`` and ``y' - y`` equal to ``c`` on levels ``q.y .. k``, where
    ``(i, j)`` are the elbow pipes at ``q`` and ``k`` is the lowest row of
    the subtree hanging from the east neighbour of ``q``."""
    spec = parse_staircase(region.path)
    hasse = tamari_hasse(region, data.trees)
    for t, t2, attrs in hasse.edges(data=True):
        q = attrs["node"]
        i, j = elbow_pipes(pipe_dream(t, region), q)
        diff = [a - b for a, b in zip(data.brick[t2], data.brick[t])]
        c = diff[i - 1]
        expect = [0] * region.size
        expect[i - 1], expect[j - 1] = c, -c
        if c <= 0 or diff != expect:
            return False
        k = max(p.y for p in subtree(t, t.east_of(q)))
        y, y2 = y_coords(t, region, spec, data.brick), y_coords(t2, region, spec, data.brick)
        dy = [b - a for a, b in zip(y, y2)]
        want = [c if q.y <= lvl <= k else 0 for lvl in range(1, len(y) + 1)]
        if dy != want:
            return False
    return True


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _suite(region: FerrersRegion, data: NuBrickData) -> list[tuple[str, Callable[[], bool]]]:
    inst = data.inst
    trees = data.trees

    def brick_fast_def():
        return all(data.brick[t] == brick_vector_def(inst, data.facets[t]) for t in trees)

    def exit_perm():
        target = w_nu(region)
        return all(exit_permutation(pipe_dream(t, region)) == target for t in trees)

    def complements():
        for t in trees:
            word = inst.complement(data.facets[t])
            if not (is_reduced(word, inst.size) and evaluate(word, inst.size) == inst.w):
                return False
        return True

    def flips_are_rotations():
        return all(
            flip(inst, data.facets[t], region.position[q]) == tree_facet(rotate(t, q), region)
            for t in trees for q in ascents(t)
        )

    def dimension_law():
        return all(affine_rank(f.vertices) == f.dim for f in data.faces)

    def independence():
        return all(
            independence_check(f.base, f.interior_face.ascents_marked, region, inst)
            for f in data.faces
        )

    def vertex_count_law():
        # a k-face has at least k + 1 vertices; cubes of independent flips have 2^k
        return all(len(f.vertex_trees) >= f.dim + 1 for f in data.faces)

    def anti_isomorphism():
        faces = data.faces
        keys = [f.interior_face.positions(region) for f in faces]
        vsets = [frozenset(f.vertex_trees) for f in faces]
        if len(set(keys)) != len(faces) or len(set(vsets)) != len(faces):
            return False
        return all(
            (vsets[a] <= vsets[b]) == (keys[b] <= keys[a])
            for a in range(len(faces)) for b in range(len(faces))
        )

    def min_vertex():
        return all(minimal_vertex(f) == f.base for f in data.faces)

    def skeleton():
        hasse = tamari_hasse(region, trees)
        edges = {frozenset(e) for e in hasse.edges}
        face_edges = {frozenset(f.vertex_trees) for f in data.faces if f.dim == 1}
        verts = {f.vertex_trees[0] for f in data.faces if f.dim == 0}
        return edges == face_edges and verts == set(trees)

    def local_cones():
        return all(local_cone_check(t, data) for t in trees)

    def cone_in_vertex_cones():
        gens = data.cone
        return all(
            in_root_cone(g.vector(region.size), node_roots(t, region, inst).values())
            for t in trees for g in gens
        )

    checks = [
        ("tree enumeration = brute force", lambda: brute_force_trees(region) == trees),
        ("tree size = |A| - length(w_nu)",
         lambda: all(len(t) == len(region) - inst.w.length() for t in trees)),
        ("brick fast = definition", brick_fast_def),
        ("exit permutation = w_nu", exit_perm),
        ("complements reduced for w_nu", complements),
        ("facet flips = rotations", flips_are_rotations),
        ("every (T, A) feasible", lambda: all_marked_feasible(data)),
        ("ascent roots independent", independence),
        ("dimension law", dimension_law),
        ("vertex count law", vertex_count_law),
        ("anti-isomorphism", anti_isomorphism),
        ("minimal vertex = base tree", min_vertex),
        ("1-skeleton = Hasse diagram", skeleton),
        ("local cones", local_cones),
        ("Bruhat cone in vertex cones", cone_in_vertex_cones),
    ]
    if is_staircase(region.path):
        spec = parse_staircase(region.path)

        def y_area():
            return all(y_coords(t, region, spec, data.brick) == area_coords(t, region) for t in trees)

        def projected_dim():
            pts = [y_coords(t, region, spec, data.brick) for t in trees]
            return affine_rank(pts) == spec.n - 1

        def projected_faces():
            return all(
                affine_rank([y_coords(t, region, spec, data.brick) for t in f.vertex_trees]) == f.dim
                for f in data.faces
            )

        checks += [
            ("y = area", y_area),
            ("flip update law", lambda: flip_law_holds(region, data)),
            ("projected dimension = n - 1", projected_dim),
            ("projected face ranks", projected_faces),
        ]
    return checks


def run_checks(region: FerrersRegion, max_size: int = DEFAULT_MAX_SIZE) -> list[CheckResult]:
    if len(region) > max_size:
        raise SizeLimitError(f"|A| = {len(region)} exceeds --max-size {max_size}")
    data = NuBrickData(region)
    out = []
    for name, fn in _suite(region, data):
        try:
            out.append(CheckResult(name, bool(fn())))
        except (AssertionError, ValueError) as exc:
            out.append(CheckResult(name, False, str(exc)))
    return out
