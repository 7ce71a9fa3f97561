"""Dimension-reducing projection for paths without consecutive north steps,
and the canonical area coordinates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .grid import FerrersRegion, GridPoint, LatticePath, parse_path
from .trees import ROOT, NuTree, min_tree


@dataclass(frozen=True)
class ProjectionSpec:
    """Staircase data for ``nu = (N E^{k_n}) ... (N E^{k_1})``.

    ``ks[0]`` is ``k_1`` (the last block).  ``m_sets[j-1]`` is ``M_j`` with
    1-based coordinate indices into the reduced brick vector.
    """

    ks: tuple[int, ...]
    m_sets: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.ks)

    @property
    def N(self) -> int:
        return self.n + sum(k - 1 for k in self.ks)

    def group_of(self, coord: int) -> int:
        """The ``j`` with ``coord`` in ``M_j``."""
        for j, m in enumerate(self.m_sets, start=1):
            if coord in m:
                return j
        raise ValueError(f"coordinate {coord} not in any group")


def normalize(path: LatticePath | str) -> LatticePath:
    """Prepend ``N`` and append ``E``."""
    if isinstance(path, str):
        path = parse_path(path)
    return ("N",) + tuple(path) + ("E",)


def is_staircase(path: LatticePath) -> bool:
    s = "".join(path)
    return s.startswith("N") and s.endswith("E") and "NN" not in s


def parse_staircase(path: LatticePath | str) -> ProjectionSpec:
    if isinstance(path, str):
        path = parse_path(path)
    s = "".join(path)
    if "NN" in s:
        raise ValueError(f"{s}: consecutive north steps")
    if not (s.startswith("N") and s.endswith("E")):
        raise ValueError(f"{s}: must start with N and end with E (try --normalize)")
    blocks = [len(b) for b in s.split("N")[1:]]  # k_n, ..., k_1
    ks = tuple(reversed(blocks))
    n = len(ks)
    N = n + sum(k - 1 for k in ks)
    free = list(range(1, N + 1))
    m_sets = []
    for j, k in enumerate(ks, start=1):
        tail = free[len(free) - (k - 1):] if k > 1 else []
        free = [c for c in free if c not in tail]
        m_sets.append(frozenset(tail) | {j})
    return ProjectionSpec(ks, tuple(m_sets))


def reduce(b: Sequence[int], spec: ProjectionSpec, first: int | None = None,
           last: int | None = None) -> tuple[int, ...]:
    """Drop the constant first and last coordinates."""
    if len(b) != spec.N + 2:
        raise ValueError(f"expected length {spec.N + 2}, got {len(b)}")
    if (first is not None and b[0] != first) or (last is not None and b[-1] != last):
        raise ValueError("first/last brick coordinates are not the path constants")
    return tuple(b[1:-1])


def project_groups(bt: Sequence[int], spec: ProjectionSpec) -> tuple[int, ...]:
    """``pi_1``: sum the coordinates in each ``M_j``."""
    if len(bt) != spec.N:
        raise ValueError(f"expected length {spec.N}, got {len(bt)}")
    return tuple(sum(bt[c - 1] for c in m) for m in spec.m_sets)


def prefix_sums(v: Sequence[int]) -> tuple[int, ...]:
    """``pi_2``: partial sums of the first ``n - 1`` entries."""
    out, acc = [], 0
    for x in v[:-1]:
        acc += x
        out.append(acc)
    return tuple(out)


def project(bt: Sequence[int], spec: ProjectionSpec) -> tuple[int, ...]:
    return prefix_sums(project_groups(bt, spec))


def region_constants(region: FerrersRegion) -> tuple[int, int]:
    """The first and last brick coordinates shared by all trees."""
    from .pipedream import brick_vector_fast
    b = brick_vector_fast(min_tree(region), region)
    return b[0], b[-1]


def y_coords(tree: NuTree, region: FerrersRegion, spec: ProjectionSpec | None = None,
             brick: dict[NuTree, tuple[int, ...]] | None = None) -> tuple[int, ...]:
    from .pipedream import brick_vector_fast
    spec = parse_staircase(region.path) if spec is None else spec
    t0 = min_tree(region)
    get = (lambda t: brick[t]) if brick is not None else (lambda t: brick_vector_fast(t, region))
    p = project(reduce(get(tree), spec), spec)
    p0 = project(reduce(get(t0), spec), spec)
    return tuple(a - b for a, b in zip(p, p0))


def root_path(tree: NuTree, node: GridPoint) -> list[GridPoint]:
    """Tree nodes from ``node`` up to the root (following parents)."""
    out = [node]
    while out[-1] != ROOT:
        parent = tree.parent(out[-1])
        if parent is None:
            raise ValueError(f"{out[-1]} has no parent in {tree}")
        out.append(parent)
    return out


def path_area(tree: NuTree, node: GridPoint) -> int:
    """Boxes between the left boundary and the root-to-``node`` tree path."""
    area = 0
    nodes = root_path(tree, node)
    for a, b in zip(nodes, nodes[1:]):
        if a.x == b.x:  # vertical edge from row b.y down to row a.y
            area += a.x * (a.y - b.y)
    return area


def area_coords(tree: NuTree, region: FerrersRegion) -> tuple[int, ...]:
    """``y_i``: area left of the path from the root to the leftmost node on
    horizontal line ``i`` (lines ``1 .. n-1`` counted from the top)."""
    n = region.height
    out = []
    for level in range(1, n):
        leftmost = min((p for p in tree.nodes if p.y == level), key=lambda p: p.x)
        out.append(path_area(tree, leftmost))
    return tuple(out)


def tree_ids(trees: Sequence[NuTree]) -> dict[NuTree, str]:
    return {t: f"T{k}" for k, t in enumerate(sorted(trees))}


def polygon_order(vertex_trees: Sequence[NuTree], hasse) -> list[NuTree]:
    """Cyclic order of a 2-face from the Hasse edges among its vertices,
    starting at the smallest tree and walking towards the smaller neighbour."""
    vs = set(vertex_trees)
    nbrs = {v: sorted(u for u in set(hasse.successors(v)) | set(hasse.predecessors(v)) if u in vs)
            for v in vs}
    if any(len(nb) != 2 for nb in nbrs.values()):
        raise AssertionError("2-face boundary is not a cycle")
    start = min(vs)
    cycle, prev, cur = [start], None, start
    while True:
        nxt = next(u for u in nbrs[cur] if u != prev) if prev is not None else nbrs[cur][0]
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    if len(cycle) != len(vs):
        raise AssertionError("2-face boundary is not a single cycle")
    return cycle


def export_realization(region: FerrersRegion):
    """Vertices, Tamari edges and bounded faces of the realization.

    Staircase paths get projected ``y`` coordinates; other paths fall back to
    the unprojected brick vectors with ``projected = False``.
    """
    from .faces import NuBrickData
    from .grid import path_string
    from .serialize import FaceRecord, RealizationBundle, default_metadata
    from .trees import tamari_hasse

    data = NuBrickData(region)
    ids = tree_ids(data.trees)
    hasse = tamari_hasse(region, data.trees)
    projected = is_staircase(region.path)
    if projected:
        spec = parse_staircase(region.path)
        coords = {ids[t]: y_coords(t, region, spec, data.brick) for t in data.trees}
    else:
        coords = {ids[t]: data.brick[t] for t in data.trees}
    edges = sorted(
        ((ids[a], ids[b], "up") for a, b in hasse.edges),
        key=lambda e: (int(e[0][1:]), int(e[1][1:])),
    )
    faces = []
    for f in data.faces:
        poly = ()
        if f.dim == 2:
            poly = tuple(ids[t] for t in polygon_order(f.vertex_trees, hasse))
        faces.append(FaceRecord(
            base=ids[f.base],
            ascents=tuple(tuple(p) for p in f.interior_face.ascents_marked),
            vertices=tuple(sorted((ids[t] for t in f.vertex_trees), key=lambda s: int(s[1:]))),
            dim=f.dim,
            polygon=poly,
        ))
    return RealizationBundle(
        path=path_string(region.path),
        rank=region.rank,
        projected=projected,
        trees={ids[t]: tuple(tuple(p) for p in t.nodes) for t in data.trees},
        brick={ids[t]: data.brick[t] for t in data.trees},
        vertices=coords,
        edges=tuple(edges),
        faces=tuple(faces),
        cone=tuple(str(r) for r in data.cone),
        metadata=default_metadata(),
    )
