"""nu-trees, rotations, the nu-Tamari lattice and interior faces ``(T, A)``."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import networkx as nx

from .grid import FerrersRegion, GridPoint, compatible

ROOT = GridPoint(0, 0)


def reading_key(p: GridPoint) -> tuple[int, int]:
    """Reading order of the word: columns left to right, each bottom to top."""
    return (p.x, -p.y)


@dataclass(frozen=True)
class NuTree:
    """A maximal set of pairwise nu-compatible points, stored in reading order.

    Trees compare lexicographically by their node sequences, which is the
    lexicographic order of their facets as sorted position lists.
    """

    nodes: tuple[GridPoint, ...]

    @classmethod
    def of(cls, nodes: Iterable[GridPoint]) -> NuTree:
        return cls(tuple(sorted((GridPoint(*p) for p in nodes), key=reading_key)))

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(reading_key(p) for p in self.nodes)

    def __lt__(self, other: NuTree) -> bool:
        return self.sort_key() < other.sort_key()

    def __contains__(self, p) -> bool:
        return p in self.node_set

    def __iter__(self) -> Iterator[GridPoint]:
        return iter(self.nodes)

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def node_set(self) -> frozenset[GridPoint]:
        # not cached: frozen dataclass; sets here are tiny
        return frozenset(self.nodes)

    def north_of(self, q: GridPoint) -> GridPoint | None:
        """Nearest node strictly north of ``q`` in the same column."""
        above = [p for p in self.nodes if p.x == q.x and p.y < q.y]
        return max(above, key=lambda p: p.y) if above else None

    def east_of(self, q: GridPoint) -> GridPoint | None:
        right = [p for p in self.nodes if p.y == q.y and p.x > q.x]
        return min(right, key=lambda p: p.x) if right else None

    def west_of(self, q: GridPoint) -> GridPoint | None:
        left = [p for p in self.nodes if p.y == q.y and p.x < q.x]
        return max(left, key=lambda p: p.x) if left else None

    def south_of(self, q: GridPoint) -> GridPoint | None:
        below = [p for p in self.nodes if p.x == q.x and p.y > q.y]
        return min(below, key=lambda p: p.y) if below else None

    def parent(self, q: GridPoint) -> GridPoint | None:
        """The next node north or west of ``q`` (``None`` for the root)."""
        return self.north_of(q) or self.west_of(q)

    def __str__(self) -> str:
        return "{" + ", ".join(f"({p.x},{p.y})" for p in self.nodes) + "}"


@dataclass(frozen=True)
class MarkedTree:
    tree: NuTree
    marks: frozenset[GridPoint]

    def __post_init__(self):
        object.__setattr__(self, "marks", frozenset(GridPoint(*p) for p in self.marks))
        if not self.marks <= self.tree.node_set:
            raise ValueError("marks must be nodes of the tree")


@dataclass(frozen=True)
class InteriorFace:
    """The pair ``(T, A)``; ``nodes`` is ``T \\ A``."""

    base: NuTree
    ascents_marked: tuple[GridPoint, ...]

    @property
    def nodes(self) -> frozenset[GridPoint]:
        return self.base.node_set - set(self.ascents_marked)

    @property
    def dim(self) -> int:
        return len(self.ascents_marked)

    def positions(self, region: FerrersRegion) -> frozenset[int]:
        return frozenset(region.position[p] for p in self.nodes)


def is_compatible_set(points: Iterable[GridPoint], region: FerrersRegion) -> bool:
    pts = list(points)
    return all(compatible(p, q, region) for p, q in combinations(pts, 2))


def is_nu_tree(nodes: Iterable[GridPoint], region: FerrersRegion) -> bool:
    nodes = set(nodes)
    if not nodes <= region.point_set or not is_compatible_set(nodes, region):
        return False
    return all(
        not all(compatible(p, q, region) for q in nodes)
        for p in region.points
        if p not in nodes
    )


def min_tree(region: FerrersRegion) -> NuTree:
    """Bottom of the nu-Tamari lattice.

    Greedy in reading order (columns left to right, each bottom to top): this
    keeps nodes as far south-west as compatibility allows.
    """
    nodes: list[GridPoint] = []
    for p in region.points:
        if all(compatible(p, q, region) for q in nodes):
            nodes.append(p)
    return NuTree.of(nodes)


def max_tree(region: FerrersRegion) -> NuTree:
    """Top of the lattice: greedy in reverse reading order."""
    nodes: list[GridPoint] = []
    for p in sorted(region.points, key=lambda p: (-p.x, p.y)):
        if all(compatible(p, q, region) for q in nodes):
            nodes.append(p)
    return NuTree.of(nodes)


def ascents(tree: NuTree) -> tuple[GridPoint, ...]:
    """Non-root nodes with a node due north and a node due east."""
    return tuple(
        q for q in tree.nodes
        if q != ROOT and tree.north_of(q) is not None and tree.east_of(q) is not None
    )


def descents(tree: NuTree) -> tuple[GridPoint, ...]:
    """Nodes admitting a left rotation (a node due west and one due south)."""
    return tuple(
        q for q in tree.nodes
        if tree.west_of(q) is not None and tree.south_of(q) is not None
    )


def rotation_target(tree: NuTree, q: GridPoint) -> GridPoint:
    p, r = tree.north_of(q), tree.east_of(q)
    if q == ROOT or p is None or r is None:
        raise ValueError(f"{q} is not an ascent of {tree}")
    return GridPoint(r.x, p.y)


def rotate(tree: NuTree, q: GridPoint) -> NuTree:
    """Right rotation (increasing flip) at the ascent ``q``."""
    q2 = rotation_target(tree, q)
    return NuTree.of((tree.node_set - {q}) | {q2})


def rotate_left(tree: NuTree, q: GridPoint) -> NuTree:
    """Inverse move: replace a descent ``q`` by ``(west.x, south.y)``."""
    p, r = tree.west_of(q), tree.south_of(q)
    if p is None or r is None:
        raise ValueError(f"{q} is not a descent of {tree}")
    return NuTree.of((tree.node_set - {q}) | {GridPoint(p.x, r.y)})


def enumerate_trees(region: FerrersRegion) -> list[NuTree]:
    """All nu-trees by breadth-first search over right rotations, sorted."""
    start = min_tree(region)
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for q in ascents(t):
            t2 = rotate(t, q)
            if t2 not in seen:
                seen.add(t2)
                queue.append(t2)
    return sorted(seen)


def tamari_hasse(region: FerrersRegion, trees: list[NuTree] | None = None) -> nx.DiGraph:
    """Hasse diagram: an edge ``T -> rotate(T, q)`` for every ascent ``q``.

    Edge attribute ``node`` is the rotated node ``q``; ``target`` is ``q'``.
    """
    trees = enumerate_trees(region) if trees is None else trees
    g = nx.DiGraph()
    g.add_nodes_from(trees)
    for t in trees:
        for q in ascents(t):
            g.add_edge(t, rotate(t, q), node=q, target=rotation_target(t, q))
    return g


def interior_faces(region: FerrersRegion, trees: list[NuTree] | None = None) -> list[InteriorFace]:
    """All pairs ``(T, A)`` with ``A`` a subset of the ascents of ``T``."""
    trees = enumerate_trees(region) if trees is None else trees
    out = []
    for t in trees:
        asc = ascents(t)
        for k in range(len(asc) + 1):
            for a in combinations(asc, k):
                out.append(InteriorFace(t, a))
    return out
