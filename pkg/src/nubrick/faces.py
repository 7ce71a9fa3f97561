"""Bounded faces of the nu-brick polyhedron.

Faces are built from the ``(T, A)`` classification: the face of an interior
face ``I = T \\ A`` is the convex hull of the brick vectors of all trees whose
facet contains ``I``.  Geometric helpers (exact ranks, cone membership, the
marked-tree cone test) validate the construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx
import sympy
from networkx.utils import UnionFind

from .coxeter import Root
from .grid import FerrersRegion, GridPoint
from .subword import (
    SubwordInstance,
    brick_vector_def,
    nu_instance,
    root_function,
    tree_facet,
)
from .trees import InteriorFace, MarkedTree, NuTree, ascents, enumerate_trees, interior_faces


# -- exact linear algebra ----------------------------------------------------

def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    base = points[0]
    return exact_rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


def in_root_cone(v: Sequence[int], roots: Iterable[Root]) -> bool:
    """Whether ``v`` is a nonnegative combination of type A roots.

    ``e_i - e_j`` is an arc ``i -> j``; ``v`` is a nonnegative combination iff
    the uncapacitated transshipment with supplies ``v`` is feasible.
    """
    if sum(v) != 0:
        return False
    g = nx.DiGraph()
    g.add_nodes_from(["s", "t"])
    for r in roots:
        g.add_edge(r.i, r.j)  # no capacity attribute: unbounded
    demand = 0
    for i, x in enumerate(v, start=1):
        if x > 0:
            g.add_edge("s", i, capacity=x)
            demand += x
        elif x < 0:
            g.add_edge(i, "t", capacity=-x)
    if demand == 0:
        return True
    return nx.maximum_flow_value(g, "s", "t") == demand


# -- marked-tree cones ---------------------------------------------------------

@dataclass(frozen=True)
class ConstraintSystem:
    """``x_i > x_j`` for each ``(i, j)`` in ``strict``; ``x_i = x_j`` for each
    pair in ``equal``; variables are ``1..size``."""

    size: int
    strict: frozenset[tuple[int, int]]
    equal: frozenset[frozenset[int]]

    def describe(self) -> str:
        parts = [f"x{i} > x{j}" for i, j in sorted(self.strict)]
        parts += [" = ".join(f"x{i}" for i in sorted(e)) for e in sorted(self.equal, key=sorted)]
        return ", ".join(parts)


def node_roots(tree: NuTree, region: FerrersRegion, inst: SubwordInstance | None = None) -> dict[GridPoint, Root]:
    """``beta_t = r(T, t)`` for every node ``t``."""
    inst = nu_instance(region) if inst is None else inst
    facet = tree_facet(tree, region)
    return {t: root_function(inst, facet, region.position[t]) for t in tree.nodes}


def constraint_system(marked: MarkedTree, region: FerrersRegion,
                      inst: SubwordInstance | None = None) -> ConstraintSystem:
    strict, equal = set(), set()
    for t, beta in node_roots(marked.tree, region, inst).items():
        if t in marked.marks:
            equal.add(frozenset((beta.i, beta.j)))
        else:
            strict.add((beta.i, beta.j))
    return ConstraintSystem(region.size, frozenset(strict), frozenset(equal))


def _class_graph(cs: ConstraintSystem) -> tuple[UnionFind, nx.DiGraph]:
    uf = UnionFind(range(1, cs.size + 1))
    for e in cs.equal:
        uf.union(*e)
    g = nx.DiGraph()
    g.add_nodes_from({uf[i] for i in range(1, cs.size + 1)})
    for i, j in cs.strict:
        g.add_edge(uf[i], uf[j])
    return uf, g


def feasible(cs: ConstraintSystem) -> bool:
    """Contract equalities; the strict relations must then be acyclic."""
    _, g = _class_graph(cs)
    return nx.is_directed_acyclic_graph(g)


def witness(cs: ConstraintSystem) -> tuple[int, ...] | None:
    """An integer solution, or ``None`` if the system is infeasible."""
    uf, g = _class_graph(cs)
    if not nx.is_directed_acyclic_graph(g):
        return None
    order = list(nx.lexicographical_topological_sort(g))
    value = {c: len(order) - k for k, c in enumerate(order)}
    return tuple(value[uf[i]] for i in range(1, cs.size + 1))


def satisfies(x: Sequence[int], cs: ConstraintSystem) -> bool:
    return all(x[i - 1] > x[j - 1] for i, j in cs.strict) and all(
        len({x[i - 1] for i in e}) == 1 for e in cs.equal
    )


# -- bounded faces -------------------------------------------------------------

@dataclass(frozen=True)
class BoundedFace:
    interior_face: InteriorFace
    vertex_trees: tuple[NuTree, ...]
    vertices: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return self.interior_face.dim

    @property
    def base(self) -> NuTree:
        return self.interior_face.base


@dataclass
class NuBrickData:
    """Everything computed for one path: trees, brick vectors and faces."""

    region: FerrersRegion
    inst: SubwordInstance = field(init=False)

    def __post_init__(self):
        self.inst = nu_instance(self.region)

    @cached_property
    def trees(self) -> list[NuTree]:
        return enumerate_trees(self.region)

    @cached_property
    def facets(self) -> dict[NuTree, frozenset[int]]:
        return {t: tree_facet(t, self.region) for t in self.trees}

    @cached_property
    def brick(self) -> dict[NuTree, tuple[int, ...]]:
        from .pipedream import brick_vector_fast
        return {t: brick_vector_fast(t, self.region) for t in self.trees}

    @cached_property
    def faces(self) -> list[BoundedFace]:
        return bounded_faces(self.region, self)

    @cached_property
    def cone(self) -> list[Root]:
        """Bruhat-cone generators of the essential word (the recession cone)."""
        from .subword import bruhat_cone
        return bruhat_cone(essential_instance(self.inst))


def bounded_faces(region: FerrersRegion, data: NuBrickData | None = None) -> list[BoundedFace]:
    """One bounded face per interior face ``(T, A)``."""
    data = NuBrickData(region) if data is None else data
    out = []
    for f in interior_faces(region, data.trees):
        pos = f.positions(region)
        vts = tuple(t for t in data.trees if pos <= data.facets[t])
        out.append(BoundedFace(f, vts, tuple(data.brick[t] for t in vts)))
    return out


def face_leq(a: BoundedFace, b: BoundedFace, region: FerrersRegion) -> bool:
    """``a`` is a face of ``b`` iff ``b``'s interior face is contained in ``a``'s."""
    return b.interior_face.positions(region) <= a.interior_face.positions(region)


def face_hasse(faces: list[BoundedFace], region: FerrersRegion) -> nx.DiGraph:
    """Cover relations of the bounded-face poset (edge ``a -> b``: ``a`` covered by ``b``)."""
    g = nx.DiGraph()
    g.add_nodes_from(range(len(faces)))
    for a, fa in enumerate(faces):
        for b, fb in enumerate(faces):
            if fb.dim == fa.dim + 1 and face_leq(fa, fb, region):
                g.add_edge(a, b)
    return g


def default_eta(size: int) -> tuple[int, ...]:
    return tuple(range(size, 0, -1))


def minimal_vertex(face: BoundedFace, eta: Sequence[int] | None = None) -> NuTree:
    eta = default_eta(len(face.vertices[0])) if eta is None else eta
    if any(a <= b for a, b in zip(eta, eta[1:])):
        raise ValueError("eta must be strictly decreasing")
    values = [sum(e * x for e, x in zip(eta, v)) for v in face.vertices]
    best = min(values)
    if values.count(best) != 1:
        raise AssertionError("tie while minimizing eta over a face")
    return face.vertex_trees[values.index(best)]


def local_cone_check(tree: NuTree, data: NuBrickData) -> bool:
    """Every other brick vector lies in ``b(T) + cone R(T)``."""
    roots = node_roots(tree, data.region, data.inst).values()
    b0 = data.brick[tree]
    return all(
        in_root_cone([x - y for x, y in zip(data.brick[t], b0)], roots)
        for t in data.trees if t != tree
    )


def independence_check(tree: NuTree, marks: Iterable[GridPoint], region: FerrersRegion,
                       inst: SubwordInstance | None = None) -> bool:
    marks = list(marks)
    roots = node_roots(tree, region, inst)
    return exact_rank([roots[a].vector(region.size) for a in marks]) == len(marks)


def support(w) -> frozenset[int]:
    """Simple generators ``s_p`` occurring in some (every) reduced word of ``w``."""
    return frozenset(p for p in range(1, w.size) if max(w.window[:p]) > p)


def essential_instance(inst: SubwordInstance) -> SubwordInstance:
    """Drop the letters outside the support of ``w``.

    Such letters lie in every facet and only enlarge the Demazure product, so
    the Bruhat cone of the restricted word is the recession cone.
    """
    supp = support(inst.w)
    return inst.delete(k for k, q in enumerate(inst.Q, start=1) if q not in supp)


def all_marked_feasible(data: NuBrickData) -> bool:
    for t in data.trees:
        asc = ascents(t)
        for k in range(len(asc) + 1):
            for a in combinations(asc, k):
                if not feasible(constraint_system(MarkedTree(t, frozenset(a)), data.region, data.inst)):
                    return False
    return True
