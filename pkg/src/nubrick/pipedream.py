"""Pipe dreams of nu-trees and brick vectors by counting points below pipes.

The board is the staircase ``{(x, y) : x + y <= n}`` in the same frame as the
Ferrers region.  Cells ``x + y < n`` hold a cross or an elbow; cells on the
antidiagonal ``x + y = n`` are half elbows.  Pipe ``i`` enters row ``i - 1``
from the left and leaves through the top edge.

A lattice point ``(x, y)`` is *below* pipe ``i`` when, after shifting the
point by ``-(eps, eps)``, the pipe passes above it: either the pipe enters
column ``x`` from the left at a row ``<= y``, or it exits the board through a
column ``< x`` (it lies entirely to the left of the point).
"""
from __future__ import annotations

from dataclasses import dataclass

from .coxeter import Permutation
from .grid import FerrersRegion, GridPoint
from .trees import NuTree

CROSS = "+"
ELBOW = "r"


@dataclass(frozen=True)
class PipeDream:
    """A traced pipe dream.

    ``crosses`` is the set of cross cells.  For each pipe (0-based index)
    ``cells[i]`` lists the visited cells with the side the pipe entered from
    (``"L"`` or ``"B"``), ``enter_row[i][x]`` is the row at which it enters
    column ``x`` from the left, and ``exit_col[i]`` the column it exits through.
    """

    size: int
    crosses: frozenset[GridPoint]
    cells: tuple[tuple[tuple[GridPoint, str], ...], ...]
    enter_row: tuple[dict[int, int], ...]
    exit_col: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.size - 1

    def tile(self, p: GridPoint) -> str:
        return CROSS if p in self.crosses else ELBOW

    def render(self) -> str:
        """ASCII board, one line per row (debugging aid only)."""
        n = self.rank
        return "\n".join(
            "".join(self.tile(GridPoint(x, y)) for x in range(n + 1 - y))
            for y in range(n + 1)
        )


def trace(size: int, crosses: frozenset[GridPoint]) -> PipeDream:
    n = size - 1
    cells, enter_rows, exits = [], [], []
    for start in range(size):
        x, y, side = 0, start, "L"
        path, enter = [], {}
        while True:
            if x + y > n:
                raise AssertionError("pipe left the board")
            p = GridPoint(x, y)
            path.append((p, side))
            if side == "L":
                enter[x] = y
            if p in crosses:
                go_up = side == "B"
            else:
                go_up = side == "L"
            if go_up:
                if y == 0:
                    break
                y, side = y - 1, "B"
            else:
                x, side = x + 1, "L"
        cells.append(tuple(path))
        enter_rows.append(enter)
        exits.append(x)
    return PipeDream(size, crosses, tuple(cells), tuple(enter_rows), tuple(exits))


def pipe_dream(tree: NuTree, region: FerrersRegion) -> PipeDream:
    """Crosses on ``A_nu`` minus the tree; elbows everywhere else."""
    crosses = region.point_set - tree.node_set
    pd = trace(region.size, frozenset(crosses))
    if not is_reduced(pd):
        raise AssertionError("pipe dream of a nu-tree must be reduced")
    return pd


def crossing_pairs(pd: PipeDream) -> list[tuple[int, int]]:
    """Pipe pairs (1-based, sorted) meeting at each cross, one entry per cross."""
    at: dict[GridPoint, list[int]] = {}
    for i, path in enumerate(pd.cells, start=1):
        for p, _ in path:
            if p in pd.crosses:
                at.setdefault(p, []).append(i)
    return [tuple(sorted(v)) for v in at.values()]


def is_reduced(pd: PipeDream) -> bool:
    pairs = crossing_pairs(pd)
    return len(pairs) == len(set(pairs))


def elbow_pipes(pd: PipeDream, p: GridPoint) -> tuple[int, int]:
    """``(i, j)``: the pipe turning through the NW arc and the one through the
    SE arc of the elbow at ``p`` (1-based)."""
    nw = se = None
    for i, path in enumerate(pd.cells, start=1):
        for q, side in path:
            if q == p:
                if side == "L":
                    nw = i
                else:
                    se = i
    if nw is None or se is None or p in pd.crosses:
        raise ValueError(f"{p} is not a full elbow")
    return nw, se


def turns_inside(pd: PipeDream, region: FerrersRegion, pipe: int) -> int:
    """Number of direction changes of ``pipe`` at cells of the region."""
    return sum(
        1 for p, _ in pd.cells[pipe - 1]
        if p not in pd.crosses and region.contains(p)
    )


def exit_permutation(pd: PipeDream) -> Permutation:
    """Pipe labels read along the top edge, left to right."""
    window = [0] * pd.size
    for i, c in enumerate(pd.exit_col, start=1):
        window[c] = i
    return Permutation(tuple(window))


def is_above(pd: PipeDream, pipe: int, p: GridPoint) -> bool:
    i = pipe - 1
    if pd.exit_col[i] < p.x:
        return True
    return pd.enter_row[i][p.x] <= p.y


def points_below_pipe(pd: PipeDream, region: FerrersRegion, pipe: int) -> int:
    if not 1 <= pipe <= pd.size:
        raise ValueError(f"pipe {pipe} out of range 1..{pd.size}")
    return sum(1 for p in region.points if is_above(pd, pipe, p))


def pipes_above(pd: PipeDream, p: GridPoint) -> tuple[int, ...]:
    """0/1 indicator vector of the pipes above ``p``."""
    return tuple(int(is_above(pd, i, p)) for i in range(1, pd.size + 1))


def brick_vector_fast(tree: NuTree, region: FerrersRegion) -> tuple[int, ...]:
    pd = pipe_dream(tree, region)
    return tuple(-points_below_pipe(pd, region, i) for i in range(1, pd.size + 1))
