"""Lattice paths, Ferrers regions and the reading word of the nu-subword complex.

Points live in a frame anchored at the top-left corner of the Ferrers region:
``x`` grows to the east, ``y`` grows to the south, so the lattice distance to
the corner is ``x + y``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .coxeter import GenWord


class GridPoint(NamedTuple):
    x: int
    y: int

    @property
    def d(self) -> int:
        return self.x + self.y


LatticePath = tuple[str, ...]


def parse_path(text: str) -> LatticePath:
    """Parse a string over ``{N, E}`` (case-insensitive)."""
    text = text.strip().upper()
    if not text:
        raise ValueError("empty lattice path")
    bad = sorted(set(text) - {"N", "E"})
    if bad:
        raise ValueError(f"invalid step(s) {''.join(bad)!r} in path {text!r}; use N and E")
    return tuple(text)


def path_string(path: LatticePath) -> str:
    return "".join(path)


@dataclass(frozen=True)
class FerrersRegion:
    """Lattice points weakly above a path inside its bounding rectangle.

    ``row_max[y]`` is the largest admissible ``x`` on row ``y`` (row 0 on top).
    """

    path: LatticePath
    row_max: tuple[int, ...]

    @cached_property
    def points(self) -> tuple[GridPoint, ...]:
        """All points, in reading order (columns left to right, bottom to top)."""
        out = []
        for x in range(self.row_max[0] + 1):
            for y in range(len(self.row_max) - 1, -1, -1):
                if x <= self.row_max[y]:
                    out.append(GridPoint(x, y))
        return tuple(out)

    @cached_property
    def point_set(self) -> frozenset[GridPoint]:
        return frozenset(self.points)

    @cached_property
    def rank(self) -> int:
        """``n``: the ambient group is ``S_{n+1}``."""
        return max(p.d for p in self.points) + 1

    @property
    def size(self) -> int:
        return self.rank + 1

    @property
    def height(self) -> int:
        return len(self.row_max) - 1

    @property
    def width(self) -> int:
        return self.row_max[0]

    @property
    def is_degenerate(self) -> bool:
        return "N" not in self.path or "E" not in self.path

    def contains(self, p: GridPoint) -> bool:
        return 0 <= p.y < len(self.row_max) and 0 <= p.x <= self.row_max[p.y]

    @cached_property
    def word(self) -> GenWord:
        return tuple(p.d + 1 for p in self.points)

    @cached_property
    def position(self) -> dict[GridPoint, int]:
        """Point -> 1-based position in the reading word."""
        return {p: k for k, p in enumerate(self.points, start=1)}

    def point_at(self, k: int) -> GridPoint:
        return self.points[k - 1]

    def __len__(self) -> int:
        return len(self.points)


def build_region(path: LatticePath | str) -> FerrersRegion:
    if isinstance(path, str):
        path = parse_path(path)
    heights = path.count("N")
    # rightmost path point at each height, counted from the bottom
    right = []
    east = 0
    for step in path:
        if step == "E":
            east += 1
        else:
            right.append(east)
    right.append(east)
    return FerrersRegion(path, tuple(reversed(right)))


def compatible(p: GridPoint, q: GridPoint, region: FerrersRegion) -> bool:
    """False iff one point is strictly SW of the other and their bounding
    rectangle lies inside the region."""
    if not (region.contains(p) and region.contains(q)):
        raise ValueError(f"{p} or {q} is not in the region")
    if p.x > q.x:
        p, q = q, p
    if p.x < q.x and p.y > q.y:
        # p is SW of q; the SE corner of the rectangle is (q.x, p.y)
        return q.x > region.row_max[p.y]
    return True


def word_Q(region: FerrersRegion) -> tuple[GenWord, tuple[GridPoint, ...]]:
    """The reading word together with its position -> point map."""
    return region.word, region.points
