"""Realization bundles and their file formats (JSON, OFF, DOT).

All writers are deterministic for a fixed input and tool version, and files
are written atomically (temporary file + rename).
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Sequence

from . import __version__

SCHEMA = "nubrick.realization/1"

CONVENTIONS = (
    "words evaluate left to right on positions",
    "W acts on R^{n+1} by permuting coordinates",
    "s_beta w multiplies on the left",
    "points: origin top-left, x east, y south; word read by columns, bottom to top",
    "pipes numbered by left entry, top to bottom",
    "tree ids: lexicographic order of facet positions",
)


def conventions_fingerprint() -> str:
    return hashlib.sha256("\n".join(CONVENTIONS).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class FaceRecord:
    base: str
    ascents: tuple[tuple[int, int], ...]
    vertices: tuple[str, ...]
    dim: int
    # cyclic vertex order, only for 2-dimensional faces
    polygon: tuple[str, ...] = ()


@dataclass(frozen=True)
class RealizationBundle:
    path: str
    rank: int
    projected: bool
    trees: dict[str, tuple[tuple[int, int], ...]]
    brick: dict[str, tuple[int, ...]]
    vertices: dict[str, tuple[int, ...]]
    edges: tuple[tuple[str, str, str], ...]
    faces: tuple[FaceRecord, ...]
    cone: tuple[str, ...]
    metadata: dict[str, str] = field(default_factory=dict)
    schema: str = SCHEMA

    @property
    def dim(self) -> int:
        """Ambient dimension of the vertex coordinates."""
        return len(next(iter(self.vertices.values()))) if self.vertices else 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["faces"] = [asdict(f) for f in self.faces]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> RealizationBundle:
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {d.get('schema')!r}")

        def pts(v):
            return tuple(tuple(p) for p in v)

        return cls(
            path=d["path"],
            rank=d["rank"],
            projected=d["projected"],
            trees={k: pts(v) for k, v in d["trees"].items()},
            brick={k: tuple(v) for k, v in d["brick"].items()},
            vertices={k: tuple(v) for k, v in d["vertices"].items()},
            edges=tuple(tuple(e) for e in d["edges"]),
            faces=tuple(
                FaceRecord(f["base"], pts(f["ascents"]), tuple(f["vertices"]), f["dim"],
                           tuple(f.get("polygon", ())))
                for f in d["faces"]
            ),
            cone=tuple(d["cone"]),
            metadata=dict(d.get("metadata", {})),
            schema=d["schema"],
        )


def dumps(bundle: RealizationBundle) -> str:
    return json.dumps(bundle.to_dict(), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> RealizationBundle:
    return RealizationBundle.from_dict(json.loads(text))


def default_metadata() -> dict[str, str]:
    return {"tool_version": __version__, "conventions": conventions_fingerprint()}


def write_atomic(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt(x) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def off_string(bundle: RealizationBundle) -> str:
    """OFF mesh of the 2-faces, fan-triangulated; coordinates padded to 3D.

    Raises ``ValueError`` for realizations of dimension above 3.
    """
    if bundle.dim > 3:
        raise ValueError(f"OFF export needs dimension <= 3, bundle has {bundle.dim}")
    ids = list(bundle.vertices)
    index = {k: i for i, k in enumerate(ids)}
    tris: list[tuple[int, int, int]] = []
    for f in bundle.faces:
        if f.dim == 2 and f.polygon:
            cyc = [index[v] for v in f.polygon]
            for a, b in zip(cyc[1:], cyc[2:]):
                tris.append((cyc[0], a, b))
    lines = ["OFF", f"{len(ids)} {len(tris)} {len(bundle.edges)}"]
    for k in ids:
        coords = list(bundle.vertices[k]) + [0] * (3 - bundle.dim)
        lines.append(" ".join(_fmt(c) for c in coords))
    for t in tris:
        lines.append("3 " + " ".join(map(str, t)))
    return "\n".join(lines) + "\n"


def parse_off(text: str) -> tuple[list[tuple[float, ...]], list[tuple[int, ...]]]:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if rows[0] != ["OFF"]:
        raise ValueError("missing OFF header")
    nv, nf, _ = map(int, rows[1])
    verts = [tuple(float(c) for c in r) for r in rows[2:2 + nv]]
    faces = [tuple(int(c) for c in r[1:]) for r in rows[2 + nv:2 + nv + nf]]
    return verts, faces


def dot_string(name: str, nodes: Sequence[str], edges: Sequence[tuple[str, str]],
               labels: dict[str, str] | None = None) -> str:
    labels = labels or {}
    out = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for v in nodes:
        lab = labels.get(v)
        out.append(f'  "{v}"' + (f' [label="{lab}"]' if lab else "") + ";")
    for a, b in edges:
        out.append(f'  "{a}" -> "{b}";')
    out.append("}")
    return "\n".join(out) + "\n"
