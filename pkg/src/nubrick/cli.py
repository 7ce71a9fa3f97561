"""Command-line front end.

Exit codes: 0 success, 1 validation error, 2 invariant failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .checks import DEFAULT_MAX_SIZE, run_checks
from .faces import NuBrickData
from .grid import build_region, parse_path, path_string
from .projection import export_realization, normalize, parse_staircase, tree_ids
from .serialize import dot_string, dumps, off_string, write_atomic
from .trees import tamari_hasse

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2


def fmt_vector(v) -> str:
    if any(v) and all(x <= 0 for x in v):
        return "-(" + ",".join(str(-x) for x in v) + ")"
    return "(" + ",".join(str(x) for x in v) + ")"


def fmt_nodes(nodes) -> str:
    return " ".join(f"({p[0]},{p[1]})" for p in nodes)


def _emit(args, table_lines: list[str], payload) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(table_lines) + "\n")


def cmd_trees(args, region) -> int:
    data = NuBrickData(region)
    ids = tree_ids(data.trees)
    rows, payload = [], []
    for t in data.trees:
        facet = sorted(data.facets[t])
        rows.append(f"{ids[t]}: {fmt_nodes(t.nodes)}  facet {{{','.join(map(str, facet))}}}")
        payload.append({"id": ids[t], "nodes": [list(p) for p in t.nodes], "facet": facet})
    _emit(args, rows, {"path": path_string(region.path), "trees": payload})
    return EXIT_OK


def cmd_brick(args, region) -> int:
    data = NuBrickData(region)
    ids = tree_ids(data.trees)
    cone = [str(r) for r in data.cone]
    rows = [f"{ids[t]}: {fmt_vector(data.brick[t])}" for t in data.trees]
    rows.append("cone: " + (", ".join(cone) if cone else "(none)"))
    payload = {
        "path": path_string(region.path),
        "brick": {ids[t]: list(data.brick[t]) for t in data.trees},
        "cone": cone,
    }
    _emit(args, rows, payload)
    return EXIT_OK


def cmd_lattice(args, region) -> int:
    data = NuBrickData(region)
    ids = tree_ids(data.trees)
    hasse = tamari_hasse(region, data.trees)
    nodes = [ids[t] for t in data.trees]
    order = {v: k for k, v in enumerate(nodes)}
    edges = sorted(((ids[a], ids[b]) for a, b in hasse.edges), key=lambda e: (order[e[0]], order[e[1]]))
    if args.dot:
        labels = {ids[t]: fmt_nodes(t.nodes) for t in data.trees}
        text = dot_string(path_string(region.path), nodes, edges, labels)
        if args.out:
            write_atomic(args.out, text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    rows = [f"{a} -> {b}" for a, b in edges] or ["(no covers)"]
    _emit(args, rows, {"path": path_string(region.path), "nodes": nodes,
                       "edges": [list(e) for e in edges]})
    return EXIT_OK


def cmd_faces(args, region) -> int:
    data = NuBrickData(region)
    ids = tree_ids(data.trees)
    rows, payload = [], []
    for f in sorted(data.faces, key=lambda f: (f.dim, f.base, f.interior_face.ascents_marked)):
        verts = [ids[t] for t in f.vertex_trees]
        asc = [list(p) for p in f.interior_face.ascents_marked]
        rows.append(f"dim {f.dim}  base {ids[f.base]}  A = {{{fmt_nodes(f.interior_face.ascents_marked)}}}"
                    f"  vertices {' '.join(verts)}")
        payload.append({"dim": f.dim, "base": ids[f.base], "ascents": asc, "vertices": verts})
    _emit(args, rows, {"path": path_string(region.path), "faces": payload})
    return EXIT_OK


def cmd_project(args, region) -> int:
    parse_staircase(region.path)  # validation
    bundle = export_realization(region)
    if args.json_out:
        write_atomic(args.json_out, dumps(bundle))
    if args.off:
        write_atomic(args.off, off_string(bundle))
    if args.format == "json":
        sys.stdout.write(dumps(bundle))
    else:
        rows = [f"{k}: y = {fmt_plain(v)}" for k, v in bundle.vertices.items()]
        sys.stdout.write("\n".join(rows) + "\n")
    return EXIT_OK


def fmt_plain(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def cmd_check(args, region) -> int:
    results = run_checks(region, args.max_size)
    rows = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}" + (f"  ({r.detail})" if r.detail else "")
            for r in results]
    _emit(args, rows, {"path": path_string(region.path),
                       "checks": [{"name": r.name, "passed": r.passed} for r in results]})
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


HELP = {
    "trees": "list nu-trees with their facets",
    "brick": "brick vectors and recession-cone rays",
    "lattice": "Hasse diagram of the nu-Tamari lattice",
    "faces": "bounded faces (T, A) with their vertex trees",
    "project": "projected realization (paths without NN)",
    "check": "run the invariant suite",
}

COMMANDS = {
    "trees": cmd_trees,
    "brick": cmd_brick,
    "lattice": cmd_lattice,
    "faces": cmd_faces,
    "project": cmd_project,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nubrick",
        description="nu-Tamari lattices, nu-brick polyhedra and nu-associahedra.",
        epilog="exit codes: 0 ok, 1 validation error, 2 invariant failure",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=HELP[name])
        p.add_argument("path", help="lattice path over {N, E}")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--normalize", action="store_true", help="prepend N and append E")
        if name == "check":
            p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)
        if name == "lattice":
            p.add_argument("--dot", action="store_true")
            p.add_argument("-o", "--out", help="write the graph file here")
        if name == "project":
            p.add_argument("--off", metavar="PATH")
            p.add_argument("--json", dest="json_out", metavar="PATH")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        path = parse_path(args.path)
        if args.normalize:
            path = normalize(path)
        region = build_region(path)
        return COMMANDS[args.command](args, region)
    except (ValueError, OSError) as exc:
        print(f"nubrick: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
