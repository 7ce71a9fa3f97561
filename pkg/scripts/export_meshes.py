"""Write JSON bundles and OFF meshes for a few staircase paths."""
import argparse
from pathlib import Path

from nubrick.grid import build_region
from nubrick.projection import export_realization
from nubrick.serialize import dumps, off_string, write_atomic

DEFAULT_PATHS = ("NENEENE", "NENENE", "NENENEENE", "NENENENE", "NEENEENE")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("paths", nargs="*", default=DEFAULT_PATHS)
    ap.add_argument("--out", type=Path, default=Path("out"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for p in args.paths:
        bundle = export_realization(build_region(p))
        write_atomic(args.out / f"{p}.json", dumps(bundle))
        if bundle.dim <= 3:
            write_atomic(args.out / f"{p}.off", off_string(bundle))
        print(f"{p}: {len(bundle.vertices)} vertices, {len(bundle.edges)} edges, dim {bundle.dim}")


if __name__ == "__main__":
    main()
