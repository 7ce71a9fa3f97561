"""Run the invariant suite over every path up to a given length and report
tree counts, face counts and timings as CSV."""
import argparse
import csv
import itertools
import sys
import time
from dataclasses import dataclass

from nubrick.checks import run_checks
from nubrick.faces import NuBrickData
from nubrick.grid import build_region


@dataclass
class SurveyConfig:
    max_len: int = 8
    max_points: int = 12


def survey(cfg: SurveyConfig):
    for n in range(1, cfg.max_len + 1):
        for steps in itertools.product("NE", repeat=n):
            path = "".join(steps)
            region = build_region(path)
            if len(region) > cfg.max_points:
                continue
            start = time.perf_counter()
            results = run_checks(region, cfg.max_points)
            data = NuBrickData(region)
            yield {
                "path": path,
                "points": len(region),
                "trees": len(data.trees),
                "faces": len(data.faces),
                "max_dim": max(f.dim for f in data.faces),
                "failed": ";".join(r.name for r in results if not r.passed),
                "seconds": f"{time.perf_counter() - start:.4f}",
            }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=SurveyConfig.max_len)
    ap.add_argument("--max-points", type=int, default=SurveyConfig.max_points)
    args = ap.parse_args()
    rows = list(survey(SurveyConfig(args.max_len, args.max_points)))
    w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
    w.writeheader()
    w.writerows(rows)
    bad = [r for r in rows if r["failed"]]
    print(f"# {len(rows)} paths, {len(bad)} with failures", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
