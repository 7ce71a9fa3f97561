"""Regenerate the worked-example tables: ENEEN brick vectors and cone,
NENEENE projections, and the NENENEENE chain."""
from nubrick.cli import fmt_vector
from nubrick.faces import NuBrickData
from nubrick.grid import build_region
from nubrick.projection import parse_staircase, project, project_groups, reduce, y_coords


def main():
    data = NuBrickData(build_region("ENEEN"))
    print("ENEEN")
    for k, t in enumerate(data.trees):
        print(f"  b(T{k}) = {fmt_vector(data.brick[t])}")
    print("  cone:", ", ".join(map(str, data.cone)))

    for path in ("NENEENE", "NENENEENE"):
        r = build_region(path)
        spec = parse_staircase(r.path)
        data = NuBrickData(r)
        print(path, " M =", [sorted(m) for m in spec.m_sets])
        for k, t in enumerate(data.trees):
            bt = reduce(data.brick[t], spec)
            print(f"  T{k}: b = {fmt_vector(data.brick[t])}  pi1 = {fmt_vector(project_groups(bt, spec))}"
                  f"  pi = {fmt_vector(project(bt, spec))}  y = {y_coords(t, r, spec, data.brick)}")


if __name__ == "__main__":
    main()
