import sys
import itertools

from hypothesis import HealthCheck, settings, strategies as st

from nubrick.grid import build_region
from nubrick.projection import is_staircase

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

MAX_POINTS = 12


def small_paths(max_len: int = 8, max_points: int = MAX_POINTS) -> list[str]:
    """Every path of length <= max_len whose region has <= max_points points."""
    out = []
    for n in range(1, max_len + 1):
        for steps in itertools.product("NE", repeat=n):
            s = "".join(steps)
            if len(build_region(s)) <= max_points:
                out.append(s)
    return out


PATHS = small_paths()
STAIRCASE_PATHS = [p for p in PATHS if is_staircase(tuple(p))]

paths = st.sampled_from(PATHS)
staircase_paths = st.sampled_from(STAIRCASE_PATHS)

# brick vectors of ENEEN, T0..T6
ENEEN_BRICK = [
    (-10, -9, -6, -5, -1, 0),
    (-10, -7, -8, -5, -1, 0),
    (-10, -6, -8, -5, -2, 0),
    (-10, -9, -5, -6, -1, 0),
    (-10, -8, -5, -7, -1, 0),
    (-10, -7, -6, -7, -1, 0),
    (-10, -6, -6, -7, -2, 0),
]
NENEENE_BRICK = [
    (-12, -11, -8, -7, -2, 0),
    (-12, -9, -10, -7, -2, 0),
    (-12, -8, -10, -7, -3, 0),
    (-12, -11, -7, -8, -2, 0),
    (-12, -10, -7, -9, -2, 0),
    (-12, -9, -8, -9, -2, 0),
    (-12, -8, -8, -9, -3, 0),
]
NENEENE_PI = [(-11, -21), (-9, -21), (-8, -21), (-11, -20), (-10, -19), (-9, -19), (-8, -19)]
NENEENE_Y = [(0, 0), (2, 0), (3, 0), (0, 1), (1, 2), (2, 2), (3, 2)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
