import random

import pytest

from proxigraph.geometry import PointSet

# acceptance criteria register one line each; printed in the terminal summary
ACCEPTANCE_RESULTS: list[str] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    suffix = f" ({detail})" if detail else ""
    line = f"[{status}] {name}{suffix}"
    ACCEPTANCE_RESULTS.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


def random_point_set(rng: random.Random, n: int, box: float = 512.0, grid: int | None = None) -> PointSet:
    """n distinct random points; `grid` snaps coordinates to a lattice to
    provoke ties and degeneracies."""
    pts: set[tuple[float, float]] = set()
    while len(pts) < n:
        if grid is None:
            pts.add((rng.uniform(0.0, box), rng.uniform(0.0, box)))
        else:
            pts.add((float(rng.randint(0, grid)), float(rng.randint(0, grid))))
    return PointSet.from_xy(sorted(pts))


@pytest.fixture
def rnd() -> random.Random:
    return random.Random(0xC0FFEE)
