"""Independent oracles: brute-force scans of the intersection form over a box.

These evaluate the quadratic form directly with numpy and share no code with
the package beyond the Gram matrix entries.
"""

import numpy as np
import pytest

BOX = 1000


def box_forms(g, d, radius=BOX):
    r = np.arange(-radius, radius + 1, dtype=np.int64)
    X, Y = np.meshgrid(r, r, indexing="ij")
    sq = 2 * (g - 1) * X * X + 2 * d * X * Y
    deg = 2 * (g - 1) * X + d * Y
    return X, Y, sq, deg


def box_roots(g, d, radius=BOX):
    X, Y, sq, _ = box_forms(g, d, radius)
    mask = sq == -2
    return {(int(x), int(y)) for x, y in zip(X[mask], Y[mask])}


def box_bpf_obstructions(g, d, radius=BOX):
    X, Y, sq, deg = box_forms(g, d, radius)
    mask = (sq == 0) & (deg == 1)
    return {(int(x), int(y)) for x, y in zip(X[mask], Y[mask])}


def theorem_grid(g_lo=3, g_hi=60):
    return [(g, d) for g in range(g_lo, g_hi + 1) for d in range(2, (g + 3) // 2 + 1)]


# 20 spread-out grid points, including every root-bearing shape (d | g) and the boundaries
SPOT_GRID = [
    (3, 2), (3, 3), (4, 2), (4, 3), (5, 4), (6, 2), (6, 3), (7, 4), (8, 4), (9, 3),
    (10, 5), (10, 6), (12, 4), (15, 5), (18, 9), (20, 11), (24, 6), (30, 15), (45, 9), (60, 31),
]

# ten surfaces for the randomized property suites
PROPERTY_SURFACES = [(3, 2), (4, 3), (5, 3), (6, 3), (7, 4), (9, 4), (10, 6), (12, 4), (20, 11), (60, 31)]


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
