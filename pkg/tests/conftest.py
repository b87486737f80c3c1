import math
import sys
from functools import lru_cache

import numpy as np
import pytest

from tet2poly import build_from_tets
from tet2poly.io import generate_kuhn_grid

REGULAR = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
CORNER = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]


def two_tet_points():
    # big equilateral base shared by a low cap above and below
    s = 2.0
    base = [(0, 0, 0), (s, 0, 0), (s / 2, s * math.sqrt(3) / 2, 0)]
    c = (s / 2, s * math.sqrt(3) / 6)
    return base + [(c[0], c[1], 0.3), (c[0], c[1], -0.25)], [[0, 1, 2, 3], [0, 1, 2, 4]]


def one_sided_points():
    # shared face abc is the largest of the flat lower tet only
    base = [(0, 0, 0), (1, 0, 0), (0, 1, 0)]
    return base + [(0.3, 0.3, 0.1), (0.0, 0.0, 1.5)], [[0, 1, 2, 3], [0, 1, 2, 4]]


def figure3_points():
    """Three tets: t0-t1 share their common largest face, t2 hangs off t0."""
    pts, tets = two_tet_points()
    # tall tet on face (a, b, d) of t0, outside it
    pts = pts + [(1.0, -2.5, 0.6)]
    tets = tets + [[0, 1, 3, 5]]
    return pts, tets


def fan_points(radii=(1.0, 1.5, 1.4, 1.3, 1.2), h=3.0):
    """Tets around the edge (0, 0, -h)-(0, 0, h), ring vertices at ``radii``.

    With the default radii every tet picks a fan face as its largest face and
    the fan face through ring vertex 0 is the largest face of neither tet: a
    barrier face with the axis edge as its tip.
    """
    pts = [(0, 0, -h), (0, 0, h)]
    n = len(radii)
    for k, r in enumerate(radii):
        a = 2 * math.pi * k / n
        pts.append((r * math.cos(a), r * math.sin(a), 0.0))
    tets = [[0, 1, 2 + k, 2 + (k + 1) % n] for k in range(n)]
    return pts, tets


@lru_cache(maxsize=None)
def kuhn_mesh(n):
    return build_from_tets(*generate_kuhn_grid(n))


@lru_cache(maxsize=None)
def delaunay_mesh(n, seed=0):
    from scipy.spatial import Delaunay

    pts = np.random.default_rng(seed).random((n, 3))
    return build_from_tets(pts, Delaunay(pts).simplices)


@pytest.fixture
def regular_mesh():
    return build_from_tets(REGULAR, [[0, 1, 2, 3]])


@pytest.fixture
def corner_mesh():
    return build_from_tets(CORNER, [[0, 1, 2, 3]])


@pytest.fixture
def two_tet_mesh():
    return build_from_tets(*two_tet_points())


@pytest.fixture
def one_sided_mesh():
    return build_from_tets(*one_sided_points())


@pytest.fixture
def figure3_mesh():
    return build_from_tets(*figure3_points())


@pytest.fixture
def fan_mesh():
    return build_from_tets(*fan_points())


FIXTURES = {
    "single": lambda: build_from_tets(CORNER, [[0, 1, 2, 3]]),
    "two_tets": lambda: build_from_tets(*two_tet_points()),
    "fan": lambda: build_from_tets(*fan_points()),
    "kuhn1": lambda: kuhn_mesh(1),
    "kuhn2": lambda: kuhn_mesh(2),
    "kuhn4": lambda: kuhn_mesh(4),
    "kuhn8": lambda: kuhn_mesh(8),
    "random100": lambda: delaunay_mesh(100),
    "random1000": lambda: delaunay_mesh(1000),
}


@pytest.fixture(params=sorted(FIXTURES))
def any_mesh(request):
    return FIXTURES[request.param]()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
