"""Joining criteria: rank the four faces of a tetrahedron.

A criterion is a face metric. The largest face of a tet is the one with the
greatest metric; values within a relative ``eps`` of the maximum count as tied
and the smallest face id wins.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.typing import NDArray

from .mesh import TetMesh, _triangle_areas, _triangle_inradii

DEFAULT_EPS = 1e-9


@dataclass(frozen=True)
class JoiningCriterion:
    name: str
    # (..., 3, 3) triangle coordinates -> (...) metric
    metric: Callable[[NDArray[np.float64]], NDArray[np.float64]]

    def __str__(self) -> str:
        return self.name


AREA_MAX = JoiningCriterion("area", _triangle_areas)
INCIRCLE_MAX = JoiningCriterion("incircle", _triangle_inradii)

CRITERIA: dict[str, JoiningCriterion] = {c.name: c for c in (AREA_MAX, INCIRCLE_MAX)}


def register(criterion: JoiningCriterion) -> None:
    CRITERIA[criterion.name] = criterion


def get_criterion(name: str | JoiningCriterion) -> JoiningCriterion:
    if isinstance(name, JoiningCriterion):
        return name
    try:
        return CRITERIA[name]
    except KeyError:
        raise ValueError(
            f"unknown joining criterion {name!r}; choose from {sorted(CRITERIA)}"
        ) from None


def tet_face_metrics(mesh: TetMesh, J: JoiningCriterion, tets=None) -> NDArray[np.float64]:
    """Metric of each local face, shape (T, 4) (or (len(tets), 4))."""
    fids = mesh.tet_faces if tets is None else mesh.tet_faces[tets]
    return J.metric(mesh.positions[mesh.faces[fids]])


def _pick(values: NDArray, fids: NDArray, eps: float) -> int:
    m = values.max()
    cand = values >= m - eps * abs(m)
    return int(fids[cand].min())


def largest_face(mesh: TetMesh, t: int, J: JoiningCriterion | str, eps: float = DEFAULT_EPS) -> int:
    J = get_criterion(J)
    fids = mesh.tet_faces[t]
    return _pick(tet_face_metrics(mesh, J, [t])[0], fids, eps)


def rank_faces(mesh: TetMesh, t: int, J: JoiningCriterion | str, eps: float = DEFAULT_EPS) -> list[int]:
    """Face ids of ``t`` from largest to smallest.

    Built by repeatedly taking the largest remaining face, so the first entry
    always agrees with :func:`largest_face`.
    """
    J = get_criterion(J)
    fids = mesh.tet_faces[t].copy()
    vals = tet_face_metrics(mesh, J, [t])[0]
    out = []
    while len(fids):
        f = _pick(vals, fids, eps)
        out.append(f)
        keep = fids != f
        fids, vals = fids[keep], vals[keep]
    return out


def largest_faces(mesh: TetMesh, J: JoiningCriterion | str, eps: float = DEFAULT_EPS) -> NDArray[np.int64]:
    """Vectorized :func:`largest_face` for every tet."""
    J = get_criterion(J)
    vals = tet_face_metrics(mesh, J)
    m = vals.max(axis=1, keepdims=True)
    cand = vals >= m - eps * np.abs(m)
    big = np.iinfo(np.int64).max
    return np.where(cand, mesh.tet_faces, big).min(axis=1)
