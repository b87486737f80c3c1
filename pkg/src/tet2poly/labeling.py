"""Label phase: largest face per tet, frontier/terminal face bits, and seeds."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray

from .criteria import DEFAULT_EPS, JoiningCriterion, largest_faces
from .mesh import TetMesh


@dataclass(frozen=True)
class FaceLabels:
    """Output of :func:`label`.

    ``seeds`` is an (n, 2) array of ``(terminal face, seed tet)`` rows sorted by
    face id.
    """

    largest_of_tet: NDArray[np.int64]
    frontier: NDArray[np.bool_]
    terminal: NDArray[np.bool_]
    seeds: NDArray[np.int64]

    @property
    def n_frontier(self) -> int:
        return int(self.frontier.sum())

    def with_frontier(self, frontier: NDArray[np.bool_]) -> "FaceLabels":
        return FaceLabels(self.largest_of_tet, frontier, self.terminal, self.seeds)


class FaceKind(Enum):
    FRONTIER = "frontier"
    INTERNAL = "internal"


class FaceClass(NamedTuple):
    kind: FaceKind
    terminal: bool


def label(mesh: TetMesh, J: JoiningCriterion | str, eps: float = DEFAULT_EPS) -> FaceLabels:
    largest = largest_faces(mesh, J, eps)
    t0 = mesh.face_tets[:, 0]
    t1 = mesh.face_tets[:, 1]
    border = t1 < 0
    fid = np.arange(mesh.n_faces)
    lg0 = largest[t0] == fid
    lg1 = np.where(border, False, largest[np.where(border, 0, t1)] == fid)

    terminal = np.where(border, lg0, lg0 & lg1)
    frontier = border | (~lg0 & ~lg1)

    tf = np.nonzero(terminal)[0]
    # face_tets rows keep the lower tet id first, so column 0 is the seed either way
    seeds = np.stack([tf, t0[tf]], axis=1).astype(np.int64)
    for a in (largest, frontier, terminal, seeds):
        a.setflags(write=False)
    return FaceLabels(largest, frontier, terminal, seeds)


def classify_face(labels: FaceLabels, mesh: TetMesh, f: int) -> FaceClass:
    kind = FaceKind.FRONTIER if labels.frontier[f] else FaceKind.INTERNAL
    return FaceClass(kind, bool(labels.terminal[f]))
