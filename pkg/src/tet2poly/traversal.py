"""Traversal phase: grow one polyhedron per seed tet.

The depth-first search crosses non-frontier faces only and records every
frontier face it meets, once per region tet touching it. A frontier face with
both tets in the region (a barrier face) is therefore recorded twice.

:func:`regions_by_lfpp` is an independent oracle that groups tets by the
terminal face their largest-face propagation path reaches.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .labeling import FaceLabels
from .mesh import TetMesh


@dataclass
class Polyhedron:
    terminal_face: int
    tets: list[int]
    faces: list[int]
    simple: bool = True
    id: int = -1

    def duplicate_faces(self) -> list[int]:
        return sorted(f for f, n in Counter(self.faces).items() if n > 1)

    @property
    def n_tets(self) -> int:
        return len(self.tets)

    def sort_key(self) -> tuple[int, int]:
        return (self.terminal_face, min(self.tets))


@dataclass
class PolyMesh:
    """Polyhedral cells over the vertex set of ``mesh``."""

    mesh: TetMesh
    polyhedra: list[Polyhedron]
    frontier: NDArray[np.bool_]
    notes: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.polyhedra)

    @property
    def positions(self) -> NDArray[np.float64]:
        return self.mesh.positions

    @property
    def n_frontier(self) -> int:
        return int(self.frontier.sum())


def has_duplicates(faces: list[int]) -> bool:
    return len(set(faces)) != len(faces)


def _dfs(mesh: TetMesh, frontier: list[bool], seed: int, visited) -> tuple[list[int], list[int]]:
    """Explicit-stack search from ``seed``; ``frontier`` and ``visited`` are indexable by id."""
    tets, faces = [], []
    visited[seed] = True
    stack = [seed]
    tet_faces, tet_neighbors = mesh.lists.tet_faces, mesh.lists.tet_neighbors
    while stack:
        t = stack.pop()
        tets.append(t)
        for f, n in zip(tet_faces[t], tet_neighbors[t]):
            if frontier[f]:
                faces.append(f)
            elif not visited[n]:
                visited[n] = True
                stack.append(n)
    return tets, faces


def build_polyhedron(mesh: TetMesh, labels: FaceLabels, seed: int, visited,
                     terminal_face: int = -1, _frontier: list[bool] | None = None) -> Polyhedron:
    """Collect the region containing ``seed``; marks its tets in ``visited``."""
    frontier = _frontier if _frontier is not None else labels.frontier.tolist()
    if visited[seed]:
        raise ValueError(f"seed tet {seed} already visited")
    tets, faces = _dfs(mesh, frontier, seed, visited)
    tets.sort()
    if terminal_face < 0:
        terminal_face = int(labels.largest_of_tet[seed])
    return Polyhedron(terminal_face, tets, faces, simple=not has_duplicates(faces))


def traverse_all(mesh: TetMesh, labels: FaceLabels, workers: int = 1) -> PolyMesh:
    """One polyhedron per seed, ordered by terminal face id.

    Regions are disjoint, so seeds can be split across ``workers`` threads that
    share one visited array without changing the result.
    """
    frontier = labels.frontier.tolist()
    visited = bytearray(mesh.n_tets)
    seeds = labels.seeds.tolist()

    def run(chunk):
        return [build_polyhedron(mesh, labels, t, visited, f, frontier) for f, t in chunk]

    if workers > 1 and len(seeds) > 1:
        chunks = [seeds[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(workers) as ex:
            polys = [p for part in ex.map(run, chunks) for p in part]
    else:
        polys = run(seeds)
    polys.sort(key=Polyhedron.sort_key)
    for i, p in enumerate(polys):
        p.id = i
    if sum(len(p.tets) for p in polys) != mesh.n_tets or not all(visited):
        raise RuntimeError("terminal-face regions do not cover the mesh")
    return PolyMesh(mesh, polys, labels.frontier.copy())


def lfpp(mesh: TetMesh, labels: FaceLabels, t: int) -> list[int]:
    """Largest-face propagation path starting at ``t``.

    Ends at the tet whose largest face is terminal (border or shared).
    """
    path = [t]
    seen = {t}
    largest = labels.largest_of_tet
    while True:
        f = int(largest[t])
        if labels.terminal[f]:
            return path
        a, b = mesh.lists.face_tets[f]
        t = b if a == t else a
        if t < 0 or t in seen:
            raise RuntimeError(f"propagation path from {path[0]} does not reach a terminal face")
        seen.add(t)
        path.append(t)


def regions_by_lfpp(mesh: TetMesh, labels: FaceLabels) -> dict[int, set[int]]:
    """Map terminal face id -> tets whose path ends at it."""
    regions: dict[int, set[int]] = {}
    for t in range(mesh.n_tets):
        end = lfpp(mesh, labels, t)[-1]
        regions.setdefault(int(labels.largest_of_tet[end]), set()).add(t)
    return regions
