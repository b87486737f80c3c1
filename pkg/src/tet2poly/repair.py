"""Repair phase: remove barrier faces from non-simple polyhedra.

``split`` promotes one internal face around each barrier tip edge to frontier
and re-traverses, which cuts the region in two (internal faces of a region form
a tree over its tets, so removing one always disconnects it). ``dissolve``
simply drops the barrier faces.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .labeling import FaceLabels
from .mesh import TetMesh
from .traversal import PolyMesh, Polyhedron, _dfs, has_duplicates

log = logging.getLogger(__name__)

REPAIR_MODES = ("split", "dissolve", "none")
DEFAULT_MAX_DEPTH = 32


@dataclass(frozen=True)
class BarrierTip:
    edge: int
    barrier_face: int
    # internal faces around the edge, rotating away from the barrier face
    internal_fan: tuple[int, ...]


def barrier_faces(P: Polyhedron) -> list[int]:
    return P.duplicate_faces()


def region_faces_at_edge(mesh: TetMesh, tets: set[int], e: int) -> list[int]:
    """Faces incident to edge ``e`` that bound at least one tet of the region."""
    face_tets = mesh.lists.face_tets
    out = []
    for f in mesh.lists.edge_faces[e]:
        a, b = face_tets[f]
        if a in tets or b in tets:
            out.append(f)
    return out


def tip_counts(mesh: TetMesh, labels: FaceLabels, P: Polyhedron, e: int) -> tuple[int, int]:
    """``(|F_f|, |F_e & F_f|)`` for edge ``e`` of polyhedron ``P``.

    ``F_f`` is the set of frontier faces of ``P``; ``F_e`` the region faces at ``e``.
    """
    frontier_faces = set(P.faces)
    fe = region_faces_at_edge(mesh, set(P.tets), e)
    return len(frontier_faces), sum(1 for f in fe if f in frontier_faces)


def _fan_order(mesh: TetMesh, e: int, start: int, faces: list[int]) -> list[int]:
    """Sort ``faces`` around edge ``e`` by rotation angle from ``start``.

    Rotation is counter-clockwise about the axis pointing from the lower to the
    higher edge vertex id.
    """
    v0, v1 = mesh.lists.edges[e]
    pos = mesh.positions
    o = pos[v0].tolist()
    axis = _sub(pos[v1].tolist(), o)
    n = math.sqrt(_dot(axis, axis))
    axis = [c / n for c in axis]

    def radial(f):
        w = next(v for v in mesh.lists.faces[f] if v != v0 and v != v1)
        d = _sub(pos[w].tolist(), o)
        h = _dot(d, axis)
        return [d[i] - h * axis[i] for i in range(3)]

    r0 = radial(start)
    keyed = []
    for f in faces:
        d = radial(f)
        a = math.atan2(_dot(_cross(r0, d), axis), _dot(r0, d)) % (2 * math.pi)
        keyed.append((a, f))
    return [f for _, f in sorted(keyed)]


def _sub(a, b):
    return [a[0] - b[0], a[1] - b[1], a[2] - b[2]]


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a, b):
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def find_barrier_tips(mesh: TetMesh, labels: FaceLabels, P: Polyhedron) -> list[BarrierTip]:
    dups = barrier_faces(P)
    if not dups:
        return []
    tets = set(P.tets)
    frontier_faces = set(P.faces)
    tips = []
    seen = set()
    for b in dups:
        for e in mesh.lists.face_edges[b]:
            if e in seen:
                continue
            fe = region_faces_at_edge(mesh, tets, e)
            hits = [f for f in fe if f in frontier_faces]
            if len(frontier_faces) - len(hits) != len(frontier_faces) - 1:
                continue
            seen.add(e)
            internal = [f for f in fe if f != b]
            fan = _fan_order(mesh, e, b, internal)
            tips.append(BarrierTip(e, b, tuple(fan)))
    return tips


def middle_face(tip: BarrierTip) -> int:
    return tip.internal_fan[len(tip.internal_fan) // 2]


def dissolve_barriers(P: Polyhedron) -> Polyhedron:
    counts = Counter(P.faces)
    faces = [f for f in P.faces if counts[f] == 1]
    return Polyhedron(P.terminal_face, list(P.tets), faces, simple=True, id=P.id)


def split_polyhedron(mesh: TetMesh, labels: FaceLabels, P: Polyhedron,
                     tips: list[BarrierTip], frontier=None) -> list[Polyhedron]:
    """Split ``P`` at the middle internal face of each tip.

    ``frontier`` (a list of bools; defaults to a copy of ``labels.frontier``) is
    updated in place with the promoted faces. Children may still be non-simple;
    see :func:`repair_all` for the recursive driver.
    """
    if not tips:
        return [P]
    if frontier is None:
        frontier = labels.frontier.tolist()
    subseeds: list[int] = []
    for tip in tips:
        fm = middle_face(tip)
        frontier[fm] = True
        subseeds.extend(mesh.lists.face_tets[fm])

    region = set(P.tets)
    visited = {t: False for t in P.tets}
    children = []
    for s in subseeds + sorted(P.tets):
        if visited[s]:
            continue
        tets, faces = _dfs(mesh, frontier, s, visited)
        if not region.issuperset(tets):
            raise RuntimeError("split traversal escaped its region")
        tets.sort()
        children.append(Polyhedron(P.terminal_face, tets, faces, simple=not has_duplicates(faces)))
    children.sort(key=Polyhedron.sort_key)
    return children


def _repair_split(mesh, labels, P, frontier, max_depth, notes):
    work = [(P, 0)]
    done = []
    while work:
        Q, depth = work.pop()
        if Q.simple:
            done.append(Q)
            continue
        tips = find_barrier_tips(mesh, labels, Q)
        if not tips or depth >= max_depth:
            why = "no barrier tip" if not tips else f"split depth {max_depth} exceeded"
            if tips:
                log.warning("polyhedron %d: %s, dissolving barriers", P.id, why)
            notes.append(f"polyhedron {P.id}: {why}; dissolved {len(Q.duplicate_faces())} barrier faces")
            for f in Q.duplicate_faces():
                frontier[f] = False
            done.append(dissolve_barriers(Q))
            continue
        for child in reversed(split_polyhedron(mesh, labels, Q, tips, frontier)):
            work.append((child, depth + 1))
    done.sort(key=Polyhedron.sort_key)
    return done


def repair_all(mesh: TetMesh, labels: FaceLabels, pm: PolyMesh, mode: str = "split",
               max_depth: int = DEFAULT_MAX_DEPTH) -> PolyMesh:
    """Return a new :class:`PolyMesh` with every polyhedron repaired per ``mode``."""
    if mode not in REPAIR_MODES:
        raise ValueError(f"unknown repair mode {mode!r}; choose from {REPAIR_MODES}")
    frontier = pm.frontier.tolist()
    notes = list(pm.notes)
    out: list[Polyhedron] = []
    for P in pm.polyhedra:
        if mode == "none" or P.simple:
            out.append(Polyhedron(P.terminal_face, list(P.tets), list(P.faces),
                                  simple=not has_duplicates(P.faces)))
        elif mode == "dissolve":
            for f in P.duplicate_faces():
                frontier[f] = False
            out.append(dissolve_barriers(P))
        else:
            out.extend(_repair_split(mesh, labels, P, frontier, max_depth, notes))
    for i, P in enumerate(out):
        P.id = i
    return PolyMesh(pm.mesh, out, np.array(frontier, dtype=bool), notes)
