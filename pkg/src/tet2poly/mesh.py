"""Immutable incidence structure for tetrahedral meshes.

Element ids are dense, zero-based integer indices into numpy arrays. Faces and
edges are keyed by their sorted vertex ids, so merging never depends on
floating point geometry.

Local face ``k`` of a tetrahedron is the face opposite its vertex ``k``; the
neighbor across it is ``tet_neighbors[t, k]`` (``-1`` on the border).
"""

from __future__ import annotations

from functools import cached_property
from types import SimpleNamespace
from typing import NamedTuple, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

# local face k = quad without vertex k
LOCAL_FACES = np.array([[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]], dtype=np.int64)
LOCAL_EDGES = np.array([[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]], dtype=np.int64)

VOLUME_TOL = 1e-12
AREA_TOL = 1e-12


class MeshError(ValueError):
    """Raised for input that cannot form a valid tetrahedral mesh."""

    def __init__(self, msg: str, tet: int | None = None):
        super().__init__(msg)
        self.tet = tet


class MeshCounts(NamedTuple):
    n_vertices: int
    n_edges: int
    n_faces: int
    n_tets: int

    @property
    def euler(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces - self.n_tets


def _first_encounter_unique(keys: NDArray[np.int64], n_values: int) -> tuple[NDArray, NDArray]:
    """Unique rows numbered in order of first appearance.

    Rows hold ids in ``[0, n_values)``. Returns ``(unique_rows, inverse)`` with
    ``unique_rows[inverse] == keys``.
    """
    width = keys.shape[1]
    if n_values ** width < 2**62:
        code = np.zeros(len(keys), dtype=np.int64)
        for j in range(width):
            code = code * n_values + keys[:, j]
        _, first, inverse = np.unique(code, return_index=True, return_inverse=True)
        uniq = keys[first]
    else:
        uniq, first, inverse = np.unique(keys, axis=0, return_index=True, return_inverse=True)
    inverse = inverse.reshape(-1)
    order = np.argsort(first, kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size)
    return uniq[order], rank[inverse]


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class TetMesh:
    """Tetrahedral mesh with vertex, edge, face and tet incidence.

    Built with :func:`build_from_tets`. All arrays are read-only.

    Attributes
    ----------
    positions : (V, 3) float array
    tets : (T, 4) vertex ids, as given
    tet_faces : (T, 4) face ids, column k opposite vertex k
    tet_neighbors : (T, 4) tet ids aligned with ``tet_faces``, -1 on border
    faces : (F, 3) sorted vertex ids
    face_tets : (F, 2) incident tets, lower-numbered first; column 1 is -1 on border
    face_edges : (F, 3) edge ids
    edges : (E, 2) sorted vertex ids
    edge_face_offsets, edge_face_ids : CSR edge-to-face incidence
    """

    def __init__(self, positions, tets, tet_faces, tet_neighbors, faces, face_tets,
                 face_edges, edges, edge_face_offsets, edge_face_ids):
        self.positions = _frozen(positions)
        self.tets = _frozen(tets)
        self.tet_faces = _frozen(tet_faces)
        self.tet_neighbors = _frozen(tet_neighbors)
        self.faces = _frozen(faces)
        self.face_tets = _frozen(face_tets)
        self.face_edges = _frozen(face_edges)
        self.edges = _frozen(edges)
        self.edge_face_offsets = _frozen(edge_face_offsets)
        self.edge_face_ids = _frozen(edge_face_ids)

    @property
    def n_vertices(self) -> int:
        return len(self.positions)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def n_tets(self) -> int:
        return len(self.tets)

    @cached_property
    def lists(self) -> SimpleNamespace:
        """Nested-list copies of the incidence arrays for pure-Python loops."""
        ef = self.edge_face_ids.tolist()
        off = self.edge_face_offsets.tolist()
        return SimpleNamespace(
            tet_faces=self.tet_faces.tolist(),
            tet_neighbors=self.tet_neighbors.tolist(),
            face_tets=self.face_tets.tolist(),
            faces=self.faces.tolist(),
            face_edges=self.face_edges.tolist(),
            edges=self.edges.tolist(),
            edge_faces=[ef[off[e]:off[e + 1]] for e in range(len(off) - 1)],
        )

    def counts(self) -> MeshCounts:
        return MeshCounts(self.n_vertices, self.n_edges, self.n_faces, self.n_tets)

    @property
    def border_mask(self) -> NDArray[np.bool_]:
        return self.face_tets[:, 1] < 0

    def is_border(self, f: int) -> bool:
        return bool(self.face_tets[f, 1] < 0)

    def edge_faces(self, e: int) -> NDArray[np.int64]:
        return self.edge_face_ids[self.edge_face_offsets[e]:self.edge_face_offsets[e + 1]]

    def face_area(self, f: int) -> float:
        a, b, c = self.positions[self.faces[f]]
        return 0.5 * float(np.linalg.norm(np.cross(b - a, c - a)))

    def face_incircle_radius(self, f: int) -> float:
        a, b, c = self.positions[self.faces[f]]
        s = 0.5 * (np.linalg.norm(b - a) + np.linalg.norm(c - b) + np.linalg.norm(a - c))
        return self.face_area(f) / float(s)

    def tet_volume(self, t: int) -> float:
        a, b, c, d = self.positions[self.tets[t]]
        return abs(float(np.linalg.det(np.array([b - a, c - a, d - a])))) / 6.0

    def tet_volumes(self) -> NDArray[np.float64]:
        p = self.positions[self.tets]
        return np.abs(_signed6(p)) / 6.0

    def face_areas(self) -> NDArray[np.float64]:
        return _triangle_areas(self.positions[self.faces])

    def face_incircle_radii(self) -> NDArray[np.float64]:
        return _triangle_inradii(self.positions[self.faces])

    def __repr__(self) -> str:
        v, e, f, t = self.counts()
        return f"TetMesh(V={v}, E={e}, F={f}, T={t})"


def _signed6(p: NDArray[np.float64]) -> NDArray[np.float64]:
    """Six times the signed volume of each (n, 4, 3) tet."""
    return np.einsum(
        "ij,ij->i", p[:, 1] - p[:, 0], np.cross(p[:, 2] - p[:, 0], p[:, 3] - p[:, 0])
    )


def _triangle_areas(p: NDArray[np.float64]) -> NDArray[np.float64]:
    cr = np.cross(p[..., 1, :] - p[..., 0, :], p[..., 2, :] - p[..., 0, :])
    return 0.5 * np.sqrt(np.einsum("...i,...i->...", cr, cr))


def _triangle_inradii(p: NDArray[np.float64]) -> NDArray[np.float64]:
    la = np.linalg.norm(p[..., 1, :] - p[..., 0, :], axis=-1)
    lb = np.linalg.norm(p[..., 2, :] - p[..., 1, :], axis=-1)
    lc = np.linalg.norm(p[..., 0, :] - p[..., 2, :], axis=-1)
    return _triangle_areas(p) / (0.5 * (la + lb + lc))


def build_from_tets(positions: ArrayLike, tet_quads: ArrayLike | Sequence[Sequence[int]]) -> TetMesh:
    """Build a :class:`TetMesh` from vertex coordinates and vertex quadruples.

    Faces and edges are numbered in first-encounter order while scanning tets by
    ascending id (local faces 0..3, local edges in ``LOCAL_EDGES`` order).

    Raises
    ------
    MeshError
        On out-of-range or repeated vertex indices, duplicate tets, non-finite
        coordinates, or degenerate tets/faces.
    """
    pos = np.array(positions, dtype=np.float64)
    if pos.ndim != 2 or pos.shape[1] != 3:
        raise MeshError(f"positions must have shape (V, 3), got {pos.shape}")
    if not np.all(np.isfinite(pos)):
        raise MeshError("positions contain NaN or Inf")
    tets = np.array(tet_quads, dtype=np.int64)
    if tets.ndim != 2 or tets.shape[1] != 4 or len(tets) == 0:
        raise MeshError("need at least one tet given as 4 vertex indices")
    nv = len(pos)
    bad = np.nonzero(((tets < 0) | (tets >= nv)).any(axis=1))[0]
    if bad.size:
        raise MeshError(f"tet {bad[0]} has a vertex index out of range [0, {nv})", int(bad[0]))

    sorted_quads = np.sort(tets, axis=1)
    repeated = np.nonzero((np.diff(sorted_quads, axis=1) == 0).any(axis=1))[0]
    if repeated.size:
        raise MeshError(f"tet {repeated[0]} repeats a vertex", int(repeated[0]))
    uq, first, inv = np.unique(sorted_quads, axis=0, return_index=True, return_inverse=True)
    if len(uq) != len(tets):
        inv = inv.reshape(-1)
        dup = np.nonzero(first[inv] != np.arange(len(tets)))[0][0]
        raise MeshError(f"tet {dup} duplicates tet {first[inv[dup]]}", int(dup))

    diag = float(np.linalg.norm(np.ptp(pos[np.unique(tets)], axis=0)))
    vol6 = np.abs(_signed6(pos[tets]))
    degenerate = np.nonzero(vol6 / 6.0 <= VOLUME_TOL * diag**3)[0]
    if degenerate.size:
        raise MeshError(f"tet {degenerate[0]} is degenerate (volume ~ 0)", int(degenerate[0]))

    nt = len(tets)
    # faces
    local = tets[:, LOCAL_FACES]  # (T, 4, 3)
    keys = np.sort(local.reshape(-1, 3), axis=1)
    faces, face_of_slot = _first_encounter_unique(keys, nv)
    tet_faces = face_of_slot.reshape(nt, 4)
    nf = len(faces)

    counts = np.bincount(face_of_slot, minlength=nf)
    if counts.max() > 2:
        f = int(np.argmax(counts))
        raise MeshError(f"face {faces[f].tolist()} is shared by more than two tets")
    slot_tet = np.repeat(np.arange(nt), 4)
    order = np.argsort(face_of_slot, kind="stable")
    starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
    face_tets = np.full((nf, 2), -1, dtype=np.int64)
    face_tets[:, 0] = slot_tet[order[starts]]
    two = counts == 2
    face_tets[two, 1] = slot_tet[order[starts[two] + 1]]

    other = np.where(face_tets[tet_faces, 0] == np.arange(nt)[:, None],
                     face_tets[tet_faces, 1], face_tets[tet_faces, 0])
    tet_neighbors = other

    small = np.nonzero(_triangle_areas(pos[faces]) <= AREA_TOL * diag**2)[0]
    if small.size:
        t = int(face_tets[small[0], 0])
        raise MeshError(f"tet {t} has a degenerate face (area ~ 0)", t)

    # edges, numbered by first encounter over tets
    ekeys = np.sort(tets[:, LOCAL_EDGES].reshape(-1, 2), axis=1)
    edges, _ = _first_encounter_unique(ekeys, nv)
    nv_big = np.int64(nv)
    ecode = edges[:, 0] * nv_big + edges[:, 1]
    ecode_order = np.argsort(ecode)
    fpairs = np.stack([faces[:, [0, 1]], faces[:, [0, 2]], faces[:, [1, 2]]], axis=1)
    fcode = fpairs[..., 0] * nv_big + fpairs[..., 1]
    face_edges = ecode_order[np.searchsorted(ecode, fcode, sorter=ecode_order)]

    flat_e = face_edges.reshape(-1)
    flat_f = np.repeat(np.arange(nf), 3)
    eorder = np.lexsort((flat_f, flat_e))
    edge_face_ids = flat_f[eorder]
    edge_face_offsets = np.concatenate(([0], np.cumsum(np.bincount(flat_e, minlength=len(edges)))))

    return TetMesh(pos, tets, tet_faces, tet_neighbors, faces, face_tets, face_edges,
                   edges, edge_face_offsets, edge_face_ids)
