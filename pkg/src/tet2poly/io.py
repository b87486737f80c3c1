"""Mesh and statistics file formats.

* TetGen ``.node`` / ``.ele`` text input (0- or 1-based).
* Legacy ASCII VTK unstructured grid with polyhedron cells (type 42).
* Stats JSON: a list of objects keyed like :data:`tet2poly.metrics.STATS_KEYS`.
* Kuhn grid generator for structured test meshes.
"""

from __future__ import annotations

import itertools
import json
import os
from pathlib import Path
from typing import Iterable

import numpy as np

from .mesh import TetMesh
from .traversal import PolyMesh

VTK_POLYHEDRON = 42


class MeshFormatError(ValueError):
    def __init__(self, msg: str, lineno: int | None = None, source: str = ""):
        where = f"{source}:{lineno}: " if lineno is not None else (f"{source}: " if source else "")
        super().__init__(where + msg)
        self.lineno = lineno


def _records(text: str):
    """Yield ``(lineno, tokens)`` for non-blank lines, ``#`` comments stripped."""
    for i, line in enumerate(text.splitlines(), 1):
        toks = line.split("#", 1)[0].split()
        if toks:
            yield i, toks


def _ints(toks, lineno, source):
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise MeshFormatError(f"expected integers, got {' '.join(toks)!r}", lineno, source) from None


def read_node_ele(node_text: str, ele_text: str) -> tuple[np.ndarray, np.ndarray]:
    """Parse TetGen node/ele text into ``(positions (V,3), tets (T,4))``, 0-based.

    The base index is taken from the first node record.
    """
    recs = iter(_records(node_text))
    try:
        lineno, head = next(recs)
    except StopIteration:
        raise MeshFormatError("empty node file", None, ".node") from None
    hdr = _ints(head[:4], lineno, ".node")
    if len(hdr) < 2:
        raise MeshFormatError("node header needs <#points> <dim>", lineno, ".node")
    n, dim = hdr[0], hdr[1]
    if dim != 3:
        raise MeshFormatError(f"dimension must be 3, got {dim}", lineno, ".node")
    pos = np.empty((n, 3))
    base = None
    k = -1
    for k, (lineno, toks) in zip(range(n), recs):
        if len(toks) < 4:
            raise MeshFormatError("node record needs <index> <x> <y> <z>", lineno, ".node")
        idx = _ints(toks[:1], lineno, ".node")[0]
        if base is None:
            if idx not in (0, 1):
                raise MeshFormatError(f"first node index must be 0 or 1, got {idx}", lineno, ".node")
            base = idx
        if idx != k + base:
            raise MeshFormatError(f"node index {idx} out of sequence", lineno, ".node")
        try:
            pos[k] = [float(x) for x in toks[1:4]]
        except ValueError:
            raise MeshFormatError("bad coordinate", lineno, ".node") from None
    if k + 1 != n:
        raise MeshFormatError(f"header declares {n} nodes, found {k + 1}", None, ".node")
    base = base or 0

    recs = iter(_records(ele_text))
    try:
        lineno, head = next(recs)
    except StopIteration:
        raise MeshFormatError("empty ele file", None, ".ele") from None
    hdr = _ints(head[:3], lineno, ".ele")
    if len(hdr) < 2:
        raise MeshFormatError("ele header needs <#tets> <nodes per tet>", lineno, ".ele")
    nt, npt = hdr[0], hdr[1]
    if npt not in (4, 10):
        raise MeshFormatError(f"nodes per tet must be 4 or 10, got {npt}", lineno, ".ele")
    tets = np.empty((nt, 4), dtype=np.int64)
    k = -1
    for k, (lineno, toks) in zip(range(nt), recs):
        vals = _ints(toks[: 1 + npt], lineno, ".ele")
        if len(vals) < 1 + npt:
            raise MeshFormatError(f"ele record needs <index> and {npt} nodes", lineno, ".ele")
        quad = [v - base for v in vals[1:5]]
        if min(quad) < 0 or max(quad) >= n:
            raise MeshFormatError(f"node index out of range in tet {vals[0]}", lineno, ".ele")
        tets[k] = quad
    if k + 1 != nt:
        raise MeshFormatError(f"header declares {nt} tets, found {k + 1}", None, ".ele")
    return pos, tets


def load_node_ele(node_path: str | os.PathLike, ele_path: str | os.PathLike):
    return read_node_ele(Path(node_path).read_text(), Path(ele_path).read_text())


def write_node_ele(positions, tets, node_path, ele_path, base: int = 0) -> None:
    positions = np.asarray(positions, dtype=float)
    tets = np.asarray(tets, dtype=np.int64)
    with open(node_path, "w") as fh:
        fh.write(f"{len(positions)} 3 0 0\n")
        for i, (x, y, z) in enumerate(positions.tolist()):
            fh.write(f"{i + base} {x!r} {y!r} {z!r}\n")
    with open(ele_path, "w") as fh:
        fh.write(f"{len(tets)} 4 0\n")
        for i, q in enumerate(tets.tolist()):
            fh.write(f"{i + base} " + " ".join(str(v + base) for v in q) + "\n")


def oriented_faces(mesh: TetMesh, tets: Iterable[int], faces: Iterable[int]) -> list[list[int]]:
    """Vertex loops of ``faces`` wound with the normal pointing out of the cell.

    Orientation is taken against the region tet owning each face, which stays
    correct for non-convex cells.
    """
    region = set(tets)
    pos = mesh.positions
    out = []
    for f in faces:
        a, b = mesh.face_tets[f]
        owner = a if a in region else b
        loop = [int(v) for v in mesh.faces[f]]
        apex = next(int(v) for v in mesh.tets[owner] if v not in loop)
        p0, p1, p2 = pos[loop]
        if np.dot(np.cross(p1 - p0, p2 - p0), pos[apex] - p0) > 0:
            loop[1], loop[2] = loop[2], loop[1]
        out.append(loop)
    return out


def write_polymesh_vtk(pm: PolyMesh, path, title: str = "tet2poly polyhedral mesh") -> None:
    """Write a legacy ASCII VTK file with one polyhedron cell per polyhedron.

    Points are the full input vertex set, in input order.
    """
    if any(not P.simple for P in pm.polyhedra):
        raise ValueError("polyhedral mesh still holds non-simple cells; repair it first")
    cells = [oriented_faces(pm.mesh, P.tets, P.faces) for P in pm.polyhedra]
    lines = ["# vtk DataFile Version 4.2", title, "ASCII", "DATASET UNSTRUCTURED_GRID",
             f"POINTS {len(pm.positions)} double"]
    for x, y, z in pm.positions.tolist():
        lines.append(f"{x:.17g} {y:.17g} {z:.17g}")
    streams = []
    for c in cells:
        s = [len(c)]
        for loop in c:
            s.append(len(loop))
            s.extend(loop)
        streams.append(s)
    lines.append(f"CELLS {len(cells)} {sum(len(s) + 1 for s in streams)}")
    for s in streams:
        lines.append(" ".join(map(str, [len(s)] + s)))
    lines.append(f"CELL_TYPES {len(cells)}")
    lines.extend([str(VTK_POLYHEDRON)] * len(cells))
    lines.append(f"CELL_DATA {len(cells)}")
    lines.append("SCALARS n_tets int 1")
    lines.append("LOOKUP_TABLE default")
    lines.extend(str(P.n_tets) for P in pm.polyhedra)
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_stats_json(records, path) -> None:
    rows = [r.to_dict() if hasattr(r, "to_dict") else dict(r) for r in records]
    with open(path, "w", newline="\n") as fh:
        json.dump(rows, fh, indent=2)
        fh.write("\n")


def read_stats_json(path) -> list[dict]:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list) or not all(isinstance(r, dict) for r in data):
        raise ValueError(f"{path}: expected a list of stats objects")
    return data


def generate_kuhn_grid(n: int, spacing: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Cube lattice of ``n**3`` cells, each split into six tets along its main diagonal.

    Vertex ``(i, j, k)`` has id ``i + (n+1)*(j + (n+1)*k)``. All tets are
    positively oriented.
    """
    if n < 1:
        raise ValueError("grid resolution must be >= 1")
    m = n + 1
    r = np.arange(m) * float(spacing)
    z, y, x = np.meshgrid(r, r, r, indexing="ij")
    positions = np.stack([x.ravel(), y.ravel(), z.ravel()], axis=1)

    step = np.array([1, m, m * m])
    corner = np.array([i + m * (j + m * k) for k in range(n) for j in range(n) for i in range(n)])
    quads = []
    for perm in itertools.permutations(range(3)):
        a, b, _ = perm
        q = [0, step[a], step[a] + step[b], step.sum()]
        # odd permutations give negatively oriented tets
        inversions = sum(perm[i] > perm[j] for i in range(3) for j in range(i + 1, 3))
        if inversions % 2:
            q[1], q[2] = q[2], q[1]
        quads.append(q)
    quads = np.array(quads)
    tets = (corner[:, None, None] + quads[None]).reshape(-1, 4)
    return positions, tets
