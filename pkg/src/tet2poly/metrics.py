"""Per-run statistics, cross-run summaries, and Voronoi dual counts."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from typing import Iterable, Mapping

from .labeling import FaceLabels
from .mesh import MeshCounts, TetMesh
from .traversal import PolyMesh

STATS_KEYS = ("V", "F", "T", "E", "P", "barrier_faces", "polys_with_barriers",
              "poly_tetras", "max_tetras", "avg_tetras", "F_out", "time_ms")


@dataclass
class StatsRecord:
    """One row of a run table.

    ``P``, ``poly_tetras``, ``max_tetras``, ``avg_tetras`` and ``F_out`` describe
    the final (repaired) mesh. The barrier columns are measured on the traversal
    output before repair, whose cell count is ``P_raw``.
    """

    V: int
    F: int
    T: int
    E: int
    P: int
    barrier_faces: int
    polys_with_barriers: int
    poly_tetras: int
    max_tetras: int
    avg_tetras: float
    F_out: int
    time_ms: float
    P_raw: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: Mapping) -> "StatsRecord":
        missing = [k for k in STATS_KEYS if k not in d]
        if missing:
            raise ValueError(f"stats record lacks keys {missing}")
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})


@dataclass(frozen=True)
class SummaryRecord:
    reduction_pct: float
    avg_tetras: float
    barriers_pct: float
    tetra_retention_pct: float


def collect_stats(mesh: TetMesh, output: PolyMesh, labels: FaceLabels, time_ms: float,
                  raw: PolyMesh | None = None, count_after_repair: bool = True) -> StatsRecord:
    """Build a :class:`StatsRecord`.

    ``raw`` is the traversal output before repair and supplies the barrier
    columns; without it the output mesh is used for everything. With
    ``count_after_repair=False`` the cell columns are taken from ``raw`` too.
    """
    raw = raw if raw is not None else output
    dups = [P.duplicate_faces() for P in raw.polyhedra]
    cells = output if count_after_repair else raw
    sizes = [P.n_tets for P in cells.polyhedra]
    V, E, F, T = mesh.counts()
    P = len(sizes)
    return StatsRecord(
        V=V, F=F, T=T, E=E, P=P,
        barrier_faces=sum(len(d) for d in dups),
        polys_with_barriers=sum(1 for d in dups if d),
        poly_tetras=sum(1 for s in sizes if s == 1),
        max_tetras=max(sizes),
        avg_tetras=round(T / P, 1),
        F_out=output.n_frontier,
        time_ms=float(time_ms),
        P_raw=len(raw.polyhedra),
    )


def _mean(xs: list[float]) -> float:
    return sum(xs) / len(xs)


def summarize(records: Iterable[StatsRecord | Mapping]) -> SummaryRecord:
    """Mean of per-record ratios, as percentages.

    ``avg_tetras`` averages the records' own (already rounded) ``avg_tetras``.
    """
    rows = [r if isinstance(r, StatsRecord) else StatsRecord.from_dict(r) for r in records]
    if not rows:
        raise ValueError("summarize needs at least one record")
    return SummaryRecord(
        reduction_pct=100 * _mean([1 - r.P / r.T for r in rows]),
        avg_tetras=round(_mean([r.avg_tetras for r in rows]), 1),
        barriers_pct=100 * _mean([r.polys_with_barriers / r.P for r in rows]),
        tetra_retention_pct=100 * _mean([r.poly_tetras / r.P for r in rows]),
    )


def voronoi_dual_counts(mesh: TetMesh | MeshCounts) -> tuple[int, int, int, int]:
    """``(cells, faces, edges, vertices)`` of the Voronoi dual: ``(V, E, F, T)``."""
    return (mesh.n_vertices, mesh.n_edges, mesh.n_faces, mesh.n_tets)


_TABLE_COLS = [("V", "#V"), ("F", "#F"), ("T", "#T"), ("E", "#E"), ("P", "#P"),
               ("barrier_faces", "#B.faces"), ("polys_with_barriers", "#P.w.barriers"),
               ("poly_tetras", "#PolyTetras"), ("max_tetras", "Max tetras"),
               ("avg_tetras", "Avg tetras"), ("F_out", "#F'"), ("time_ms", "Time")]


def format_table(records: Iterable[StatsRecord]) -> str:
    rows = [[h for _, h in _TABLE_COLS]]
    for r in records:
        row = []
        for k, _ in _TABLE_COLS:
            v = getattr(r, k)
            row.append(f"{v:.1f}" if isinstance(v, float) else str(v))
        rows.append(row)
    widths = [max(len(row[i]) for row in rows) for i in range(len(_TABLE_COLS))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows)


def format_summary(named: Iterable[tuple[str, SummaryRecord]]) -> str:
    head = ("", "Reduction", "Avg tetras", "Barriers", "Tetrahedrons")
    rows = [head]
    for name, s in named:
        rows.append((name, f"{s.reduction_pct:.1f}%", f"{s.avg_tetras:.1f}",
                     f"{s.barriers_pct:.1f}%", f"{s.tetra_retention_pct:.1f}"))
    widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
    return "\n".join(
        "  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths)))
        for r in rows
    )
