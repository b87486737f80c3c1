"""Command-line driver.

Exit codes: 0 ok, 1 bad arguments or malformed input files, 2 invalid mesh,
3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .criteria import CRITERIA, DEFAULT_EPS
from .io import (MeshFormatError, generate_kuhn_grid, load_node_ele, read_stats_json,
                 write_polymesh_vtk, write_stats_json)
from .mesh import MeshError, build_from_tets
from .metrics import StatsRecord, format_summary, format_table, summarize
from .pipeline import convert
from .repair import REPAIR_MODES

EXIT_OK, EXIT_USAGE, EXIT_MESH, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    node: str | None = None
    ele: str | None = None
    grid: int | None = None
    spacing: float = 1.0
    criterion: str = "area"
    repair: str = "split"
    out: str | None = None
    stats: str | None = None
    epsilon: float = DEFAULT_EPS
    threads: int = 0
    timing: bool = True

    def validate(self) -> None:
        has_files = self.node is not None or self.ele is not None
        if has_files == (self.grid is not None):
            raise UsageError("give exactly one input: --node/--ele or --grid")
        if has_files and (self.node is None or self.ele is None):
            raise UsageError("--node and --ele must be given together")
        if self.criterion not in CRITERIA:
            raise UsageError(f"unknown criterion {self.criterion!r}")
        if self.repair not in REPAIR_MODES:
            raise UsageError(f"unknown repair mode {self.repair!r}")

    @property
    def workers(self) -> int:
        return self.threads if self.threads > 0 else (os.cpu_count() or 1)


def cmd_convert(cfg: RunConfig) -> int:
    try:
        cfg.validate()
    except UsageError as exc:
        print(f"tet2poly convert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if cfg.grid is not None:
            positions, tets = generate_kuhn_grid(cfg.grid, cfg.spacing)
        else:
            positions, tets = load_node_ele(cfg.node, cfg.ele)
    except MeshFormatError as exc:
        print(f"tet2poly convert: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"tet2poly convert: {exc}", file=sys.stderr)
        return EXIT_IO if isinstance(exc, OSError) else EXIT_USAGE
    try:
        mesh = build_from_tets(positions, tets)
    except MeshError as exc:
        print(f"tet2poly convert: invalid mesh: {exc}", file=sys.stderr)
        return EXIT_MESH

    res = convert(mesh, cfg.criterion, cfg.repair, cfg.epsilon, cfg.workers)
    stats = res.stats
    if not cfg.timing:
        stats.time_ms = 0.0
    try:
        if cfg.out:
            write_polymesh_vtk(res.polymesh, cfg.out)
        if cfg.stats:
            write_stats_json([stats], cfg.stats)
    except OSError as exc:
        print(f"tet2poly convert: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        # --repair none leaves non-simple cells that VTK cannot hold
        print(f"tet2poly convert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for note in res.polymesh.notes:
        logging.getLogger("tet2poly").info(note)
    print(f"P={stats.P} P_raw={stats.P_raw} "
          f"reduction={100 * (1 - stats.P / stats.T):.1f}% time={res.stats.time_ms:.1f}ms")
    return EXIT_OK


def cmd_stats(paths: list[str], rows: bool = False) -> int:
    if not paths:
        print("tet2poly stats: error: no stats files given", file=sys.stderr)
        return EXIT_USAGE
    named = []
    all_rows = []
    for p in paths:
        try:
            data = read_stats_json(p)
            if not data:
                raise ValueError(f"{p}: no records")
            named.append((Path(p).stem, summarize(data)))
            if rows:
                all_rows.extend(StatsRecord.from_dict(d) for d in data)
        except OSError as exc:
            print(f"tet2poly stats: {exc}", file=sys.stderr)
            return EXIT_IO
        except (json.JSONDecodeError, ValueError, TypeError, ZeroDivisionError) as exc:
            print(f"tet2poly stats: malformed stats file {p}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if rows:
        print(format_table(all_rows))
        print()
    print(format_summary(named))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tet2poly", description="Polyhedral meshes from tetrahedral meshes.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("convert", help="convert a tetrahedral mesh")
    c.add_argument("--node")
    c.add_argument("--ele")
    c.add_argument("--grid", type=int, metavar="N", help="built-in N^3 Kuhn grid")
    c.add_argument("--spacing", type=float, default=1.0)
    c.add_argument("--criterion", choices=sorted(CRITERIA), default="area")
    c.add_argument("--repair", choices=REPAIR_MODES, default="split")
    c.add_argument("--out", metavar="PATH", help="legacy VTK polyhedral mesh")
    c.add_argument("--stats", metavar="PATH", help="stats JSON")
    c.add_argument("--epsilon", type=float, default=DEFAULT_EPS, help="relative tie tolerance")
    c.add_argument("--threads", type=int, default=0, help="worker threads (0 = all cores)")
    c.add_argument("--no-timing", dest="timing", action="store_false",
                   help="write time_ms as 0 so stats files are reproducible")

    s = sub.add_parser("stats", help="summarize stats JSON files, one row per file")
    s.add_argument("files", nargs="*")
    s.add_argument("--rows", action="store_true", help="also print every record")
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "convert":
        cfg = RunConfig(**{k: v for k, v in vars(args).items()
                           if k not in ("command", "verbose")})
        return cmd_convert(cfg)
    return cmd_stats(args.files, args.rows)


if __name__ == "__main__":
    sys.exit(main())
