"""Polyhedral meshes from tetrahedral meshes via terminal-face regions."""

__version__ = "0.1.0"

from .criteria import AREA_MAX, CRITERIA, INCIRCLE_MAX, JoiningCriterion, largest_face, rank_faces
from .labeling import FaceLabels, classify_face, label
from .mesh import MeshError, TetMesh, build_from_tets
from .metrics import StatsRecord, SummaryRecord, collect_stats, summarize, voronoi_dual_counts
from .pipeline import ConversionResult, convert
from .repair import (BarrierTip, dissolve_barriers, find_barrier_tips, repair_all,
                     split_polyhedron)
from .traversal import PolyMesh, Polyhedron, build_polyhedron, lfpp, regions_by_lfpp, traverse_all
from .io import (MeshFormatError, generate_kuhn_grid, load_node_ele, read_node_ele, write_node_ele,
                 write_polymesh_vtk, write_stats_json)
