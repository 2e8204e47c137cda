from .cells import cell_axis_projection, cell_edge_interval, point_segment_interval
from .diagram import axis_target, build_diagram, free_cells
from .neighborhood import compute_z, stabbing_number
from .unionfind import DisjointSet

__all__ = [
    "DisjointSet",
    "axis_target",
    "build_diagram",
    "cell_axis_projection",
    "cell_edge_interval",
    "compute_z",
    "free_cells",
    "point_segment_interval",
    "stabbing_number",
]
