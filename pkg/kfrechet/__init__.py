"""Free space diagrams and the k-Fréchet distance for planar polygonal curves."""

from kfrechet.approximation import approximate_k, axis_covers, greedy_axis_cover
from kfrechet.curves import interval_union_covers, load_curve, parse_curve, point_at
from kfrechet.freespace import build_diagram, cell_axis_projection, cell_edge_interval, compute_z
from kfrechet.schemas import Interval, PolyCurve, Selection
from kfrechet.search import (
    candidate_epsilons,
    find_min_k,
    frechet_distance,
    hausdorff_distance,
    k_frechet_distance,
    minimize_epsilon,
    minimize_k,
    weak_frechet_distance,
)
from kfrechet.selection import (
    covers_both,
    decide_bruteforce,
    decide_fpt,
    decide_hausdorff,
    decide_strong_frechet,
    decide_weak_frechet,
    preprocess,
)

__all__ = [
    "Interval",
    "PolyCurve",
    "Selection",
    "approximate_k",
    "axis_covers",
    "build_diagram",
    "candidate_epsilons",
    "cell_axis_projection",
    "cell_edge_interval",
    "compute_z",
    "covers_both",
    "decide_bruteforce",
    "decide_fpt",
    "decide_hausdorff",
    "decide_strong_frechet",
    "decide_weak_frechet",
    "find_min_k",
    "frechet_distance",
    "greedy_axis_cover",
    "hausdorff_distance",
    "interval_union_covers",
    "k_frechet_distance",
    "load_curve",
    "minimize_epsilon",
    "minimize_k",
    "parse_curve",
    "point_at",
    "preprocess",
    "weak_frechet_distance",
]
