from .geometry import (
    lerp,
    max_segment_length,
    max_vertex_distance,
    point_at,
    point_segment_distance,
    point_segment_distance_matrix,
    points_to_polyline_distances,
    sample_curve,
)
from .intervals import clip_unit, interval_union_covers
from .io import load_curve, parse_curve, serialize_curve

__all__ = [
    "clip_unit",
    "interval_union_covers",
    "lerp",
    "load_curve",
    "max_segment_length",
    "max_vertex_distance",
    "parse_curve",
    "point_at",
    "point_segment_distance",
    "point_segment_distance_matrix",
    "points_to_polyline_distances",
    "sample_curve",
    "serialize_curve",
]
