import math

import numpy as np
from numpy.typing import NDArray
from scipy.spatial.distance import cdist

from kfrechet.core.exceptions import ParameterRangeError
from kfrechet.core.settings import get_settings
from kfrechet.schemas import Point2, PolyCurve, Segment, Vec


def lerp(segment: Segment, u: float) -> Vec:
    (ax, ay), (bx, by) = segment
    return (ax + u * (bx - ax), ay + u * (by - ay))


def point_at(curve: PolyCurve, s: float) -> Point2:
    """Affine interpolation on segment floor(s); integer s lands on a vertex."""
    n = curve.segment_count
    tol = get_settings().tol
    if not -tol <= s <= n + tol:
        raise ParameterRangeError(f"parameter {s} outside [0, {n}]")
    s = min(max(s, 0.0), float(n))
    index = min(int(math.floor(s)), n - 1)
    x, y = lerp(curve.segments[index], s - index)
    return Point2(x=x, y=y)


def sample_curve(curve: PolyCurve, params: NDArray[np.float64]) -> NDArray[np.float64]:
    """Vectorized `point_at` for parameters already known to lie in [0, n]."""
    pts = np.asarray(curve.points, dtype=np.float64)
    n = curve.segment_count
    index = np.clip(np.floor(params).astype(np.int64), 0, n - 1)
    u = (params - index)[:, None]
    return pts[index] + u * (pts[index + 1] - pts[index])


def point_segment_distance(point: Vec, segment: Segment) -> float:
    (ax, ay), (bx, by) = segment
    px, py = point
    dx, dy = bx - ax, by - ay
    length_sq = dx * dx + dy * dy
    u = ((px - ax) * dx + (py - ay) * dy) / length_sq
    u = min(max(u, 0.0), 1.0)
    return math.hypot(ax + u * dx - px, ay + u * dy - py)


def point_segment_distance_matrix(
    points: NDArray[np.float64], curve: PolyCurve
) -> NDArray[np.float64]:
    """Distance from every row of `points` (axis 0) to every segment of `curve` (axis 1)."""
    pts = np.asarray(curve.points, dtype=np.float64)
    starts = pts[:-1]
    dirs = pts[1:] - starts
    length_sq = np.einsum("ij,ij->i", dirs, dirs)
    # (samples, segments, 2)
    rel = points[:, None, :] - starts[None, :, :]
    u = np.clip(np.einsum("sij,ij->si", rel, dirs) / length_sq, 0.0, 1.0)
    closest = starts[None, :, :] + u[:, :, None] * dirs[None, :, :]
    return np.asarray(np.linalg.norm(points[:, None, :] - closest, axis=2), dtype=np.float64)


def points_to_polyline_distances(
    points: NDArray[np.float64], curve: PolyCurve
) -> NDArray[np.float64]:
    """Exact distance from every row of `points` to the polyline `curve`."""
    return np.asarray(point_segment_distance_matrix(points, curve).min(axis=1), dtype=np.float64)


def max_segment_length(curve: PolyCurve) -> float:
    """Lipschitz constant of `point_at` with respect to the parameter."""
    return max(math.dist(a, b) for a, b in curve.segments)


def max_vertex_distance(p: PolyCurve, q: PolyCurve) -> float:
    """Largest vertex-to-vertex distance between the curves.

    Distance between points of two segments is convex over the cell, so no pair of
    points on the curves is farther apart than this; at this epsilon the whole
    diagram is free.
    """
    return float(cdist(np.asarray(p.points), np.asarray(q.points)).max())
