"""Free space of a single cell, i.e. of one segment of P against one segment of Q.

Within a cell the free space is an ellipse clipped to the unit square, hence convex:
every edge and every axis projection is a single interval.
"""

import math

from kfrechet.core.settings import get_settings
from kfrechet.curves import clip_unit
from kfrechet.enums import Axis, Edge
from kfrechet.schemas import Interval, Segment, Vec, hull_of


def _quadratic_range(a: float, b: float, c: float, tol: float) -> tuple[float, float] | None:
    """Solutions of a*u^2 + 2*b*u + c <= 0 for a > 0."""
    disc = b * b - a * c
    if disc < 0.0:
        if disc < -tol:
            return None
        disc = 0.0
    root = math.sqrt(disc)
    # Stable form: never subtract nearly equal quantities.
    q = -(b + math.copysign(root, b))
    if q == 0.0:
        return (0.0, 0.0)
    first, second = q / a, c / q
    return (min(first, second), max(first, second))


def point_segment_interval(point: Vec, segment: Segment, eps: float, tol: float) -> Interval | None:
    """Local parameters u in [0, 1] with |segment(u) - point| <= eps."""
    (ax, ay), (bx, by) = segment
    dx, dy = bx - ax, by - ay
    vx, vy = ax - point[0], ay - point[1]
    roots = _quadratic_range(
        dx * dx + dy * dy,
        vx * dx + vy * dy,
        vx * vx + vy * vy - eps * eps,
        tol,
    )
    if roots is None:
        return None
    return clip_unit(*roots, tol)


def cell_edge_interval(
    seg_p: Segment, seg_q: Segment, eps: float, edge: Edge, tol: float | None = None
) -> Interval | None:
    """Free part of one cell edge in the edge's own [0, 1] parameter.

    Left and right edges fix an endpoint of the P segment and let t run along Q;
    bottom and top fix an endpoint of Q and let s run along P.
    """
    tol = get_settings().tol if tol is None else tol
    match edge:
        case Edge.LEFT:
            return point_segment_interval(seg_p[0], seg_q, eps, tol)
        case Edge.RIGHT:
            return point_segment_interval(seg_p[1], seg_q, eps, tol)
        case Edge.BOTTOM:
            return point_segment_interval(seg_q[0], seg_p, eps, tol)
        case Edge.TOP:
            return point_segment_interval(seg_q[1], seg_p, eps, tol)


def _linear_range(
    c0: float, c1: float, lo: float, hi: float, tol: float
) -> tuple[float, float] | None:
    """Solutions of lo <= c0 + c1*u <= hi over the whole real line."""
    if abs(c1) <= tol:
        return (-math.inf, math.inf) if lo - tol <= c0 <= hi + tol else None
    first, second = (lo - c0) / c1, (hi - c0) / c1
    return (min(first, second), max(first, second))


def _strip_interval(moving: Segment, fixed: Segment, eps: float, tol: float) -> Interval | None:
    """Parameters of `moving` whose foot point on `fixed` is interior and within eps."""
    (f0x, f0y), (f1x, f1y) = fixed
    (m0x, m0y), (m1x, m1y) = moving
    ex, ey = f1x - f0x, f1y - f0y
    e_sq = ex * ex + ey * ey
    e_len = math.sqrt(e_sq)
    wx, wy = m0x - f0x, m0y - f0y
    dx, dy = m1x - m0x, m1y - m0y

    along = _linear_range((wx * ex + wy * ey) / e_sq, (dx * ex + dy * ey) / e_sq, 0.0, 1.0, tol)
    across = _linear_range((ex * wy - ey * wx) / e_len, (ex * dy - ey * dx) / e_len, -eps, eps, tol)
    if along is None or across is None:
        return None
    return clip_unit(max(along[0], across[0]), min(along[1], across[1]), tol)


def segment_reach_interval(
    moving: Segment, fixed: Segment, eps: float, tol: float
) -> Interval | None:
    """Parameters of `moving` within eps of the segment `fixed`.

    The eps-neighbourhood of a segment is a stadium: two endpoint discs joined by a
    strip. It is convex, so the union of the three pieces is one interval.
    """
    return hull_of(
        (
            point_segment_interval(fixed[0], moving, eps, tol),
            point_segment_interval(fixed[1], moving, eps, tol),
            _strip_interval(moving, fixed, eps, tol),
        )
    )


def cell_axis_projection(
    seg_p: Segment, seg_q: Segment, eps: float, axis: Axis, tol: float | None = None
) -> Interval | None:
    """Projection of the cell's free space onto one local axis."""
    tol = get_settings().tol if tol is None else tol
    if axis is Axis.P:
        return segment_reach_interval(seg_p, seg_q, eps, tol)
    return segment_reach_interval(seg_q, seg_p, eps, tol)
