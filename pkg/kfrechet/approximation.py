"""Greedy interval covers and the factor-2 approximation of the minimal k."""

import logging
from collections.abc import Sequence

from kfrechet.core.settings import get_settings
from kfrechet.enums import Axis
from kfrechet.freespace import axis_target
from kfrechet.schemas import FreeSpaceDiagram, Interval, ProjectedInterval, Selection
from kfrechet.selection import projected_intervals

logger = logging.getLogger(__name__)

__all__ = ["approximate_k", "axis_covers", "greedy_axis_cover", "projected_intervals"]


def greedy_axis_cover(
    intervals: Sequence[ProjectedInterval], target: Interval, tol: float | None = None
) -> Selection | None:
    """Minimum-cardinality cover of `target`, built left to right.

    From the current frontier take, among the intervals starting at or before it, the
    one reaching furthest (smaller id on ties). Optimal for a single line: after each
    step no smaller set covers a longer prefix.
    """
    tol = get_settings().tol if tol is None else tol
    frontier = target.lo
    chosen: list[int] = []
    while True:
        reachable = [pi for pi in intervals if pi.interval.lo <= frontier + tol]
        if not reachable:
            return None
        best = max(reachable, key=lambda pi: (pi.interval.hi, -pi.component_id))
        if chosen and best.interval.hi <= frontier:
            return None
        if not chosen and best.interval.hi < target.lo - tol:
            return None
        chosen.append(best.component_id)
        frontier = best.interval.hi
        if frontier >= target.hi - tol:
            return Selection.of(chosen)


def axis_covers(d: FreeSpaceDiagram) -> tuple[Selection | None, Selection | None]:
    """Greedy covers (S_P, S_Q) of the two parameter spaces."""
    cover_p, cover_q = (
        greedy_axis_cover(projected_intervals(d, axis), axis_target(d, axis), d.tol)
        for axis in (Axis.P, Axis.Q)
    )
    return cover_p, cover_q


def approximate_k(d: FreeSpaceDiagram) -> Selection | None:
    """S_P union S_Q: covers both axes with at most twice the optimal number of components."""
    cover_p, cover_q = axis_covers(d)
    if cover_p is None or cover_q is None:
        return None
    selection = cover_p.union(cover_q)
    logger.debug(
        f"Greedy covers: |S_P|={cover_p.size}, |S_Q|={cover_q.size}, union {selection.size}"
    )
    return selection
