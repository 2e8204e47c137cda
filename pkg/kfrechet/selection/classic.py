"""Decisions for the classic distances, read off one free space diagram."""

from kfrechet.enums import Axis
from kfrechet.schemas import FreeSpaceDiagram, Interval
from kfrechet.selection.cover import covers_axis


def decide_hausdorff(d: FreeSpaceDiagram) -> bool:
    """All components together cover both parameter spaces."""
    ids = [c.id for c in d.components]
    return bool(ids) and all(covers_axis(d, ids, axis) for axis in Axis)


def decide_weak_frechet(d: FreeSpaceDiagram) -> bool:
    """A single component reaches all four sides of the diagram."""
    return any(c.touches.all_four for c in d.components)


def _from_below(edge: Interval | None, entry: Interval | None, tol: float) -> Interval | None:
    """Part of `edge` reachable monotonically from `entry` on the opposite edge."""
    if edge is None or entry is None:
        return None
    if entry.lo > edge.hi + tol:
        return None
    return Interval(lo=min(max(edge.lo, entry.lo), edge.hi), hi=edge.hi)


def decide_strong_frechet(d: FreeSpaceDiagram) -> bool:
    """Monotone path from (0, 0) to (n, m) through free space.

    Propagates the reachable parts of the left edge (LR) and bottom edge (BR) of every
    cell, column by column.
    """
    n, m, tol = d.n, d.m, d.tol
    first, last = d.cell(0, 0), d.cell(n - 1, m - 1)
    if first.left is None or first.left.lo > tol:
        return False
    if last.right is None or last.right.hi < 1.0 - tol:
        return False

    reach_left: dict[tuple[int, int], Interval | None] = {}
    reach_bottom: dict[tuple[int, int], Interval | None] = {}

    # Along the outer boundary a path can only slide while the previous edge is free
    # to its far end and the next one starts free.
    previous: Interval | None = Interval(lo=0.0, hi=1.0)
    for j in range(m):
        left = d.cell(0, j).left
        ok = previous is not None and previous.hi >= 1.0 - tol and left is not None
        previous = left if ok and left is not None and left.lo <= tol else None
        reach_left[(0, j)] = previous
    previous = Interval(lo=0.0, hi=1.0)
    for i in range(n):
        bottom = d.cell(i, 0).bottom
        ok = previous is not None and previous.hi >= 1.0 - tol and bottom is not None
        previous = bottom if ok and bottom is not None and bottom.lo <= tol else None
        reach_bottom[(i, 0)] = previous

    for i in range(n):
        for j in range(m):
            cell = d.cell(i, j)
            lr, br = reach_left[(i, j)], reach_bottom[(i, j)]
            right_out = cell.right if br is not None else _from_below(cell.right, lr, tol)
            top_out = cell.top if lr is not None else _from_below(cell.top, br, tol)
            if i + 1 < n:
                reach_left[(i + 1, j)] = right_out
            if j + 1 < m:
                reach_bottom[(i, j + 1)] = top_out
            if (i, j) == (n - 1, m - 1):
                return any(
                    out is not None and out.hi >= 1.0 - tol for out in (right_out, top_out)
                )
    return False
