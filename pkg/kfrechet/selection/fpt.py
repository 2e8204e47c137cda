"""Bounded search trees over one axis at a time.

A node's children are the components active at its frontier that strictly extend
it. Following any root-to-leaf path covers the axis; at most z children per node and
depth at most k bound each tree by z^k paths.
"""

import logging
from collections.abc import Iterator, Sequence

from kfrechet.core.exceptions import ParameterRangeError
from kfrechet.enums import Axis
from kfrechet.schemas import FreeSpaceDiagram, ProjectedInterval, SearchTreeNode, Selection
from kfrechet.selection.cover import projected_intervals

logger = logging.getLogger(__name__)


def _children(
    intervals: Sequence[ProjectedInterval], frontier: float, tol: float
) -> list[ProjectedInterval]:
    return [
        pi
        for pi in intervals
        if pi.interval.lo <= frontier + tol and pi.interval.hi > frontier + tol
    ]


def iter_feasible_paths(d: FreeSpaceDiagram, axis: Axis, k: int) -> Iterator[tuple[int, ...]]:
    """Component chains of length at most k that cover one axis, depth first."""
    if k <= 0:
        return
    intervals = projected_intervals(d, axis)
    length, tol = d.axis_length(axis), d.tol

    def walk(path: tuple[int, ...], frontier: float) -> Iterator[tuple[int, ...]]:
        for pi in _children(intervals, frontier, tol):
            chain = (*path, pi.component_id)
            if pi.interval.hi >= length - tol:
                yield chain
            elif len(chain) < k:
                yield from walk(chain, pi.interval.hi)

    yield from walk((), 0.0)


def feasible_selections(d: FreeSpaceDiagram, axis: Axis, k: int) -> list[Selection]:
    """Sorted, duplicate-free selections read off the feasible paths of one tree."""
    unique = {Selection.of(path) for path in iter_feasible_paths(d, axis, k)}
    return sorted(unique, key=lambda s: s.component_ids)


def build_search_tree(d: FreeSpaceDiagram, axis: Axis, k: int) -> SearchTreeNode:
    """The search tree of one axis as nodes, for inspection and rendering."""
    intervals = projected_intervals(d, axis)
    length, tol = d.axis_length(axis), d.tol

    def grow(pi: ProjectedInterval, depth: int) -> SearchTreeNode:
        frontier = pi.interval.hi
        if frontier >= length - tol:
            return SearchTreeNode(
                component_id=pi.component_id, depth=depth, frontier=frontier, feasible=True
            )
        children = (
            tuple(grow(child, depth + 1) for child in _children(intervals, frontier, tol))
            if depth < k
            else ()
        )
        return SearchTreeNode(
            component_id=pi.component_id, depth=depth, frontier=frontier, children=children
        )

    roots = tuple(grow(pi, 1) for pi in _children(intervals, 0.0, tol)) if k > 0 else ()
    return SearchTreeNode(component_id=None, depth=0, frontier=0.0, children=roots)


def decide_fpt(d: FreeSpaceDiagram, k: int) -> Selection | None:
    """Lexicographically smallest union of one P-path and one Q-path with at most k ids."""
    if k < 0:
        raise ParameterRangeError(f"k must be non-negative, got {k}")
    if k == 0:
        return None

    selections_p = [s for s in feasible_selections(d, Axis.P, k) if s.size <= k]
    selections_q = [s for s in feasible_selections(d, Axis.Q, k) if s.size <= k]
    logger.debug(
        f"FPT at k={k}: {len(selections_p)} P-selections, {len(selections_q)} Q-selections"
    )

    best: Selection | None = None
    for sp in selections_p:
        for sq in selections_q:
            union = sp.union(sq)
            if union.size <= k and (best is None or union.component_ids < best.component_ids):
                best = union
    return best
