import logging
from collections.abc import Sequence
from itertools import pairwise

from kfrechet.enums import Axis
from kfrechet.freespace import axis_target
from kfrechet.schemas import Component, FreeSpaceDiagram, Interval, PrunedDiagram, Selection
from kfrechet.selection.cover import projected_intervals

logger = logging.getLogger(__name__)


def sole_coverers(
    intervals: Sequence[tuple[int, Interval]], target: Interval, tol: float
) -> set[int]:
    """Ids that are the only cover of some elementary piece of `target`.

    Elementary pieces lie between consecutive sorted endpoints; pieces no wider
    than tol are seams between adjacent cells and are skipped.
    """
    cuts = sorted(
        {target.lo, target.hi}
        | {
            x
            for _, interval in intervals
            for x in (interval.lo, interval.hi)
            if target.lo < x < target.hi
        }
    )
    found: set[int] = set()
    for a, b in pairwise(cuts):
        if b - a <= tol:
            continue
        coverers = [i for i, iv in intervals if iv.lo <= a + tol and iv.hi >= b - tol]
        if len(coverers) == 1:
            found.add(coverers[0])
    return found


def _box_contains(outer: Component, inner: Component, tol: float) -> bool:
    return outer.proj_p.contains_interval(inner.proj_p, tol) and outer.proj_q.contains_interval(
        inner.proj_q, tol
    )


def redundant_components(d: FreeSpaceDiagram) -> set[int]:
    """Components whose bounding box lies in another single component's box.

    Of two equal boxes the one with the larger id is redundant.
    """
    tol = d.tol
    redundant: set[int] = set()
    for inner in d.components:
        for outer in d.components:
            if outer.id == inner.id or not _box_contains(outer, inner, tol):
                continue
            if not _box_contains(inner, outer, tol) or outer.id < inner.id:
                redundant.add(inner.id)
                break
    return redundant


def preprocess(d: FreeSpaceDiagram) -> PrunedDiagram:
    necessary: set[int] = set()
    for axis in Axis:
        pairs = [(pi.component_id, pi.interval) for pi in projected_intervals(d, axis)]
        necessary |= sole_coverers(pairs, axis_target(d, axis), d.tol)
    redundant = redundant_components(d) - necessary

    logger.debug(
        f"Preprocessing: {len(necessary)} necessary, {len(redundant)} redundant "
        f"of {len(d.components)} components"
    )
    return PrunedDiagram(
        diagram=d, necessary=Selection.of(necessary), redundant=frozenset(redundant)
    )
