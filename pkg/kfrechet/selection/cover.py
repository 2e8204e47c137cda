from collections.abc import Iterable

from kfrechet.core.exceptions import SelectionError
from kfrechet.curves import interval_union_covers
from kfrechet.enums import Axis
from kfrechet.freespace import axis_target
from kfrechet.schemas import FreeSpaceDiagram, MatchedPiece, ProjectedInterval, Selection


def projected_intervals(d: FreeSpaceDiagram, axis: Axis) -> list[ProjectedInterval]:
    """One interval per component, in component id order."""
    return [
        ProjectedInterval(component_id=c.id, axis=axis, interval=c.projection(axis))
        for c in d.components
    ]


def _check_known(d: FreeSpaceDiagram, ids: Iterable[int]) -> None:
    unknown = sorted(i for i in ids if not 0 <= i < len(d.components))
    if unknown:
        raise SelectionError(
            f"unknown component ids {unknown}; the diagram has {len(d.components)} components"
        )


def covers_axis(d: FreeSpaceDiagram, ids: Iterable[int], axis: Axis) -> bool:
    return interval_union_covers(
        (d.component(i).projection(axis) for i in ids), axis_target(d, axis), d.tol
    )


def covers_both(d: FreeSpaceDiagram, s: Selection) -> bool:
    """True iff the selected components' projections cover [0, n] and [0, m]."""
    _check_known(d, s.component_ids)
    return all(covers_axis(d, s.component_ids, axis) for axis in Axis)


def selection_pieces(d: FreeSpaceDiagram, s: Selection) -> list[MatchedPiece]:
    """The pair of subcurves each selected component matches to one another.

    Every point of a component connects its P-part to its Q-part, so the two pieces
    are within weak Fréchet distance eps of each other.
    """
    _check_known(d, s.component_ids)
    return [
        MatchedPiece(
            component_id=i,
            p_interval=d.component(i).proj_p,
            q_interval=d.component(i).proj_q,
        )
        for i in s.component_ids
    ]
