from collections.abc import Sequence

from kfrechet.enums import Axis
from kfrechet.schemas import Component, FreeSpaceDiagram, Interval


def stabbing_number(intervals: Sequence[Interval], tol: float) -> int:
    """Max number of closed intervals containing a single position.

    Counts at every endpoint and every endpoint shifted by tol, which is where the
    count can change.
    """
    positions = {
        endpoint + shift
        for interval in intervals
        for endpoint in (interval.lo, interval.hi)
        for shift in (-tol, 0.0, tol)
    }
    return max(
        (sum(1 for interval in intervals if interval.lo <= x <= interval.hi) for x in positions),
        default=0,
    )


def components_stabbing_number(components: Sequence[Component], tol: float) -> int:
    return max(
        stabbing_number([c.projection(axis) for c in components], tol) for axis in Axis
    )


def compute_z(d: FreeSpaceDiagram) -> int:
    """Neighbourhood complexity: the most components one axis-parallel line can meet."""
    return components_stabbing_number(d.components, d.tol)
