from collections.abc import Sequence
from itertools import combinations

from kfrechet.core.exceptions import OracleError
from kfrechet.core.settings import get_settings
from kfrechet.curves import interval_union_covers
from kfrechet.schemas import FreeSpaceDiagram, Interval, Selection
from kfrechet.selection import covers_both


def _check_size(count: int, what: str) -> None:
    limit = get_settings().oracle_max_intervals
    if count > limit:
        raise OracleError(f"{count} {what} exceed the exhaustive limit of {limit}")


def exhaustive_min_cover(
    intervals: Sequence[Interval], target: Interval, tol: float | None = None
) -> int | None:
    """Fewest intervals whose union covers `target`, over all subsets."""
    _check_size(len(intervals), "intervals")
    tol = get_settings().tol if tol is None else tol
    for size in range(1, len(intervals) + 1):
        if any(
            interval_union_covers(subset, target, tol)
            for subset in combinations(intervals, size)
        ):
            return size
    return None


def exhaustive_min_k(d: FreeSpaceDiagram) -> int | None:
    """Fewest components covering both parameter spaces, over all subsets."""
    _check_size(len(d.components), "components")
    ids = [c.id for c in d.components]
    for size in range(1, len(ids) + 1):
        if any(covers_both(d, Selection.of(subset)) for subset in combinations(ids, size)):
            return size
    return None
