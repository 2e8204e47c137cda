from collections.abc import Iterable

from kfrechet.core.exceptions import ParameterRangeError
from kfrechet.schemas import Interval


def interval_union_covers(intervals: Iterable[Interval], target: Interval, gap_tol: float) -> bool:
    """True iff the union of `intervals` covers `target` up to gaps of width `gap_tol`.

    An empty union covers nothing, not even a degenerate target.
    """
    if gap_tol < 0:
        raise ParameterRangeError(f"gap_tol must be non-negative, got {gap_tol}")

    reach: float | None = None
    for interval in sorted(intervals, key=lambda iv: (iv.lo, iv.hi)):
        if interval.hi < target.lo - gap_tol:
            continue
        start = target.lo if reach is None else reach
        if interval.lo > start + gap_tol:
            return False
        reach = interval.hi if reach is None else max(reach, interval.hi)
        if reach >= target.hi - gap_tol:
            return True
    return False


def clip_unit(lo: float, hi: float, tol: float) -> Interval | None:
    """[lo, hi] intersected with [0, 1]; endpoints within `tol` outside still count."""
    if lo > hi or hi < -tol or lo > 1.0 + tol:
        return None
    lo = min(max(lo, 0.0), 1.0)
    hi = max(min(hi, 1.0), 0.0)
    return Interval(lo=lo, hi=hi)
