import logging
from itertools import combinations

from kfrechet.core.exceptions import ParameterRangeError
from kfrechet.curves import interval_union_covers
from kfrechet.enums import Axis
from kfrechet.freespace import axis_target
from kfrechet.schemas import FreeSpaceDiagram, Selection
from kfrechet.selection.classic import decide_hausdorff
from kfrechet.selection.preprocess import preprocess

logger = logging.getLogger(__name__)


def decide_bruteforce(
    d: FreeSpaceDiagram, k: int, *, use_preprocessing: bool = True
) -> Selection | None:
    """Covering selection of at most k components, by enumeration.

    Necessary components are always taken; the remaining slots are filled from the
    non-redundant candidates by increasing size, in lexicographic id order, and the
    first covering selection is returned.
    """
    if k < 0:
        raise ParameterRangeError(f"k must be non-negative, got {k}")
    if not decide_hausdorff(d):
        return None

    if use_preprocessing:
        pruned = preprocess(d)
        seed = pruned.necessary.component_ids
        pool = [c.id for c in pruned.candidates if c.id not in seed]
    else:
        seed = ()
        pool = [c.id for c in d.components]
    if len(seed) > k:
        return None

    targets = {axis: axis_target(d, axis) for axis in Axis}
    projections = {axis: [c.projection(axis) for c in d.components] for axis in Axis}

    def covers(ids: tuple[int, ...]) -> bool:
        return all(
            interval_union_covers((projections[axis][i] for i in ids), targets[axis], d.tol)
            for axis in Axis
        )

    tried = 0
    for size in range(k - len(seed) + 1):
        for extra in combinations(pool, size):
            tried += 1
            if covers(seed + extra):
                logger.debug(f"Brute force found a cover after {tried} candidates")
                return Selection.of(seed + extra)
    logger.debug(f"Brute force exhausted {tried} candidates for k={k}")
    return None
