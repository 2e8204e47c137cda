"""Free space sampled on a pixel grid, labelled with 4-connectivity."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy import ndimage
from scipy.spatial.distance import cdist

from kfrechet.core.exceptions import ParameterRangeError
from kfrechet.core.settings import get_settings
from kfrechet.curves import max_segment_length, sample_curve
from kfrechet.freespace import build_diagram
from kfrechet.schemas import Interval, PolyCurve
from kfrechet.selection import decide_hausdorff, decide_weak_frechet

# Edge-sharing neighbours only; diagonal pixels are not adjacent.
_FOUR_CONNECTED = ndimage.generate_binary_structure(2, 1)


@dataclass(frozen=True)
class PixelFreeSpace:
    """bitmap[a, b] is True iff the centre of pixel (a, b) is free; a runs along P."""

    bitmap: NDArray[np.bool_]
    labels: NDArray[np.int32]
    component_count: int
    projections: tuple[tuple[Interval, Interval], ...]

    @property
    def covers_both_axes(self) -> bool:
        """Every row and every column holds a free pixel."""
        return bool(self.bitmap.any(axis=1).all() and self.bitmap.any(axis=0).all())

    @property
    def spans_all_sides(self) -> bool:
        """One component reaches the first and last row and column."""
        sides = (self.labels[0, :], self.labels[-1, :], self.labels[:, 0], self.labels[:, -1])
        reaching = [set(np.unique(side)) - {0} for side in sides]
        return bool(set.intersection(*reaching))


def pixel_freespace(
    p: PolyCurve, q: PolyCurve, eps: float, res: int | None = None
) -> PixelFreeSpace:
    res = get_settings().pixel_resolution if res is None else res
    if res < 16:
        raise ParameterRangeError(f"resolution must be at least 16, got {res}")
    n, m = p.segment_count, q.segment_count
    hs, ht = n / res, m / res

    p_samples = sample_curve(p, (np.arange(res) + 0.5) * hs)
    q_samples = sample_curve(q, (np.arange(res) + 0.5) * ht)
    bitmap = cdist(p_samples, q_samples) <= eps
    labels, count = ndimage.label(bitmap, structure=_FOUR_CONNECTED)

    projections = tuple(
        (
            Interval(lo=box[0].start * hs, hi=box[0].stop * hs),
            Interval(lo=box[1].start * ht, hi=box[1].stop * ht),
        )
        for box in ndimage.find_objects(labels)
        if box is not None
    )
    return PixelFreeSpace(
        bitmap=bitmap,
        labels=labels.astype(np.int32),
        component_count=int(count),
        projections=projections,
    )


def pixel_error_bound(p: PolyCurve, q: PolyCurve, res: int) -> float:
    """How far the distance can change between neighbouring pixel centres."""
    return (
        max_segment_length(p) * p.segment_count / res
        + max_segment_length(q) * q.segment_count / res
    )


def pixel_comparable(p: PolyCurve, q: PolyCurve, eps: float, res: int | None = None) -> bool:
    """True iff the exact diagram looks the same at eps - bound and eps + bound.

    Only then must the pixel labelling at eps agree with the exact diagram at eps on
    component count and on the weak and Hausdorff decisions.
    """
    res = get_settings().pixel_resolution if res is None else res
    bound = pixel_error_bound(p, q, res)
    if eps - bound < 0:
        return False
    lo, hi = build_diagram(p, q, eps - bound), build_diagram(p, q, eps + bound)
    if len(lo.components) != len(hi.components):
        return False
    if decide_weak_frechet(lo) != decide_weak_frechet(hi):
        return False
    if decide_hausdorff(lo) != decide_hausdorff(hi):
        return False
    # Every lower component lies inside one upper component.
    upper = hi.component_of()
    images = {upper[min(c.cells)] for c in lo.components}
    return len(images) == len(lo.components)
