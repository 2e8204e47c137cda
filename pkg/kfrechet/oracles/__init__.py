"""Brute-force and sampling oracles for checking the exact algorithms.

Not imported by `kfrechet` itself.
"""

from .corpus import random_curve, random_curve_pair, zigzag_curve
from .covers import exhaustive_min_cover, exhaustive_min_k
from .hausdorff import hausdorff_sampling_bound, sampled_hausdorff
from .pixels import PixelFreeSpace, pixel_comparable, pixel_error_bound, pixel_freespace

__all__ = [
    "PixelFreeSpace",
    "exhaustive_min_cover",
    "exhaustive_min_k",
    "hausdorff_sampling_bound",
    "pixel_comparable",
    "pixel_error_bound",
    "pixel_freespace",
    "random_curve",
    "random_curve_pair",
    "sampled_hausdorff",
    "zigzag_curve",
]
