import numpy as np

from kfrechet.core.exceptions import ParameterRangeError
from kfrechet.core.settings import get_settings
from kfrechet.curves import max_segment_length, points_to_polyline_distances, sample_curve
from kfrechet.schemas import PolyCurve


def _directed(source: PolyCurve, target: PolyCurve, samples: int) -> float:
    params = np.linspace(0.0, float(source.segment_count), samples)
    return float(points_to_polyline_distances(sample_curve(source, params), target).max())


def sampled_hausdorff(p: PolyCurve, q: PolyCurve, samples: int | None = None) -> float:
    """Symmetric Hausdorff distance from `samples` parameter values per curve.

    The inner minimum is exact; only the outer maximum is sampled, so the result
    never exceeds the true distance by more than rounding and falls short by at most
    `hausdorff_sampling_bound`.
    """
    samples = get_settings().hausdorff_samples if samples is None else samples
    if samples < 100:
        raise ParameterRangeError(f"need at least 100 samples, got {samples}")
    return max(_directed(p, q, samples), _directed(q, p, samples))


def hausdorff_sampling_bound(p: PolyCurve, q: PolyCurve, samples: int) -> float:
    spacing = max(
        max_segment_length(p) * p.segment_count, max_segment_length(q) * q.segment_count
    ) / (samples - 1)
    return spacing / 2.0
