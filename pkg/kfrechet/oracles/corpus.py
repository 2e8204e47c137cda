"""Random and hand-shaped curves for property checks."""

import numpy as np

from kfrechet.schemas import PolyCurve


def random_curve(rng: np.random.Generator, segments: int, scale: float = 1.0) -> PolyCurve:
    """Vertices drawn uniformly from [0, scale]^2."""
    while True:
        points = rng.uniform(0.0, scale, size=(segments + 1, 2))
        if np.all(np.any(np.diff(points, axis=0) != 0.0, axis=1)):
            return PolyCurve.from_points((x, y) for x, y in points.tolist())


def random_curve_pair(
    rng: np.random.Generator,
    min_segments: int = 2,
    max_segments: int = 6,
    scale: float = 1.0,
) -> tuple[PolyCurve, PolyCurve]:
    n, m = rng.integers(min_segments, max_segments + 1, size=2)
    return random_curve(rng, int(n), scale), random_curve(rng, int(m), scale)


def zigzag_curve(segments: int, amplitude: float = 1.0, step: float = 1.0) -> PolyCurve:
    """Vertices alternate between y = 0 and y = amplitude while x advances by step."""
    return PolyCurve.from_points(
        (i * step, amplitude * (i % 2)) for i in range(segments + 1)
    )
