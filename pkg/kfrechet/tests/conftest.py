"""Shared fixtures for the kfrechet suite.

Settings are cached per process by `get_settings`; every test starts and ends with
an empty cache so an environment override in one test cannot leak into the next.
"""

from collections.abc import Callable, Iterator
from pathlib import Path

import numpy as np
import pytest

from kfrechet.core.settings import get_settings
from kfrechet.curves import serialize_curve
from kfrechet.schemas import PolyCurve


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    for name in ("KFRECHET_TOL", "KFRECHET_LOG_LEVEL", "KFRECHET_SEARCH_TOL"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def unit_p() -> PolyCurve:
    return PolyCurve.from_points([(0.0, 0.0), (1.0, 0.0)])


@pytest.fixture
def unit_q() -> PolyCurve:
    """Parallel to `unit_p` at distance 1; at eps = 1 the free space is the diagonal."""
    return PolyCurve.from_points([(0.0, 1.0), (1.0, 1.0)])


@pytest.fixture
def u_shape() -> PolyCurve:
    return PolyCurve.from_points([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])


@pytest.fixture
def two_crossings() -> tuple[PolyCurve, PolyCurve]:
    """Q dips below P twice; at eps = 0.5 only the two crossings are free."""
    p = PolyCurve.from_points([(0.0, 0.0), (4.0, 0.0)])
    q = PolyCurve.from_points([(0.0, 1.0), (1.0, -1.0), (3.0, -1.0), (4.0, 1.0)])
    return p, q


WriteCurve = Callable[[str, PolyCurve], Path]


@pytest.fixture
def write_curve(tmp_path: Path) -> WriteCurve:
    def _write(name: str, curve: PolyCurve) -> Path:
        path = tmp_path / name
        path.write_text(serialize_curve(curve), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def hooks() -> tuple[PolyCurve, PolyCurve]:
    """Two C-shapes over the same pair of rails, bent on opposite sides.

    At eps = 0.6 the lower rails and the upper rails match in two separate
    components; together they cover both curves, neither does alone.
    """
    p = PolyCurve.from_points([(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (0.0, 1.0)])
    q = PolyCurve.from_points([(2.0, 0.0), (0.0, 0.0), (0.0, 1.0), (2.0, 1.0)])
    return p, q
