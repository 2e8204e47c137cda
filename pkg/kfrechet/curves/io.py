"""Curve files: one vertex per line, or `{"vertices": [[x, y], ...]}`."""

import json
import logging
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from kfrechet.core.exceptions import CurveFormatError, summarize_validation_error
from kfrechet.enums import CurveFormat
from kfrechet.schemas import PolyCurve

logger = logging.getLogger(__name__)


def _text_points(text: str) -> list[tuple[float, float]]:
    points: list[tuple[float, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise CurveFormatError(f"line {lineno}: expected 2 numbers, found {len(fields)}")
        try:
            points.append((float(fields[0]), float(fields[1])))
        except ValueError:
            raise CurveFormatError(f"line {lineno}: malformed number in {line!r}") from None
    return points


def _json_points(text: str) -> list[Any]:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise CurveFormatError(f"invalid JSON: {e.msg} (line {e.lineno})") from None
    if not isinstance(document, dict) or not isinstance(document.get("vertices"), list):
        raise CurveFormatError('JSON curve must be an object with a "vertices" list')
    return list(document["vertices"])


def parse_curve(text: str) -> PolyCurve:
    """Parse either curve format; JSON is recognised by its leading `{`."""
    is_json = text.lstrip().startswith("{")
    raw = _json_points(text) if is_json else _text_points(text)
    if len(raw) < 2:
        raise CurveFormatError(f"a curve needs at least 2 vertices, found {len(raw)}")

    try:
        curve = PolyCurve.model_validate(
            {"vertices": [{"x": x, "y": y} for x, y in _pairs(raw)]}
        )
    except ValidationError as e:
        raise CurveFormatError(summarize_validation_error(e)) from None

    logger.debug(f"Parsed curve with {curve.segment_count} segments")
    return curve


def _pairs(raw: list[Any]) -> list[Any]:
    for index, pair in enumerate(raw):
        if not isinstance(pair, list | tuple) or len(pair) != 2:
            raise CurveFormatError(f"vertex {index} is not an [x, y] pair")
    return raw


def serialize_curve(curve: PolyCurve, fmt: CurveFormat = CurveFormat.TEXT) -> str:
    if fmt is CurveFormat.JSON:
        return json.dumps({"vertices": [list(point) for point in curve.points]})
    return "".join(f"{x!r} {y!r}\n" for x, y in curve.points)


def load_curve(path: Path) -> PolyCurve:
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError:
        raise CurveFormatError(f"{path} is not UTF-8 text") from None
    return parse_curve(text)
