from collections.abc import Iterable
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, model_validator

type Vec = tuple[float, float]
type Segment = tuple[Vec, Vec]


class Point2(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: FiniteFloat
    y: FiniteFloat

    def as_tuple(self) -> Vec:
        return (self.x, self.y)


class Interval(BaseModel):
    """Closed interval, possibly a single point.

    The empty interval is represented as `None` by every operation that can
    produce one.
    """

    model_config = ConfigDict(frozen=True)

    lo: FiniteFloat
    hi: FiniteFloat

    @model_validator(mode="after")
    def _ordered(self) -> Self:
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: [{self.lo}, {self.hi}]")
        return self

    def contains(self, value: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= value <= self.hi + tol

    def contains_interval(self, other: "Interval", tol: float = 0.0) -> bool:
        return self.lo <= other.lo + tol and other.hi <= self.hi + tol


def hull_of(intervals: Iterable[Interval | None]) -> Interval | None:
    """Smallest interval containing every nonempty input; None if all are empty."""
    present = [iv for iv in intervals if iv is not None]
    if not present:
        return None
    return Interval(lo=min(iv.lo for iv in present), hi=max(iv.hi for iv in present))


class PolyCurve(BaseModel):
    """Polygonal curve with n = len(vertices) - 1 segments over parameter space [0, n]."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[Point2, ...] = Field(min_length=2)

    @model_validator(mode="after")
    def _no_zero_length_segments(self) -> Self:
        for index, (a, b) in enumerate(zip(self.vertices, self.vertices[1:], strict=False)):
            if a == b:
                raise ValueError(
                    f"zero-length segment: vertices {index} and {index + 1} are both "
                    f"({a.x}, {a.y})"
                )
        return self

    @classmethod
    def from_points(cls, points: Iterable[tuple[float, float]]) -> "PolyCurve":
        return cls(vertices=tuple(Point2(x=x, y=y) for x, y in points))

    @property
    def segment_count(self) -> int:
        return len(self.vertices) - 1

    @property
    def points(self) -> tuple[Vec, ...]:
        return tuple(v.as_tuple() for v in self.vertices)

    @property
    def segments(self) -> tuple[Segment, ...]:
        pts = self.points
        return tuple(zip(pts, pts[1:], strict=False))

    def reversed(self) -> "PolyCurve":
        return PolyCurve(vertices=self.vertices[::-1])
