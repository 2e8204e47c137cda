"""JSON documents the CLI prints. Field names are the wire format."""

from pydantic import BaseModel, ConfigDict


class Report(BaseModel):
    model_config = ConfigDict(frozen=True)

    answer: bool


class DecideReport(Report):
    selection: list[int] | None
    components: int
    z: int


class MinimizeKReport(Report):
    k: int | None
    selection: list[int] | None
    components: int
    z: int


class MinimizeEpsilonReport(Report):
    epsilon: float
    k: int
    selection: list[int] | None


class SvgReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    out: str
    components: int


class BoxGenReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    out: str
    boxes: int
    k: int


class BoxSolveReport(Report):
    k: int
    selection: list[int] | None
