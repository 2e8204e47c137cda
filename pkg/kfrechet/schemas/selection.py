from collections.abc import Iterable
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from kfrechet.enums import Axis
from kfrechet.schemas.curve import Interval
from kfrechet.schemas.freespace import Component, FreeSpaceDiagram


class Selection(BaseModel):
    """A set of component ids, kept sorted so selections compare lexicographically."""

    model_config = ConfigDict(frozen=True)

    component_ids: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _sorted_and_unique(self) -> Self:
        ids = self.component_ids
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate component ids in selection: {list(ids)}")
        if list(ids) != sorted(ids):
            raise ValueError(f"selection ids must be sorted: {list(ids)}")
        if any(i < 0 for i in ids):
            raise ValueError("component ids are non-negative")
        return self

    @classmethod
    def of(cls, ids: Iterable[int]) -> "Selection":
        return cls(component_ids=tuple(sorted(set(ids))))

    @property
    def size(self) -> int:
        return len(self.component_ids)

    def union(self, other: "Selection") -> "Selection":
        return Selection.of((*self.component_ids, *other.component_ids))


class SearchTreeNode(BaseModel):
    """One node of a directed bounded search tree.

    The root carries no component and sits at depth 0 with the frontier at the start
    of the axis; every other node's interval contains its parent's frontier and ends
    strictly beyond it.
    """

    model_config = ConfigDict(frozen=True)

    component_id: int | None
    depth: int = Field(ge=0)
    frontier: float
    feasible: bool = False
    children: tuple["SearchTreeNode", ...] = ()


class ProjectedInterval(BaseModel):
    model_config = ConfigDict(frozen=True)

    component_id: int = Field(ge=0)
    axis: Axis
    interval: Interval


class PrunedDiagram(BaseModel):
    """A diagram together with what preprocessing learned about its components."""

    model_config = ConfigDict(frozen=True)

    diagram: FreeSpaceDiagram
    necessary: Selection
    redundant: frozenset[int]

    @property
    def candidates(self) -> tuple[Component, ...]:
        return tuple(c for c in self.diagram.components if c.id not in self.redundant)


class MatchedPiece(BaseModel):
    """Subcurves of P and Q covered by one selected component."""

    model_config = ConfigDict(frozen=True)

    component_id: int
    p_interval: Interval
    q_interval: Interval
