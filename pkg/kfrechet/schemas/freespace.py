from pydantic import BaseModel, ConfigDict, Field

from kfrechet.enums import Axis
from kfrechet.schemas.curve import Interval, PolyCurve


class CellFreeSpace(BaseModel):
    """Free space of one segment pair, in local [0, 1] x [0, 1] coordinates.

    `left`/`right` are parametrized by t (the Q segment), `bottom`/`top` by s.
    """

    model_config = ConfigDict(frozen=True)

    i: int = Field(ge=0)
    j: int = Field(ge=0)
    left: Interval | None
    right: Interval | None
    bottom: Interval | None
    top: Interval | None
    interior_nonempty: bool
    s_projection: Interval | None
    t_projection: Interval | None

    @property
    def index(self) -> tuple[int, int]:
        return (self.i, self.j)


class BoundaryContact(BaseModel):
    model_config = ConfigDict(frozen=True)

    left: bool
    right: bool
    bottom: bool
    top: bool

    @property
    def all_four(self) -> bool:
        return self.left and self.right and self.bottom and self.top


class Component(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int = Field(ge=0)
    cells: frozenset[tuple[int, int]]
    proj_p: Interval
    proj_q: Interval
    touches: BoundaryContact

    def projection(self, axis: Axis) -> Interval:
        return self.proj_p if axis is Axis.P else self.proj_q


class FreeSpaceDiagram(BaseModel):
    """F_eps(P, Q) over the n x m cell grid.

    `tol` is the tolerance the diagram was built with; every operation on the
    diagram reuses it.
    """

    model_config = ConfigDict(frozen=True)

    p: PolyCurve
    q: PolyCurve
    epsilon: float = Field(ge=0.0)
    tol: float = Field(ge=0.0)
    cells: tuple[tuple[CellFreeSpace, ...], ...]
    components: tuple[Component, ...]
    z: int = Field(ge=0)

    @property
    def n(self) -> int:
        return self.p.segment_count

    @property
    def m(self) -> int:
        return self.q.segment_count

    def cell(self, i: int, j: int) -> CellFreeSpace:
        return self.cells[i][j]

    def component(self, component_id: int) -> Component:
        return self.components[component_id]

    def axis_length(self, axis: Axis) -> int:
        return self.n if axis is Axis.P else self.m

    def component_of(self) -> dict[tuple[int, int], int]:
        return {cell: c.id for c in self.components for cell in c.cells}
