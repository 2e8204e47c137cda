import logging
from collections.abc import Sequence

from kfrechet.core.exceptions import ParameterRangeError
from kfrechet.core.settings import get_settings
from kfrechet.enums import Axis
from kfrechet.freespace.cells import point_segment_interval, segment_reach_interval
from kfrechet.freespace.neighborhood import components_stabbing_number
from kfrechet.freespace.unionfind import DisjointSet
from kfrechet.schemas import (
    BoundaryContact,
    CellFreeSpace,
    Component,
    FreeSpaceDiagram,
    Interval,
    PolyCurve,
    Segment,
    hull_of,
)

logger = logging.getLogger(__name__)

type EdgeGrid = list[list[Interval | None]]

_START = Interval(lo=0.0, hi=0.0)
_END = Interval(lo=1.0, hi=1.0)


def _build_cell(
    i: int,
    j: int,
    seg_p: Segment,
    seg_q: Segment,
    eps: float,
    vertical: EdgeGrid,
    horizontal: EdgeGrid,
    tol: float,
) -> CellFreeSpace:
    left, right = vertical[i][j], vertical[i + 1][j]
    bottom, top = horizontal[i][j], horizontal[i][j + 1]

    s_projection = hull_of(
        (
            segment_reach_interval(seg_p, seg_q, eps, tol),
            bottom,
            top,
            _START if left is not None else None,
            _END if right is not None else None,
        )
    )
    t_projection = hull_of(
        (
            segment_reach_interval(seg_q, seg_p, eps, tol),
            left,
            right,
            _START if bottom is not None else None,
            _END if top is not None else None,
        )
    )
    # Both are empty or neither is, except for tangencies rounded differently per axis.
    if s_projection is None or t_projection is None:
        s_projection = t_projection = None

    return CellFreeSpace(
        i=i,
        j=j,
        left=left,
        right=right,
        bottom=bottom,
        top=top,
        interior_nonempty=s_projection is not None,
        s_projection=s_projection,
        t_projection=t_projection,
    )


def _offset_hull(pieces: Sequence[tuple[int, Interval | None]]) -> Interval:
    """Hull of local cell projections moved to global parameters; members are free cells."""
    lo = min(local.lo + offset for offset, local in pieces if local is not None)
    hi = max(local.hi + offset for offset, local in pieces if local is not None)
    return Interval(lo=lo, hi=hi)


def _components(
    cells: Sequence[Sequence[CellFreeSpace]],
    vertical: EdgeGrid,
    horizontal: EdgeGrid,
    n: int,
    m: int,
    tol: float,
) -> tuple[Component, ...]:
    forest = DisjointSet()
    for row in cells:
        for cell in row:
            if cell.interior_nonempty:
                forest.makeset(cell.i * m + cell.j)

    for row in cells:
        for cell in row:
            if not cell.interior_nonempty:
                continue
            i, j = cell.index
            key = i * m + j
            if i + 1 < n and vertical[i + 1][j] is not None and cells[i + 1][j].interior_nonempty:
                forest.union(key, key + m)
            if j + 1 < m and horizontal[i][j + 1] is not None and cells[i][j + 1].interior_nonempty:
                forest.union(key, key + 1)

    # Roots are the smallest keys, and keys are row-major, so sorting roots orders
    # components by their lexicographically smallest cell.
    components: list[Component] = []
    for component_id, (_, keys) in enumerate(sorted(forest.classes().items())):
        members = [cells[key // m][key % m] for key in keys]
        proj_p = _offset_hull([(c.i, c.s_projection) for c in members])
        proj_q = _offset_hull([(c.j, c.t_projection) for c in members])
        components.append(
            Component(
                id=component_id,
                cells=frozenset(c.index for c in members),
                proj_p=proj_p,
                proj_q=proj_q,
                touches=BoundaryContact(
                    left=proj_p.lo <= tol,
                    right=proj_p.hi >= n - tol,
                    bottom=proj_q.lo <= tol,
                    top=proj_q.hi >= m - tol,
                ),
            )
        )
    return tuple(components)


def build_diagram(
    p: PolyCurve, q: PolyCurve, eps: float, tol: float | None = None
) -> FreeSpaceDiagram:
    """Free space diagram of P against Q at distance eps.

    Cell (i, j) pairs segment i of P with segment j of Q. Grid edges are computed once
    and shared by the two cells on either side.
    """
    if eps < 0:
        raise ParameterRangeError(f"eps must be non-negative, got {eps}")
    tol = get_settings().tol if tol is None else tol

    n, m = p.segment_count, q.segment_count
    p_points, q_points = p.points, q.points
    p_segments, q_segments = p.segments, q.segments

    # vertical[i][j]: line s = i against segment j of Q, parametrized by t.
    vertical = [
        [point_segment_interval(p_points[i], q_segments[j], eps, tol) for j in range(m)]
        for i in range(n + 1)
    ]
    # horizontal[i][j]: line t = j against segment i of P, parametrized by s.
    horizontal = [
        [point_segment_interval(q_points[j], p_segments[i], eps, tol) for j in range(m + 1)]
        for i in range(n)
    ]

    cells = tuple(
        tuple(
            _build_cell(i, j, p_segments[i], q_segments[j], eps, vertical, horizontal, tol)
            for j in range(m)
        )
        for i in range(n)
    )
    components = _components(cells, vertical, horizontal, n, m, tol)
    z = components_stabbing_number(components, tol)

    logger.debug(
        f"Built {n}x{m} free space at eps={eps}: {len(components)} components, z={z}"
    )
    return FreeSpaceDiagram(
        p=p, q=q, epsilon=eps, tol=tol, cells=cells, components=components, z=z
    )


def free_cells(d: FreeSpaceDiagram) -> list[CellFreeSpace]:
    return [cell for row in d.cells for cell in row if cell.interior_nonempty]


def axis_target(d: FreeSpaceDiagram, axis: Axis) -> Interval:
    """The whole parameter space of one curve."""
    return Interval(lo=0.0, hi=float(d.axis_length(axis)))
