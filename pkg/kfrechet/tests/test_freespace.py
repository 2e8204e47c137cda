"""Free space of single cells and of whole diagrams."""

import math

import numpy as np
import pytest

from kfrechet.core.exceptions import ParameterRangeError
from kfrechet.curves import points_to_polyline_distances, sample_curve
from kfrechet.enums import Axis, Edge
from kfrechet.freespace import (
    DisjointSet,
    build_diagram,
    cell_axis_projection,
    cell_edge_interval,
    compute_z,
    free_cells,
    stabbing_number,
)
from kfrechet.oracles import random_curve_pair, zigzag_curve
from kfrechet.schemas import FreeSpaceDiagram, Interval, PolyCurve

SEG_P = ((0.0, 0.0), (1.0, 0.0))
SEG_Q = ((0.0, 1.0), (1.0, 1.0))


def test_tangent_bottom_edge_is_a_single_point() -> None:
    assert cell_edge_interval(SEG_P, SEG_Q, 1.0, Edge.BOTTOM) == Interval(lo=0, hi=0)
    assert cell_edge_interval(SEG_P, SEG_Q, 1.0, Edge.TOP) == Interval(lo=1, hi=1)


@pytest.mark.parametrize("edge", list(Edge))
def test_whole_edge_free_at_sqrt2(edge: Edge) -> None:
    assert cell_edge_interval(SEG_P, SEG_Q, math.sqrt(2), edge) == Interval(lo=0, hi=1)


@pytest.mark.parametrize("edge", list(Edge))
def test_edge_empty_below_segment_distance(edge: Edge) -> None:
    assert cell_edge_interval(SEG_P, SEG_Q, 0.5, edge) is None


def test_edge_interval_of_a_crossing() -> None:
    # (0, 0.5) is exactly 0.5 from the segment x = 0.5 and touches it at t = 0.5.
    vertical = ((0.5, 0.0), (0.5, 1.0))
    left = cell_edge_interval(((0.0, 0.5), (1.0, 0.5)), vertical, 0.5, Edge.LEFT)
    assert left is not None
    assert left.lo == pytest.approx(0.5)
    assert left.hi == pytest.approx(0.5)


@pytest.mark.parametrize("axis", list(Axis))
def test_parallel_segments_project_fully_at_their_distance(axis: Axis) -> None:
    assert cell_axis_projection(SEG_P, SEG_Q, 1.0, axis) == Interval(lo=0, hi=1)


@pytest.mark.parametrize("axis", list(Axis))
def test_parallel_segments_project_to_nothing_below_their_distance(axis: Axis) -> None:
    assert cell_axis_projection(SEG_P, SEG_Q, 0.9, axis) is None


def test_projection_matches_dense_sampling() -> None:
    seg_p = ((0.0, 0.0), (2.0, 0.0))
    seg_q = ((0.95, 1.0), (1.05, 1.0))
    projection = cell_axis_projection(seg_p, seg_q, 1.0, Axis.P)
    assert projection is not None

    q = PolyCurve.from_points(seg_q)
    u = np.linspace(0.0, 1.0, 10_001)
    points = np.column_stack([2.0 * u, np.zeros_like(u)])
    inside = u[points_to_polyline_distances(points, q) <= 1.0]
    assert projection.lo == pytest.approx(inside.min(), abs=1e-4)
    assert projection.hi == pytest.approx(inside.max(), abs=1e-4)
    assert (projection.lo + projection.hi) / 2 == pytest.approx(0.5)


def test_interior_ellipse_without_free_edges() -> None:
    # Short crossing segments: free only around the crossing, away from every edge.
    seg_p = ((-1.0, 0.0), (1.0, 0.0))
    seg_q = ((0.0, -1.0), (0.0, 1.0))
    for edge in Edge:
        assert cell_edge_interval(seg_p, seg_q, 0.5, edge) is None
    projection = cell_axis_projection(seg_p, seg_q, 0.5, Axis.P)
    assert projection == Interval(lo=0.25, hi=0.75)


def test_diagonal_diagram(unit_p: PolyCurve, unit_q: PolyCurve) -> None:
    d = build_diagram(unit_p, unit_q, 1.0)
    assert len(d.components) == 1
    (component,) = d.components
    assert component.proj_p == Interval(lo=0, hi=1)
    assert component.proj_q == Interval(lo=0, hi=1)
    assert component.touches.all_four
    assert compute_z(d) == d.z == 1


def test_empty_diagram(unit_p: PolyCurve, unit_q: PolyCurve) -> None:
    d = build_diagram(unit_p, unit_q, 0.5)
    assert d.components == ()
    assert free_cells(d) == []
    assert d.z == 0


def test_negative_eps(unit_p: PolyCurve, unit_q: PolyCurve) -> None:
    with pytest.raises(ParameterRangeError):
        build_diagram(unit_p, unit_q, -0.1)


def test_two_crossings_are_two_components(two_crossings: tuple[PolyCurve, PolyCurve]) -> None:
    d = build_diagram(*two_crossings, 0.5)
    assert [sorted(c.cells) for c in d.components] == [[(0, 0)], [(0, 2)]]
    first, second = d.components
    # (0, 0) is within 0.5 of the first segment of Q, so the first one reaches the left side.
    assert first.touches.left and not first.touches.right
    assert second.touches.right and not second.touches.left
    assert first.proj_q.hi < 1.0 < 2.0 < second.proj_q.lo


def test_two_crossings_merge_once_the_floor_is_free(
    two_crossings: tuple[PolyCurve, PolyCurve],
) -> None:
    d = build_diagram(*two_crossings, 1.5)
    assert len(d.components) == 1
    assert d.components[0].cells == frozenset({(0, 0), (0, 1), (0, 2)})


def test_component_ids_follow_smallest_cell() -> None:
    p = zigzag_curve(4)
    q = PolyCurve.from_points([(x, 1.0 - y) for x, y in p.points])
    d = build_diagram(p, q, 0.3)
    smallest = [min(c.cells) for c in d.components]
    assert smallest == sorted(smallest)
    assert [c.id for c in d.components] == list(range(len(d.components)))


def test_cells_partition_into_components(rng: np.random.Generator) -> None:
    for _ in range(20):
        p, q = random_curve_pair(rng)
        d = build_diagram(p, q, 0.3)
        owner = d.component_of()
        assert set(owner) == {cell.index for cell in free_cells(d)}
        assert sum(len(c.cells) for c in d.components) == len(owner)


def _projections(d: FreeSpaceDiagram) -> list[tuple[float, float, float, float]]:
    return sorted(
        (c.proj_p.lo, c.proj_p.hi, c.proj_q.lo, c.proj_q.hi) for c in d.components
    )


def test_swapping_curves_transposes_the_diagram(rng: np.random.Generator) -> None:
    for _ in range(20):
        p, q = random_curve_pair(rng)
        forward, backward = build_diagram(p, q, 0.35), build_diagram(q, p, 0.35)
        assert len(forward.components) == len(backward.components)
        swapped = sorted((c, d, a, b) for a, b, c, d in _projections(backward))
        assert _projections(forward) == swapped
        assert forward.z == backward.z


def test_components_only_grow_with_eps(rng: np.random.Generator) -> None:
    for _ in range(20):
        p, q = random_curve_pair(rng)
        small, large = build_diagram(p, q, 0.2), build_diagram(p, q, 0.3)
        for component in small.components:
            owners = {large.component_of()[cell] for cell in component.cells}
            assert len(owners) == 1, "a component split as eps grew"
            outer = large.component(owners.pop())
            assert outer.proj_p.contains_interval(component.proj_p, 1e-9)
            assert outer.proj_q.contains_interval(component.proj_q, 1e-9)


def test_projection_endpoints_come_from_member_cells(rng: np.random.Generator) -> None:
    for _ in range(20):
        p, q = random_curve_pair(rng)
        d = build_diagram(p, q, 0.3)
        for c in d.components:
            los, his = [], []
            for i, j in c.cells:
                local = d.cell(i, j).s_projection
                assert local is not None, f"member cell {(i, j)} has no free space"
                los.append(i + local.lo)
                his.append(i + local.hi)
            assert c.proj_p.lo == min(los)
            assert c.proj_p.hi == max(his)


def test_projected_union_is_the_near_part_of_p(rng: np.random.Generator) -> None:
    eps = 0.3
    for _ in range(20):
        p, q = random_curve_pair(rng, max_segments=5)
        d = build_diagram(p, q, eps)
        params = np.linspace(0.0, float(p.segment_count), 2001)
        distances = points_to_polyline_distances(sample_curve(p, params), q)
        for s, distance in zip(params.tolist(), distances.tolist(), strict=True):
            if abs(distance - eps) < 1e-6:
                continue
            covered = any(c.proj_p.contains(s, 1e-8) for c in d.components)
            assert covered == (distance < eps), f"s={s}, distance={distance}"


def test_stabbing_number() -> None:
    overlapping = [Interval(lo=0, hi=0.5), Interval(lo=0.4, hi=1)]
    disjoint = [Interval(lo=0, hi=0.3), Interval(lo=0.5, hi=1)]
    touching = [Interval(lo=0, hi=0.5), Interval(lo=0.5, hi=1)]
    assert stabbing_number(overlapping, 1e-9) == 2
    assert stabbing_number(disjoint, 1e-9) == 1
    # Closed intervals: a shared endpoint is stabbed by both.
    assert stabbing_number(touching, 1e-9) == 2
    assert stabbing_number([], 1e-9) == 0


def test_z_bounds_dense_stabbing(rng: np.random.Generator) -> None:
    for _ in range(20):
        p, q = random_curve_pair(rng, min_segments=5, max_segments=5)
        d = build_diagram(p, q, 0.25)
        assert d.z <= len(d.components)
        for axis in Axis:
            positions = np.linspace(0.0, float(d.axis_length(axis)), 1000)
            dense = max(
                (sum(c.projection(axis).contains(x) for c in d.components) for x in positions),
                default=0,
            )
            assert dense <= d.z


def test_disjoint_set() -> None:
    forest = DisjointSet()
    for key in (5, 3, 9, 1):
        forest.makeset(key)
    forest.union(9, 3)
    forest.union(5, 1)
    assert forest.find(9) == 3
    assert forest.find(5) == 1
    forest.union(9, 5)
    assert forest.classes() == {1: [5, 3, 9, 1]}
