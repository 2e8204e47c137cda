"""Optimizing k for a fixed diagram, and eps for a fixed k."""

import logging
from bisect import bisect_left
from itertools import combinations

import numpy as np

from kfrechet.approximation import approximate_k, axis_covers
from kfrechet.core.exceptions import ParameterRangeError, SearchError
from kfrechet.core.settings import get_settings
from kfrechet.curves import max_vertex_distance, point_segment_distance_matrix
from kfrechet.enums import Algorithm, MinimizeMethod, SearchMode
from kfrechet.freespace import build_diagram
from kfrechet.schemas import FreeSpaceDiagram, PolyCurve, Selection, Vec
from kfrechet.selection import (
    decide_bruteforce,
    decide_fpt,
    decide_hausdorff,
    decide_strong_frechet,
    decide_weak_frechet,
)

logger = logging.getLogger(__name__)


def run_decision(
    d: FreeSpaceDiagram, algorithm: Algorithm, k: int
) -> tuple[bool, Selection | None]:
    """Answer one decision question on `d`, with a witnessing selection when yes.

    The classic distances ignore k. Their witnesses are a single component for the
    Fréchet variants and every component for Hausdorff.
    """
    match algorithm:
        case Algorithm.BRUTE:
            selection = decide_bruteforce(d, k)
            return selection is not None, selection
        case Algorithm.FPT:
            selection = decide_fpt(d, k)
            return selection is not None, selection
        case Algorithm.APPROX:
            selection = approximate_k(d)
            if selection is None or selection.size > k:
                return False, None
            return True, selection
        case Algorithm.WEAK:
            if not decide_weak_frechet(d):
                return False, None
            return True, Selection.of([next(c.id for c in d.components if c.touches.all_four)])
        case Algorithm.HAUSDORFF:
            if not decide_hausdorff(d):
                return False, None
            return True, Selection.of(c.id for c in d.components)
        case Algorithm.FRECHET:
            if not decide_strong_frechet(d):
                return False, None
            return True, Selection.of([d.component_of()[(0, 0)]])


def find_min_k(
    d: FreeSpaceDiagram, method: MinimizeMethod = MinimizeMethod.EXACT
) -> Selection | None:
    """Smallest covering selection: exact via FPT, or the greedy 2-approximation."""
    cover_p, cover_q = axis_covers(d)
    if cover_p is None or cover_q is None:
        return None
    approximate = cover_p.union(cover_q)
    if method is MinimizeMethod.APPROX:
        return approximate

    for k in range(max(cover_p.size, cover_q.size), approximate.size + 1):
        selection = decide_fpt(d, k)
        if selection is not None:
            logger.debug(f"Minimal k={k} (greedy bounds {cover_p.size}..{approximate.size})")
            return selection
    return approximate


def minimize_k(
    d: FreeSpaceDiagram, method: MinimizeMethod = MinimizeMethod.EXACT
) -> int | None:
    selection = find_min_k(d, method)
    return None if selection is None else selection.size


def _bisector_distances(
    vertices: tuple[Vec, ...], segments: tuple[tuple[Vec, Vec], ...]
) -> list[float]:
    """Distances at points of a segment equidistant from two vertices of the other curve."""
    found: list[float] = []
    for a, b in combinations(vertices, 2):
        w = np.subtract(b, a)
        offset = float(np.dot(b, b) - np.dot(a, a))
        for start, end in segments:
            direction = np.subtract(end, start)
            slope = 2.0 * float(np.dot(direction, w))
            if slope == 0.0:
                continue
            u = (offset - 2.0 * float(np.dot(start, w))) / slope
            if 0.0 <= u <= 1.0:
                found.append(float(np.linalg.norm(np.add(start, u * direction) - np.asarray(a))))
    return found


def candidate_epsilons(p: PolyCurve, q: PolyCurve) -> list[float]:
    """Sorted distances at which the free space commonly changes shape.

    Vertex-vertex, vertex-segment and bisector-segment distances. The set is not known
    to contain every value where k-Fréchet coverage changes, so a search over it can
    land above the true optimum.
    """
    p_points = np.asarray(p.points, dtype=np.float64)
    q_points = np.asarray(q.points, dtype=np.float64)
    values = {0.0, max_vertex_distance(p, q)}
    values.update(point_segment_distance_matrix(p_points, q).ravel().tolist())
    values.update(point_segment_distance_matrix(q_points, p).ravel().tolist())
    values.update(_bisector_distances(p.points, q.segments))
    values.update(_bisector_distances(q.points, p.segments))
    return sorted(values)


def minimize_epsilon(
    p: PolyCurve,
    q: PolyCurve,
    k: int,
    tol: float | None = None,
    *,
    algorithm: Algorithm = Algorithm.FPT,
    mode: SearchMode = SearchMode.BISECTION,
) -> float:
    """Smallest eps at which `algorithm` answers yes for k, up to `tol` from above.

    Relies on the decision being monotone in eps. The upper end of the bracket is the
    largest vertex distance, where the whole diagram is one free component.
    """
    if k < 1:
        raise ParameterRangeError(f"k must be at least 1, got {k}")
    settings = get_settings()
    tol = settings.search_tol if tol is None else tol
    if tol <= 0:
        raise ParameterRangeError(f"tol must be positive, got {tol}")

    evaluations = 0

    def holds(eps: float) -> bool:
        nonlocal evaluations
        evaluations += 1
        return run_decision(build_diagram(p, q, eps, settings.tol), algorithm, k)[0]

    if mode is SearchMode.CANDIDATES:
        candidates = candidate_epsilons(p, q)
        index = bisect_left(range(len(candidates)), True, key=lambda i: holds(candidates[i]))
        if index == len(candidates):
            raise SearchError(f"{algorithm} never holds for k={k} at any candidate eps")
        logger.debug(f"Candidate search: {evaluations} evaluations over {len(candidates)} values")
        return candidates[index]

    if holds(0.0):
        return 0.0
    lo, hi = 0.0, max_vertex_distance(p, q) + settings.tol
    if not holds(hi):
        raise SearchError(f"{algorithm} does not hold for k={k} at eps={hi}")
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if holds(mid):
            hi = mid
        else:
            lo = mid
    logger.debug(f"Bisection for k={k} with {algorithm}: eps={hi} after {evaluations} evaluations")
    return hi


def hausdorff_distance(p: PolyCurve, q: PolyCurve, tol: float | None = None) -> float:
    return minimize_epsilon(p, q, 1, tol, algorithm=Algorithm.HAUSDORFF)


def weak_frechet_distance(p: PolyCurve, q: PolyCurve, tol: float | None = None) -> float:
    return minimize_epsilon(p, q, 1, tol, algorithm=Algorithm.WEAK)


def frechet_distance(p: PolyCurve, q: PolyCurve, tol: float | None = None) -> float:
    return minimize_epsilon(p, q, 1, tol, algorithm=Algorithm.FRECHET)


def k_frechet_distance(p: PolyCurve, q: PolyCurve, k: int, tol: float | None = None) -> float:
    return minimize_epsilon(p, q, k, tol, algorithm=Algorithm.FPT)

