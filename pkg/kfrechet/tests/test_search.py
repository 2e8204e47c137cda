"""Decision dispatch, the minimal k, and the epsilon search."""

import math

import numpy as np
import pytest

import kfrechet.search
from kfrechet.core.exceptions import ParameterRangeError, SearchError
from kfrechet.curves import max_vertex_distance
from kfrechet.enums import Algorithm, MinimizeMethod, SearchMode
from kfrechet.freespace import build_diagram
from kfrechet.oracles import exhaustive_min_k, random_curve_pair
from kfrechet.schemas import FreeSpaceDiagram, PolyCurve, Selection
from kfrechet.search import (
    candidate_epsilons,
    find_min_k,
    frechet_distance,
    hausdorff_distance,
    k_frechet_distance,
    minimize_epsilon,
    minimize_k,
    run_decision,
    weak_frechet_distance,
)
from kfrechet.selection import decide_weak_frechet


@pytest.fixture
def diagonal(unit_p: PolyCurve, unit_q: PolyCurve) -> FreeSpaceDiagram:
    return build_diagram(unit_p, unit_q, 1.0)


@pytest.mark.parametrize("algorithm", list(Algorithm))
def test_every_algorithm_accepts_the_diagonal(
    diagonal: FreeSpaceDiagram, algorithm: Algorithm
) -> None:
    assert run_decision(diagonal, algorithm, 1) == (True, Selection.of([0]))


@pytest.mark.parametrize("algorithm", list(Algorithm))
def test_every_algorithm_rejects_empty_free_space(
    unit_p: PolyCurve, unit_q: PolyCurve, algorithm: Algorithm
) -> None:
    assert run_decision(build_diagram(unit_p, unit_q, 0.5), algorithm, 3) == (False, None)


def test_witnesses_on_the_hooks(hooks: tuple[PolyCurve, PolyCurve]) -> None:
    d = build_diagram(*hooks, 0.6)
    assert run_decision(d, Algorithm.APPROX, 1) == (False, None)
    assert run_decision(d, Algorithm.APPROX, 2) == (True, Selection.of([0, 1]))
    assert run_decision(d, Algorithm.BRUTE, 2) == (True, Selection.of([0, 1]))
    assert run_decision(d, Algorithm.HAUSDORFF, 1) == (True, Selection.of([0, 1]))
    assert run_decision(d, Algorithm.WEAK, 5) == (False, None)


def test_min_k(diagonal: FreeSpaceDiagram, hooks: tuple[PolyCurve, PolyCurve]) -> None:
    assert minimize_k(diagonal) == 1
    assert find_min_k(build_diagram(*hooks, 0.6)) == Selection.of([0, 1])
    assert minimize_k(build_diagram(*hooks, 0.6), MinimizeMethod.APPROX) == 2


def test_min_k_without_cover(unit_p: PolyCurve, unit_q: PolyCurve) -> None:
    d = build_diagram(unit_p, unit_q, 0.5)
    for method in MinimizeMethod:
        assert minimize_k(d, method) is None


def test_min_k_matches_the_exhaustive_count(rng: np.random.Generator) -> None:
    checked = 0
    while checked < 30:
        p, q = random_curve_pair(rng, max_segments=5)
        d = build_diagram(p, q, 0.3)
        if len(d.components) > 12:
            continue
        checked += 1
        exact, approximate = minimize_k(d), minimize_k(d, MinimizeMethod.APPROX)
        assert exact == exhaustive_min_k(d), f"eps={d.epsilon}, components={len(d.components)}"
        assert (exact is None) == (approximate is None)
        if exact is not None and approximate is not None:
            assert exact <= approximate <= 2 * exact


def test_identical_curves_have_distance_zero(u_shape: PolyCurve) -> None:
    assert minimize_epsilon(u_shape, u_shape, 1, 1e-6) == 0.0


def test_parallel_segments(unit_p: PolyCurve, unit_q: PolyCurve) -> None:
    assert minimize_epsilon(unit_p, unit_q, 1, 1e-7) == pytest.approx(1.0, abs=1e-7)


def test_candidate_search_lands_on_a_candidate(unit_p: PolyCurve, unit_q: PolyCurve) -> None:
    candidates = candidate_epsilons(unit_p, unit_q)
    assert candidates[0] == 0.0
    assert candidates[-1] == pytest.approx(math.sqrt(2))
    assert 1.0 in candidates
    assert minimize_epsilon(unit_p, unit_q, 1, mode=SearchMode.CANDIDATES) == 1.0


def test_candidates_include_bisector_points(unit_p: PolyCurve, unit_q: PolyCurve) -> None:
    # (0.5, 1) on Q is equidistant from both vertices of P.
    assert any(c == pytest.approx(math.sqrt(1.25)) for c in candidate_epsilons(unit_p, unit_q))


def test_search_arguments(unit_p: PolyCurve, unit_q: PolyCurve) -> None:
    with pytest.raises(ParameterRangeError, match="k must be at least 1"):
        minimize_epsilon(unit_p, unit_q, 0)
    with pytest.raises(ParameterRangeError, match="tol must be positive"):
        minimize_epsilon(unit_p, unit_q, 1, 0.0)


def test_unbracketed_search(
    unit_p: PolyCurve, unit_q: PolyCurve, monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setattr(kfrechet.search, "run_decision", lambda *_: (False, None))
    with pytest.raises(SearchError):
        minimize_epsilon(unit_p, unit_q, 1)
    with pytest.raises(SearchError):
        minimize_epsilon(unit_p, unit_q, 1, mode=SearchMode.CANDIDATES)


def test_classic_distances_of_parallel_segments(unit_p: PolyCurve, unit_q: PolyCurve) -> None:
    for distance in (hausdorff_distance, weak_frechet_distance, frechet_distance):
        assert distance(unit_p, unit_q, 1e-6) == pytest.approx(1.0, abs=1e-6)


def test_hooks_two_pieces_reach_the_hausdorff_distance(
    hooks: tuple[PolyCurve, PolyCurve],
) -> None:
    # The connectors are 0.5 away from the rails at their midpoints.
    assert hausdorff_distance(*hooks, 1e-6) == pytest.approx(0.5, abs=1e-5)
    assert k_frechet_distance(*hooks, 2, 1e-6) == pytest.approx(0.5, abs=1e-5)
    assert weak_frechet_distance(*hooks, 1e-6) > 0.6


def test_bisection_matches_a_grid_scan(rng: np.random.Generator) -> None:
    tol = 1e-4
    for _ in range(10):
        p, q = random_curve_pair(rng)
        eps = minimize_epsilon(p, q, 1, tol)
        assert eps == minimize_epsilon(p, q, 1, tol, algorithm=Algorithm.WEAK)

        grid = np.linspace(0.0, max_vertex_distance(p, q), 201)
        holds = [decide_weak_frechet(build_diagram(p, q, float(x))) for x in grid]
        first = holds.index(True)
        assert first > 0
        assert grid[first - 1] < eps <= grid[first] + tol


def test_distance_does_not_grow_with_k(rng: np.random.Generator) -> None:
    for _ in range(5):
        p, q = random_curve_pair(rng, max_segments=4)
        values = [k_frechet_distance(p, q, k, 1e-4) for k in (1, 2, 3)]
        assert values == sorted(values, reverse=True), values
