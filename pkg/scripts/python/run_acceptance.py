"""Full-scale property runs that are too slow for the unit suite.

Each command builds a seeded corpus, checks one family of properties, prints the
violations it found and exits non-zero if there were any.

Usage (run from the repository root):
    # Strong => weak => k-cover => Hausdorff, and the k = 1 / k = #components equivalences
    python scripts/python/run_acceptance.py sandwich --pairs 500

    # FPT search-tree path counts for doubling k on fixed curves (logged, not gated)
    python scripts/python/run_acceptance.py fpt-shape --max-k 8

    # SAT <=> box-coverable for small formulas, plus random 4-variable formulas
    python scripts/python/run_acceptance.py reduction --random 100

    # Brute force vs FPT, approximation within twice the optimum, preprocessing soundness
    python scripts/python/run_acceptance.py exact --pairs 200

    # Greedy axis cover vs the exhaustive minimum on random interval sets
    python scripts/python/run_acceptance.py greedy --sets 1000

    # minimize_epsilon(k=1) vs a grid scan of the weak decision; non-increasing in k
    python scripts/python/run_acceptance.py search --pairs 50

    # Component counts and decisions vs the pixel labelling at eps away from critical values
    python scripts/python/run_acceptance.py pixels --pairs 200 --res 512
"""

import argparse
import itertools
import logging
import sys
from collections.abc import Iterator, Sequence

import numpy as np

from kfrechet.approximation import approximate_k, greedy_axis_cover
from kfrechet.boxes import (
    build_box_instance,
    normalize_formula,
    random_formula,
    sat_bruteforce,
    solve_box_bruteforce,
)
from kfrechet.constants import LOG_FORMAT
from kfrechet.curves import max_vertex_distance
from kfrechet.enums import Axis
from kfrechet.freespace import build_diagram
from kfrechet.oracles import (
    exhaustive_min_cover,
    exhaustive_min_k,
    pixel_comparable,
    pixel_freespace,
    random_curve_pair,
    zigzag_curve,
)
from kfrechet.schemas import CnfFormula, FreeSpaceDiagram, Interval, PolyCurve, ProjectedInterval
from kfrechet.search import k_frechet_distance, minimize_epsilon
from kfrechet.selection import (
    covers_both,
    decide_bruteforce,
    decide_fpt,
    decide_hausdorff,
    decide_strong_frechet,
    decide_weak_frechet,
    iter_feasible_paths,
    preprocess,
)

logger = logging.getLogger("run_acceptance")

EPS_FRACTIONS = (0.1, 0.25, 0.4, 0.6, 0.8)
# Deciding with k = #components enumerates every union; keep it to small diagrams.
SATURATION_LIMIT = 12
# Largest diagrams and interval sets handed to the exhaustive oracles.
EXACT_LIMIT = 10
GREEDY_LIMIT = 12


def _decisions(d: FreeSpaceDiagram, k: int) -> tuple[bool, bool, bool, bool]:
    return (
        decide_strong_frechet(d),
        decide_weak_frechet(d),
        decide_fpt(d, k) is not None,
        decide_hausdorff(d),
    )


def _is_stable(p: PolyCurve, q: PolyCurve, eps: float, k: int) -> bool:
    """Same answers a little below and above eps, so eps is not a critical value."""
    margin = 10 * build_diagram(p, q, eps).tol
    return _decisions(build_diagram(p, q, eps - margin), k) == _decisions(
        build_diagram(p, q, eps + margin), k
    )


def sandwich_violations(pairs: int, seed: int, max_k: int = 3) -> list[str]:
    rng = np.random.default_rng(seed)
    violations: list[str] = []
    for index in range(pairs):
        p, q = random_curve_pair(rng)
        for fraction in EPS_FRACTIONS:
            eps = fraction * max_vertex_distance(p, q)
            d = build_diagram(p, q, eps)
            strong, weak, _, hausdorff = _decisions(d, 1)
            covers = [decide_fpt(d, k) is not None for k in range(1, max_k + 1)]
            saturated = (
                decide_fpt(d, max(len(d.components), 1)) is not None
                if len(d.components) <= SATURATION_LIMIT
                else hausdorff
            )
            problems = []
            if strong and not weak:
                problems.append("strong without weak")
            if weak and not all(covers):
                problems.append("weak without a k-cover")
            if any(covers) and not hausdorff:
                problems.append("k-cover without Hausdorff")
            if covers[0] != weak:
                problems.append("k=1 differs from weak")
            if saturated != hausdorff:
                problems.append("k=#components differs from Hausdorff")
            if problems and _is_stable(p, q, eps, 1):
                violations.append(f"pair {index}, eps={eps:.6g}: {', '.join(problems)}")
    return violations


def fpt_path_counts(max_k: int) -> list[tuple[int, int, int]]:
    """(k, z, P-tree path count) for k = 1, 2, 4, ... on a zigzag against its mirror."""
    p = zigzag_curve(6)
    q = PolyCurve.from_points((x, 1.0 - y) for x, y in p.points)
    d = build_diagram(p, q, 0.6)
    counts = []
    k = 1
    while k <= max_k:
        counts.append((k, d.z, sum(1 for _ in iter_feasible_paths(d, Axis.P, k))))
        k *= 2
    return counts


def small_formulas(max_variables: int, max_clauses: int) -> Iterator[CnfFormula]:
    """Every formula over 1..max_variables variables with 1..max_clauses clauses of width <= 3."""
    for variables in range(1, max_variables + 1):
        literals = [v for i in range(1, variables + 1) for v in (i, -i)]
        clauses = [
            clause for width in (1, 2, 3) for clause in itertools.combinations(literals, width)
        ]
        for count in range(1, max_clauses + 1):
            for chosen in itertools.combinations(clauses, count):
                yield CnfFormula(variables=variables, clauses=chosen)


def reduction_violations(formulas: Sequence[CnfFormula]) -> list[str]:
    violations = []
    for f in formulas:
        normalized = normalize_formula(f)
        instance = build_box_instance(normalized)
        m1, m2, m3 = normalized.clause_size_counts
        n = normalized.variables
        if len(instance.boxes) != 4 * n + 2 * (m1 + 2 * m2 + 3 * m3):
            violations.append(f"{f.clauses}: box count {len(instance.boxes)}")
        if instance.k != 2 * n + m1 + 2 * m2 + 3 * m3:
            violations.append(f"{f.clauses}: k={instance.k}")
        satisfiable = sat_bruteforce(f) is not None
        coverable = solve_box_bruteforce(instance) is not None
        if satisfiable != coverable:
            violations.append(f"{f.clauses}: sat={satisfiable}, coverable={coverable}")
    return violations


def exact_violations(pairs: int, seed: int, max_k: int = 3) -> tuple[list[str], int]:
    """Brute force against FPT, the 2-approximation and preprocessing, on small diagrams."""
    rng = np.random.default_rng(seed)
    violations: list[str] = []
    checked = 0
    for index in range(pairs):
        p, q = random_curve_pair(rng)
        for fraction in EPS_FRACTIONS:
            d = build_diagram(p, q, fraction * max_vertex_distance(p, q))
            if not 0 < len(d.components) <= EXACT_LIMIT:
                continue
            checked += 1
            where = f"pair {index}, eps={d.epsilon:.6g}"
            necessary = set(preprocess(d).necessary.component_ids)
            for k in range(1, max_k + 1):
                brute, fpt = decide_bruteforce(d, k), decide_fpt(d, k)
                without = decide_bruteforce(d, k, use_preprocessing=False)
                if (brute is None) != (fpt is None):
                    violations.append(f"{where}, k={k}: brute={brute}, fpt={fpt}")
                if (brute is None) != (without is None):
                    violations.append(f"{where}, k={k}: preprocessing changed the answer")
                for found in (brute, fpt, without):
                    if found is not None and not covers_both(d, found):
                        violations.append(f"{where}, k={k}: {found} does not cover")
                for found in (brute, without):
                    if found is not None and not necessary <= set(found.component_ids):
                        violations.append(f"{where}, k={k}: {found} misses {sorted(necessary)}")
            optimum, approximate = exhaustive_min_k(d), approximate_k(d)
            if optimum is not None and (approximate is None or approximate.size > 2 * optimum):
                violations.append(f"{where}: approximation {approximate} against optimum {optimum}")
    return violations, checked


def greedy_violations(sets: int, seed: int) -> list[str]:
    rng = np.random.default_rng(seed)
    target = Interval(lo=0.0, hi=1.0)
    violations = []
    for _ in range(sets):
        count = int(rng.integers(1, GREEDY_LIMIT + 1))
        ends = np.sort(rng.uniform(-0.2, 1.2, size=(count, 2)), axis=1)
        intervals = [
            ProjectedInterval(component_id=i, axis=Axis.P, interval=Interval(lo=lo, hi=hi))
            for i, (lo, hi) in enumerate(ends.tolist())
        ]
        greedy = greedy_axis_cover(intervals, target)
        exhaustive = exhaustive_min_cover([pi.interval for pi in intervals], target)
        if (None if greedy is None else greedy.size) != exhaustive:
            violations.append(f"{ends.tolist()}: greedy={greedy}, exhaustive={exhaustive}")
    return violations


def search_violations(pairs: int, seed: int, tol: float, grid: int) -> list[str]:
    """minimize_epsilon(k=1) against a grid scan of the weak decision, and monotone in k."""
    rng = np.random.default_rng(seed)
    violations = []
    for index in range(pairs):
        p, q = random_curve_pair(rng)
        eps = minimize_epsilon(p, q, 1, tol)
        scan = np.linspace(0.0, max_vertex_distance(p, q), grid)
        holds = [decide_weak_frechet(build_diagram(p, q, float(x))) for x in scan]
        first = holds.index(True)
        if first > 0 and not scan[first - 1] < eps <= scan[first] + tol:
            violations.append(
                f"pair {index}: eps={eps:.6g} outside ({scan[first - 1]:.6g}, {scan[first]:.6g}]"
            )
        values = [k_frechet_distance(p, q, k, tol) for k in (1, 2, 3)]
        if values != sorted(values, reverse=True):
            violations.append(f"pair {index}: distances {values} grow with k")
    return violations


def pixel_violations(pairs: int, seed: int, res: int) -> tuple[list[str], int]:
    """Counts and decisions against the pixel labelling, away from critical eps."""
    rng = np.random.default_rng(seed)
    violations = []
    checked = 0
    for index in range(pairs):
        p, q = random_curve_pair(rng)
        for fraction in EPS_FRACTIONS:
            eps = fraction * max_vertex_distance(p, q)
            if not pixel_comparable(p, q, eps, res):
                continue
            checked += 1
            d = build_diagram(p, q, eps)
            pixels = pixel_freespace(p, q, eps, res)
            problems = []
            if pixels.component_count != len(d.components):
                problems.append(f"{pixels.component_count} pixel vs {len(d.components)} exact")
            if pixels.spans_all_sides != decide_weak_frechet(d):
                problems.append("weak decision differs")
            if pixels.covers_both_axes != decide_hausdorff(d):
                problems.append("Hausdorff decision differs")
            if problems:
                violations.append(f"pair {index}, eps={eps:.6g}: {', '.join(problems)}")
    return violations, checked


def _report(violations: list[str], checked: str) -> int:
    for line in violations:
        print(f"✗ {line}")
    if violations:
        print(f"\n{len(violations)} violations in {checked}")
        return 1
    print(f"✓ {checked}: no violations")
    return 0


def sandwich(args: argparse.Namespace) -> int:
    violations = sandwich_violations(args.pairs, args.seed)
    return _report(violations, f"{args.pairs} pairs x {len(EPS_FRACTIONS)} eps")


def fpt_shape(args: argparse.Namespace) -> int:
    previous: int | None = None
    for k, z, count in fpt_path_counts(args.max_k):
        ratio = "" if previous is None else f" (previous squared: {previous * previous})"
        print(f"k={k:>3}  z={z}  paths={count}  bound z^k={z**k}{ratio}")
        previous = count
    return 0


def reduction(args: argparse.Namespace) -> int:
    rng = np.random.default_rng(args.seed)
    formulas = list(small_formulas(3, args.max_clauses))
    formulas += [random_formula(rng, 4, int(rng.integers(1, 6))) for _ in range(args.random)]
    return _report(reduction_violations(formulas), f"{len(formulas)} formulas")


def exact(args: argparse.Namespace) -> int:
    violations, checked = exact_violations(args.pairs, args.seed)
    return _report(violations, f"{checked} diagrams with at most {EXACT_LIMIT} components")


def greedy(args: argparse.Namespace) -> int:
    return _report(greedy_violations(args.sets, args.seed), f"{args.sets} interval sets")


def search(args: argparse.Namespace) -> int:
    violations = search_violations(args.pairs, args.seed, args.tol, args.grid)
    return _report(violations, f"{args.pairs} pairs")


def pixels(args: argparse.Namespace) -> int:
    violations, checked = pixel_violations(args.pairs, args.seed, args.res)
    skipped = args.pairs * len(EPS_FRACTIONS) - checked
    return _report(violations, f"{checked} comparable diagrams ({skipped} near a critical eps)")


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument("--seed", type=int, default=20240601)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sandwich = sub.add_parser("sandwich", help="Distance sandwich and endpoint equivalences")
    p_sandwich.add_argument("--pairs", type=int, default=500)
    p_sandwich.set_defaults(func=sandwich)

    p_shape = sub.add_parser("fpt-shape", help="Search-tree path counts for doubling k")
    p_shape.add_argument("--max-k", type=int, default=8)
    p_shape.set_defaults(func=fpt_shape)

    p_reduction = sub.add_parser("reduction", help="SAT <=> box cover on small formulas")
    p_reduction.add_argument("--max-clauses", type=int, default=4)
    p_reduction.add_argument("--random", type=int, default=100)
    p_reduction.set_defaults(func=reduction)

    p_exact = sub.add_parser("exact", help="Brute force vs FPT, 2-approximation, preprocessing")
    p_exact.add_argument("--pairs", type=int, default=200)
    p_exact.set_defaults(func=exact)

    p_greedy = sub.add_parser("greedy", help="Greedy axis cover vs exhaustive minimum")
    p_greedy.add_argument("--sets", type=int, default=1000)
    p_greedy.set_defaults(func=greedy)

    p_search = sub.add_parser("search", help="Epsilon search vs a grid scan, monotone in k")
    p_search.add_argument("--pairs", type=int, default=50)
    p_search.add_argument("--tol", type=float, default=1e-4)
    p_search.add_argument("--grid", type=int, default=1001)
    p_search.set_defaults(func=search)

    p_pixels = sub.add_parser("pixels", help="Exact diagrams vs the pixel labelling")
    p_pixels.add_argument("--pairs", type=int, default=200)
    p_pixels.add_argument("--res", type=int, default=512)
    p_pixels.set_defaults(func=pixels)

    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING, format=LOG_FORMAT
    )
    status: int = args.func(args)
    return status


if __name__ == "__main__":
    sys.exit(main())
