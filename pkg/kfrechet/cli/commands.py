"""One function per subcommand. Each prints a JSON report and returns the exit status."""

import argparse
import json
import logging

from pydantic import BaseModel

from kfrechet.boxes import (
    build_box_instance,
    dump_box_instance,
    load_box_instance,
    load_formula,
    normalize_formula,
    solve_box_bruteforce,
)
from kfrechet.cli.errors import log_exception
from kfrechet.cli.svg import write_freespace_svg
from kfrechet.constants import EXIT_NO, EXIT_YES
from kfrechet.core.exceptions import ParameterRangeError, SelectionError
from kfrechet.curves import load_curve
from kfrechet.freespace import build_diagram
from kfrechet.schemas import (
    BoxGenReport,
    BoxSolveReport,
    DecideReport,
    FreeSpaceDiagram,
    MinimizeEpsilonReport,
    MinimizeKReport,
    Selection,
    SvgReport,
)
from kfrechet.search import find_min_k, minimize_epsilon, run_decision
from kfrechet.selection import decide_fpt

logger = logging.getLogger(__name__)


def _emit(report: BaseModel) -> None:
    print(json.dumps(report.model_dump(mode="json"), sort_keys=True))


def _status(answer: bool) -> int:
    return EXIT_YES if answer else EXIT_NO


def _ids(selection: Selection | None) -> list[int] | None:
    return None if selection is None else list(selection.component_ids)


def _load_diagram(args: argparse.Namespace) -> FreeSpaceDiagram:
    p, q = load_curve(args.p), load_curve(args.q)
    logger.info(f"Loaded P ({p.segment_count} segments) and Q ({q.segment_count} segments)")
    return build_diagram(p, q, args.eps)


@log_exception
def cmd_decide(args: argparse.Namespace) -> int:
    if args.k < 0:
        raise ParameterRangeError(f"--k must be non-negative, got {args.k}")
    d = _load_diagram(args)
    answer, selection = run_decision(d, args.algo, args.k)
    logger.info(f"{args.algo} at eps={args.eps}, k={args.k}: {'yes' if answer else 'no'}")
    _emit(
        DecideReport(
            answer=answer, selection=_ids(selection), components=len(d.components), z=d.z
        )
    )
    return _status(answer)


@log_exception
def cmd_minimize_k(args: argparse.Namespace) -> int:
    d = _load_diagram(args)
    selection = find_min_k(d, args.method)
    answer = selection is not None
    logger.info(f"Minimal k at eps={args.eps} ({args.method}): {_ids(selection)}")
    _emit(
        MinimizeKReport(
            answer=answer,
            k=None if selection is None else selection.size,
            selection=_ids(selection),
            components=len(d.components),
            z=d.z,
        )
    )
    return _status(answer)


@log_exception
def cmd_minimize_eps(args: argparse.Namespace) -> int:
    p, q = load_curve(args.p), load_curve(args.q)
    epsilon = minimize_epsilon(p, q, args.k, args.tol, mode=args.mode)
    selection = decide_fpt(build_diagram(p, q, epsilon), args.k)
    logger.info(f"Smallest eps for k={args.k}: {epsilon}")
    _emit(
        MinimizeEpsilonReport(
            answer=selection is not None, epsilon=epsilon, k=args.k, selection=_ids(selection)
        )
    )
    return _status(selection is not None)


@log_exception
def cmd_freespace_svg(args: argparse.Namespace) -> int:
    d = _load_diagram(args)
    selected = args.select or []
    unknown = sorted(i for i in selected if not 0 <= i < len(d.components))
    if unknown:
        raise SelectionError(
            f"unknown component ids {unknown}; the diagram has {len(d.components)} components"
        )
    write_freespace_svg(d, args.out, selected)
    _emit(SvgReport(out=str(args.out), components=len(d.components)))
    return EXIT_YES


@log_exception
def cmd_boxgen(args: argparse.Namespace) -> int:
    instance = build_box_instance(normalize_formula(load_formula(args.cnf)))
    args.out.write_text(dump_box_instance(instance), encoding="utf-8")
    logger.info(f"Wrote {len(instance.boxes)} boxes to {args.out}")
    _emit(BoxGenReport(out=str(args.out), boxes=len(instance.boxes), k=instance.k))
    return EXIT_YES


@log_exception
def cmd_boxsolve(args: argparse.Namespace) -> int:
    instance = load_box_instance(args.instance)
    selection = solve_box_bruteforce(instance)
    answer = selection is not None
    _emit(
        BoxSolveReport(
            answer=answer, k=instance.k, selection=None if selection is None else list(selection)
        )
    )
    return _status(answer)
