"""k-Fréchet free space workbench.

Every command prints one JSON object on stdout; logs and errors go to stderr.
Exit status: 0 = yes, 1 = no, 2 = error. KFRECHET_TOL overrides the tolerance.

Usage:
    python -m kfrechet decide --p p.txt --q q.txt --eps 0.5 --k 2 --algo fpt
    python -m kfrechet minimize-k --p p.txt --q q.txt --eps 0.5
    python -m kfrechet minimize-eps --p p.txt --q q.txt --k 2 --tol 1e-6
    python -m kfrechet freespace-svg --p p.txt --q q.txt --eps 0.5 --out fs.svg --select 0,2
    python -m kfrechet boxgen --cnf formula.cnf --out boxes.json
    python -m kfrechet boxsolve --in boxes.json
"""

import argparse
import logging
import math
import sys
from collections.abc import Sequence
from pathlib import Path

from kfrechet.cli.commands import (
    cmd_boxgen,
    cmd_boxsolve,
    cmd_decide,
    cmd_freespace_svg,
    cmd_minimize_eps,
    cmd_minimize_k,
)
from kfrechet.constants import EXIT_ERROR, LOG_FORMAT
from kfrechet.core.settings import SettingsError, get_settings
from kfrechet.enums import Algorithm, MinimizeMethod, SearchMode


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _id_list(text: str) -> list[int]:
    try:
        return sorted({int(part) for part in text.split(",") if part.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ids, got {text!r}") from None


def _add_curves(parser: argparse.ArgumentParser, *, eps: bool = True) -> None:
    parser.add_argument("--p", type=Path, required=True, help="Curve file for P")
    parser.add_argument("--q", type=Path, required=True, help="Curve file for Q")
    if eps:
        parser.add_argument("--eps", type=_finite_float, required=True, help="Distance threshold")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kfrechet", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_decide = sub.add_parser("decide", help="Is there a cover with at most k components?")
    _add_curves(p_decide)
    p_decide.add_argument("--k", type=int, required=True)
    p_decide.add_argument("--algo", type=Algorithm, choices=list(Algorithm), default=Algorithm.FPT)
    p_decide.set_defaults(func=cmd_decide)

    p_min_k = sub.add_parser("minimize-k", help="Fewest components covering both curves")
    _add_curves(p_min_k)
    p_min_k.add_argument(
        "--method", type=MinimizeMethod, choices=list(MinimizeMethod), default=MinimizeMethod.EXACT
    )
    p_min_k.set_defaults(func=cmd_minimize_k)

    p_min_eps = sub.add_parser("minimize-eps", help="Smallest eps admitting a k-cover")
    _add_curves(p_min_eps, eps=False)
    p_min_eps.add_argument("--k", type=int, required=True)
    p_min_eps.add_argument("--tol", type=_finite_float, help="Search tolerance (default: settings)")
    p_min_eps.add_argument(
        "--mode", type=SearchMode, choices=list(SearchMode), default=SearchMode.BISECTION
    )
    p_min_eps.set_defaults(func=cmd_minimize_eps)

    p_svg = sub.add_parser("freespace-svg", help="Render the free space diagram")
    _add_curves(p_svg)
    p_svg.add_argument("--out", type=Path, required=True)
    p_svg.add_argument("--select", type=_id_list, help="Component ids to outline, e.g. 0,2")
    p_svg.set_defaults(func=cmd_freespace_svg)

    p_boxgen = sub.add_parser("boxgen", help="Box-problem instance from a DIMACS CNF")
    p_boxgen.add_argument("--cnf", type=Path, required=True)
    p_boxgen.add_argument("--out", type=Path, required=True)
    p_boxgen.set_defaults(func=cmd_boxgen)

    p_boxsolve = sub.add_parser("boxsolve", help="Solve a box-problem instance exhaustively")
    p_boxsolve.add_argument("--in", dest="instance", type=Path, required=True)
    p_boxsolve.set_defaults(func=cmd_boxsolve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except SettingsError as e:
        print(f"kfrechet: {e}", file=sys.stderr)
        return EXIT_ERROR
    logging.basicConfig(level=settings.log_level, format=LOG_FORMAT, stream=sys.stderr)
    status: int = args.func(args)
    return status
