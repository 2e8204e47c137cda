from .construction import (
    assignment_from_selection,
    build_box_instance,
    dump_box_instance,
    load_box_instance,
    row_candidates,
    selection_from_assignment,
)
from .formula import (
    format_dimacs,
    load_formula,
    normalize_formula,
    parse_dimacs,
    random_formula,
    sat_bruteforce,
)
from .solver import box_selection_covers, solve_box_bruteforce

__all__ = [
    "assignment_from_selection",
    "box_selection_covers",
    "build_box_instance",
    "dump_box_instance",
    "format_dimacs",
    "load_box_instance",
    "load_formula",
    "normalize_formula",
    "parse_dimacs",
    "random_formula",
    "row_candidates",
    "sat_bruteforce",
    "selection_from_assignment",
    "solve_box_bruteforce",
]
