from .bruteforce import decide_bruteforce
from .classic import decide_hausdorff, decide_strong_frechet, decide_weak_frechet
from .cover import covers_axis, covers_both, projected_intervals, selection_pieces
from .fpt import build_search_tree, decide_fpt, feasible_selections, iter_feasible_paths
from .preprocess import preprocess, redundant_components, sole_coverers

__all__ = [
    "build_search_tree",
    "covers_axis",
    "covers_both",
    "decide_bruteforce",
    "decide_fpt",
    "decide_hausdorff",
    "decide_strong_frechet",
    "decide_weak_frechet",
    "feasible_selections",
    "iter_feasible_paths",
    "preprocess",
    "projected_intervals",
    "redundant_components",
    "selection_pieces",
    "sole_coverers",
]
