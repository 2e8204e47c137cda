"""Box-problem instances built from normalized CNF formulas.

Each variable v gets a gadget row pair whose boxes carry labels v and -v; every
occurrence of a literal in a clause gets its own unit box in the clause's column. A
selection of exactly one box per unit row covers the bottom boundary iff the labels
it takes form a satisfying assignment.
"""

import logging
from collections.abc import Sequence
from itertools import accumulate
from pathlib import Path

from pydantic import ValidationError

from kfrechet.constants import BOX_ORIGIN
from kfrechet.core.exceptions import BoxInstanceError, FormulaError, summarize_validation_error
from kfrechet.schemas import Assignment, BoxInstance, CnfFormula, LabeledBox

logger = logging.getLogger(__name__)


def _occurrences(f: CnfFormula, literal: int) -> list[int]:
    """1-based indices of the clauses containing `literal`, in clause order."""
    return [h for h, clause in enumerate(f.clauses, start=1) if literal in clause]


def build_box_instance(f: CnfFormula) -> BoxInstance:
    if not f.is_normalized:
        raise FormulaError("the box construction needs a normalized formula")

    n, m = f.variables, len(f.clauses)
    positive = {i: _occurrences(f, i) for i in range(1, n + 1)}
    negative = {i: _occurrences(f, -i) for i in range(1, n + 1)}
    # s_pos[i] = occurrences of v_1..v_i; s_pos[0] = 0.
    s_pos = [0, *accumulate(len(positive[i]) for i in range(1, n + 1))]
    s_neg = [0, *accumulate(len(negative[i]) for i in range(1, n + 1))]
    total_pos, total_neg = s_pos[n], s_neg[n]

    boxes: list[LabeledBox] = []

    def place(x: float, y: float, w: float, label: int) -> None:
        boxes.append(LabeledBox(x=x, y=y, w=w, label=label))

    for i in range(1, n + 1):
        place(i, i, 1, -i)
        place(i, i + n + total_pos, 1, i)

    for i in range(1, n + 1):
        base = n + s_pos[i - 1]
        place(1 + base, i, len(positive[i]), i)
        for j in range(1, len(positive[i]) + 1):
            place(base + j, base + j, 1, -i)

    for i in range(1, n + 1):
        base = n + total_pos + s_neg[i - 1]
        place(1 + base, n + total_pos + i, len(negative[i]), -i)
        for j in range(1, len(negative[i]) + 1):
            place(base + j, n + base + j, 1, i)

    for h, clause in enumerate(f.clauses, start=1):
        anchor = n + total_pos + total_neg + h
        for literal in clause:
            i = abs(literal)
            if literal > 0:
                j = positive[i].index(h) + 1
                place(anchor, n + s_pos[i - 1] + j, 1, i)
            else:
                j = negative[i].index(h) + 1
                place(anchor, 2 * n + total_pos + s_neg[i - 1] + j, 1, -i)

    bound = (
        BOX_ORIGIN[0] + n + total_pos + total_neg + m,
        BOX_ORIGIN[1] + 2 * n + total_pos + total_neg,
    )
    k = 2 * n + sum(len(clause) for clause in f.clauses)
    logger.debug(f"Box instance: {len(boxes)} boxes, k={k}, bound={bound}")
    return BoxInstance(bound=bound, k=k, boxes=tuple(boxes))


def selection_from_assignment(b: BoxInstance, assignment: Sequence[bool]) -> tuple[int, ...]:
    """Indices of the boxes whose label is true under `assignment`."""
    return tuple(
        index
        for index, box in enumerate(b.boxes)
        if assignment[abs(box.label) - 1] == (box.label > 0)
    )


def row_candidates(b: BoxInstance) -> dict[int, list[int]]:
    """Box indices per unit row of the left boundary, keyed by the row's lower y."""
    rows: dict[int, list[int]] = {y: [] for y in range(int(b.left.lo), int(b.left.hi))}
    for index, box in enumerate(b.boxes):
        if box.y.is_integer() and int(box.y) in rows:
            rows[int(box.y)].append(index)
    return rows


def assignment_from_selection(b: BoxInstance, selection: Sequence[int]) -> Assignment:
    """Read the assignment off the variable rows 1..n of a constructed instance.

    Row v holds exactly two boxes labeled v and -v; the selected one gives v's value.
    """
    variables = max(abs(box.label) for box in b.boxes)
    rows = row_candidates(b)
    chosen = set(selection)
    values: list[bool] = []
    for v in range(1, variables + 1):
        picked = [b.boxes[i].label for i in rows.get(v, []) if i in chosen]
        if len(picked) != 1 or abs(picked[0]) != v:
            raise BoxInstanceError(f"selection does not pick exactly one box in row {v}")
        values.append(picked[0] > 0)
    return tuple(values)


def load_box_instance(path: Path) -> BoxInstance:
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError:
        raise BoxInstanceError(f"{path} is not UTF-8 text") from None
    try:
        return BoxInstance.model_validate_json(text)
    except ValidationError as e:
        raise BoxInstanceError(summarize_validation_error(e)) from None


def dump_box_instance(b: BoxInstance) -> str:
    return b.model_dump_json(indent=2) + "\n"
