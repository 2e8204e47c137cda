import logging
from collections.abc import Iterable
from itertools import product
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from kfrechet.constants import MAX_CLAUSE_WIDTH
from kfrechet.core.exceptions import FormulaError, summarize_validation_error
from kfrechet.core.settings import get_settings
from kfrechet.schemas import Assignment, Clause, CnfFormula

logger = logging.getLogger(__name__)


def _make_formula(variables: int, clauses: Iterable[Clause]) -> CnfFormula:
    try:
        return CnfFormula(variables=variables, clauses=tuple(clauses))
    except ValidationError as e:
        raise FormulaError(summarize_validation_error(e)) from None


def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS CNF: `c` comments, one `p cnf <vars> <clauses>` header, 0-terminated clauses.

    Clauses may span lines. A `%` line ends the clause section.
    """
    header: tuple[int, int] | None = None
    clauses: list[Clause] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            fields = line.split()
            if header is not None:
                raise FormulaError(f"line {lineno}: second problem line")
            if len(fields) != 4 or fields[1] != "cnf":
                raise FormulaError(f"line {lineno}: expected 'p cnf <vars> <clauses>'")
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise FormulaError(f"line {lineno}: malformed problem line") from None
            continue
        if header is None:
            raise FormulaError(f"line {lineno}: clause before the 'p cnf' header")
        for token in line.split():
            try:
                literal = int(token)
            except ValueError:
                raise FormulaError(f"line {lineno}: malformed literal {token!r}") from None
            if literal != 0:
                pending.append(literal)
                continue
            if not pending:
                raise FormulaError(f"line {lineno}: empty clause")
            clauses.append(tuple(pending))
            pending = []

    if header is None:
        raise FormulaError("missing 'p cnf' header")
    if pending:
        raise FormulaError("last clause is not terminated by 0")
    variables, declared = header
    if declared != len(clauses):
        raise FormulaError(f"header declares {declared} clauses, found {len(clauses)}")
    formula = _make_formula(variables, clauses)
    logger.debug(f"Parsed CNF with {variables} variables and {len(clauses)} clauses")
    return formula


def format_dimacs(f: CnfFormula, comments: Iterable[str] = ()) -> str:
    lines = [f"p cnf {f.variables} {len(f.clauses)}"]
    lines.extend(f"c {comment}" for comment in comments)
    lines.extend(" ".join(str(literal) for literal in clause) + " 0" for clause in f.clauses)
    return "\n".join(lines) + "\n"


def load_formula(path: Path) -> CnfFormula:
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError:
        raise FormulaError(f"{path} is not UTF-8 text") from None
    return parse_dimacs(text)


def normalize_formula(f: CnfFormula) -> CnfFormula:
    """Drop repeated literals, then add (-v or v) for every variable lacking a polarity."""
    clauses: list[Clause] = []
    for index, clause in enumerate(f.clauses, start=1):
        unique = tuple(dict.fromkeys(clause))
        if not unique:
            raise FormulaError(f"clause {index} is empty")
        clauses.append(unique)

    occurring = {literal for clause in clauses for literal in clause}
    for v in range(1, f.variables + 1):
        if v not in occurring or -v not in occurring:
            clauses.append((-v, v))
    return _make_formula(f.variables, clauses)


def sat_bruteforce(f: CnfFormula) -> Assignment | None:
    """First satisfying assignment in truth-table order (False before True)."""
    limit = get_settings().sat_max_variables
    if f.variables > limit:
        raise FormulaError(
            f"{f.variables} variables exceed the exhaustive search limit of {limit}"
        )
    for assignment in product((False, True), repeat=f.variables):
        if f.evaluate(assignment):
            return assignment
    return None


def random_formula(
    rng: np.random.Generator, variables: int, clauses: int, max_width: int = MAX_CLAUSE_WIDTH
) -> CnfFormula:
    """Clauses of uniform width 1..max_width over distinct variables with random signs."""
    drawn: list[Clause] = []
    for _ in range(clauses):
        width = int(rng.integers(1, min(max_width, variables) + 1))
        chosen = rng.choice(variables, size=width, replace=False) + 1
        signs = rng.choice((-1, 1), size=width)
        drawn.append(tuple(int(v * s) for v, s in zip(chosen, signs, strict=True)))
    return _make_formula(variables, drawn)
