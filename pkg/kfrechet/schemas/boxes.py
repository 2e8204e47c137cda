from collections.abc import Sequence
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, model_validator

from kfrechet.constants import BOX_HEIGHT, BOX_ORIGIN, MAX_CLAUSE_WIDTH
from kfrechet.schemas.curve import Interval

type SignedLiteral = int
type Clause = tuple[SignedLiteral, ...]
type Assignment = tuple[bool, ...]


class CnfFormula(BaseModel):
    """A CNF formula over variables 1..variables; literal v or -v.

    Raw input may repeat a literal inside a clause; `normalize_formula` removes
    those and makes every variable occur in both polarities.
    """

    model_config = ConfigDict(frozen=True)

    variables: int = Field(ge=1)
    clauses: tuple[Clause, ...]

    @model_validator(mode="after")
    def _literals_in_range(self) -> Self:
        for index, clause in enumerate(self.clauses):
            if not 1 <= len(clause) <= MAX_CLAUSE_WIDTH:
                raise ValueError(
                    f"clause {index + 1} has {len(clause)} literals, expected 1 to "
                    f"{MAX_CLAUSE_WIDTH}"
                )
            for literal in clause:
                if literal == 0 or abs(literal) > self.variables:
                    raise ValueError(f"clause {index + 1} has out-of-range literal {literal}")
        return self

    @property
    def is_normalized(self) -> bool:
        if any(len(set(clause)) != len(clause) for clause in self.clauses):
            return False
        occurring = {literal for clause in self.clauses for literal in clause}
        return all(
            v in occurring and -v in occurring for v in range(1, self.variables + 1)
        )

    @property
    def clause_size_counts(self) -> tuple[int, int, int]:
        """(m1, m2, m3): the number of clauses with one, two and three literals."""
        widths = [len(set(clause)) for clause in self.clauses]
        return (widths.count(1), widths.count(2), widths.count(3))

    def evaluate(self, assignment: Sequence[bool]) -> bool:
        if len(assignment) != self.variables:
            raise ValueError(
                f"assignment has {len(assignment)} values for {self.variables} variables"
            )
        return all(
            any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause) for clause in self.clauses
        )


class LabeledBox(BaseModel):
    """Axis-parallel rectangle of unit height with bottom-left corner (x, y)."""

    model_config = ConfigDict(frozen=True)

    x: FiniteFloat = Field(gt=0)
    y: FiniteFloat = Field(gt=0)
    w: FiniteFloat = Field(ge=1)
    label: int

    @model_validator(mode="after")
    def _label_is_a_literal(self) -> Self:
        if self.label == 0:
            raise ValueError("box label must be a nonzero literal")
        return self

    @property
    def x_interval(self) -> Interval:
        return Interval(lo=self.x, hi=self.x + self.w)

    @property
    def y_interval(self) -> Interval:
        return Interval(lo=self.y, hi=self.y + BOX_HEIGHT)


class BoxInstance(BaseModel):
    """Bounding rectangle B = [1, xmax] x [1, ymax], the boxes inside it, and budget k."""

    model_config = ConfigDict(frozen=True)

    bound: tuple[FiniteFloat, FiniteFloat]
    k: int = Field(ge=0)
    boxes: tuple[LabeledBox, ...]

    @model_validator(mode="after")
    def _bound_beyond_origin(self) -> Self:
        x_origin, y_origin = BOX_ORIGIN
        if self.bound[0] <= x_origin or self.bound[1] <= y_origin:
            raise ValueError(f"bound {list(self.bound)} does not extend beyond {BOX_ORIGIN}")
        return self

    @property
    def bottom(self) -> Interval:
        return Interval(lo=BOX_ORIGIN[0], hi=self.bound[0])

    @property
    def left(self) -> Interval:
        return Interval(lo=BOX_ORIGIN[1], hi=self.bound[1])
