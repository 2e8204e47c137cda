from .boxes import Assignment, BoxInstance, Clause, CnfFormula, LabeledBox, SignedLiteral
from .curve import Interval, Point2, PolyCurve, Segment, Vec, hull_of
from .freespace import BoundaryContact, CellFreeSpace, Component, FreeSpaceDiagram
from .reports import (
    BoxGenReport,
    BoxSolveReport,
    DecideReport,
    MinimizeEpsilonReport,
    MinimizeKReport,
    SvgReport,
)
from .selection import (
    MatchedPiece,
    ProjectedInterval,
    PrunedDiagram,
    SearchTreeNode,
    Selection,
)

__all__ = [
    "Assignment",
    "BoundaryContact",
    "BoxGenReport",
    "BoxInstance",
    "BoxSolveReport",
    "CellFreeSpace",
    "Clause",
    "CnfFormula",
    "Component",
    "DecideReport",
    "FreeSpaceDiagram",
    "Interval",
    "LabeledBox",
    "MatchedPiece",
    "MinimizeEpsilonReport",
    "MinimizeKReport",
    "Point2",
    "PolyCurve",
    "ProjectedInterval",
    "PrunedDiagram",
    "SearchTreeNode",
    "Segment",
    "Selection",
    "SignedLiteral",
    "SvgReport",
    "Vec",
    "hull_of",
]
