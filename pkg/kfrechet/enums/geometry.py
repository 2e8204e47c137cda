from enum import StrEnum


class Axis(StrEnum):
    """Parameter space of one of the two curves; P runs along the bottom boundary."""

    P = "p"
    Q = "q"


class Edge(StrEnum):
    LEFT = "left"
    RIGHT = "right"
    BOTTOM = "bottom"
    TOP = "top"
