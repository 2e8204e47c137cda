from .algorithms import Algorithm, CurveFormat, MinimizeMethod, SearchMode
from .geometry import Axis, Edge

__all__ = [
    "Algorithm",
    "Axis",
    "CurveFormat",
    "Edge",
    "MinimizeMethod",
    "SearchMode",
]
