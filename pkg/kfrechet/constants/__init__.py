from .boxes import BOX_HEIGHT, BOX_ORIGIN, MAX_CLAUSE_WIDTH
from .cli import EXIT_ERROR, EXIT_NO, EXIT_YES, LOG_FORMAT
from .svg import (
    BACKGROUND_FILL,
    COMPONENT_PALETTE,
    GRID_STROKE,
    SELECTED_STROKE,
    SVG_MARGIN,
    SVG_VIEWBOX,
    TEXT_COLOR,
)

__all__ = [
    "BACKGROUND_FILL",
    "BOX_HEIGHT",
    "BOX_ORIGIN",
    "COMPONENT_PALETTE",
    "EXIT_ERROR",
    "EXIT_NO",
    "EXIT_YES",
    "GRID_STROKE",
    "LOG_FORMAT",
    "MAX_CLAUSE_WIDTH",
    "SELECTED_STROKE",
    "SVG_MARGIN",
    "SVG_VIEWBOX",
    "TEXT_COLOR",
]
