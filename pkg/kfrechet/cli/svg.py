"""Free space diagrams as SVG.

The diagram fills a fixed square viewBox with P along the x axis and Q along the y
axis (growing upwards). Every component is one `<g class="component">`; the root
element carries the component count in `data-components`.
"""

import logging
from collections.abc import Iterable
from pathlib import Path

import drawsvg as draw
import numpy as np

from kfrechet.constants import (
    BACKGROUND_FILL,
    COMPONENT_PALETTE,
    GRID_STROKE,
    SELECTED_STROKE,
    SVG_MARGIN,
    SVG_VIEWBOX,
    TEXT_COLOR,
)
from kfrechet.core.settings import get_settings
from kfrechet.curves import lerp
from kfrechet.freespace import point_segment_interval
from kfrechet.schemas import CellFreeSpace, FreeSpaceDiagram

logger = logging.getLogger(__name__)

type Pixel = tuple[float, float]


class _Frame:
    def __init__(self, n: int, m: int) -> None:
        span = SVG_VIEWBOX - 2 * SVG_MARGIN
        self.sx, self.sy = span / n, span / m

    def to_pixel(self, s: float, t: float) -> Pixel:
        return (SVG_MARGIN + s * self.sx, SVG_VIEWBOX - SVG_MARGIN - t * self.sy)


def _cell_outline(d: FreeSpaceDiagram, cell: CellFreeSpace, samples: int) -> list[Pixel]:
    """Boundary of the free region of one cell: lower chain, then upper chain reversed."""
    if cell.s_projection is None:
        return []
    seg_p, seg_q = d.p.segments[cell.i], d.q.segments[cell.j]
    lower: list[tuple[float, float]] = []
    upper: list[tuple[float, float]] = []
    for u in np.linspace(cell.s_projection.lo, cell.s_projection.hi, samples):
        span = point_segment_interval(lerp(seg_p, float(u)), seg_q, d.epsilon, d.tol)
        if span is None:
            continue
        lower.append((cell.i + float(u), cell.j + span.lo))
        upper.append((cell.i + float(u), cell.j + span.hi))
    return [*lower, *reversed(upper)]


def component_colors(count: int) -> list[str]:
    """One distinct fill per component id."""
    if count <= len(COMPONENT_PALETTE):
        return list(COMPONENT_PALETTE[:count])
    return [f"hsl({360 * i / count:.1f}, 70%, 50%)" for i in range(count)]


def _flatten(points: Iterable[Pixel]) -> list[float]:
    return [coordinate for point in points for coordinate in point]


def _draw_grid(drawing: draw.Drawing, d: FreeSpaceDiagram, frame: _Frame) -> None:
    for i in range(d.n + 1):
        (x0, y0), (x1, y1) = frame.to_pixel(i, 0), frame.to_pixel(i, d.m)
        drawing.append(draw.Line(x0, y0, x1, y1, stroke=GRID_STROKE, stroke_width=1))
        drawing.append(
            draw.Text(str(i), 16, x0, y0 + 24, fill=TEXT_COLOR, text_anchor="middle")
        )
    for j in range(d.m + 1):
        (x0, y0), (x1, y1) = frame.to_pixel(0, j), frame.to_pixel(d.n, j)
        drawing.append(draw.Line(x0, y0, x1, y1, stroke=GRID_STROKE, stroke_width=1))
        drawing.append(
            draw.Text(
                str(j), 16, x0 - 12, y0, fill=TEXT_COLOR, text_anchor="end",
                dominant_baseline="middle",
            )
        )
    drawing.append(
        draw.Text("P", 20, SVG_VIEWBOX / 2, SVG_VIEWBOX - 8, fill=TEXT_COLOR, text_anchor="middle")
    )
    drawing.append(
        draw.Text("Q", 20, 16, SVG_VIEWBOX / 2, fill=TEXT_COLOR, dominant_baseline="middle")
    )


def render_freespace(d: FreeSpaceDiagram, selected: Iterable[int] = ()) -> draw.Drawing:
    samples = get_settings().svg_cell_samples
    frame = _Frame(d.n, d.m)
    chosen = set(selected)

    drawing = draw.Drawing(SVG_VIEWBOX, SVG_VIEWBOX, data_components=len(d.components))
    drawing.append(draw.Rectangle(0, 0, SVG_VIEWBOX, SVG_VIEWBOX, fill=BACKGROUND_FILL))

    colors = component_colors(len(d.components))
    for component in d.components:
        color = colors[component.id]
        outline = (
            {"stroke": SELECTED_STROKE, "stroke_width": 3}
            if component.id in chosen
            else {"stroke": "none"}
        )
        group = draw.Group(class_="component", id=f"component-{component.id}")
        for i, j in sorted(component.cells):
            points = [frame.to_pixel(s, t) for s, t in _cell_outline(d, d.cell(i, j), samples)]
            if len(points) == 1:
                group.append(draw.Circle(*points[0], 2, fill=color, **outline))
            elif points:
                group.append(
                    draw.Lines(
                        *_flatten(points), close=True, fill=color, fill_opacity=0.7, **outline
                    )
                )
        drawing.append(group)

    _draw_grid(drawing, d, frame)
    return drawing


def write_freespace_svg(d: FreeSpaceDiagram, out: Path, selected: Iterable[int] = ()) -> None:
    render_freespace(d, selected).save_svg(str(out))
    logger.info(f"Wrote {out} with {len(d.components)} components")
