# Fixed styling; the renderer exposes no knobs for these.
SVG_VIEWBOX = 1000
SVG_MARGIN = 60

GRID_STROKE = "#94a3b8"
BACKGROUND_FILL = "#ffffff"
TEXT_COLOR = "#1e293b"
SELECTED_STROKE = "#111827"

# Used as is up to its length; larger diagrams get evenly spaced hues.
COMPONENT_PALETTE = (
    "#3b82f6",
    "#f97316",
    "#22c55e",
    "#a855f7",
    "#ef4444",
    "#14b8a6",
    "#eab308",
    "#ec4899",
)
