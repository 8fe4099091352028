"""Graph layout algorithms and SVG rendering with style bindings."""

from .positions import LayoutPositions, normalize_positions
from .force import layout_force, fruchterman_reingold, kamada_kawai, layout_stress
from .structured import layout_structured
from .svg import StyleBinding, render_svg

__all__ = [
    "LayoutPositions",
    "StyleBinding",
    "fruchterman_reingold",
    "kamada_kawai",
    "layout_force",
    "layout_stress",
    "layout_structured",
    "normalize_positions",
    "render_svg",
]
