"""SVG rendering with attribute-bound visual styles.

Links are drawn first (one line each), then nodes (one circle each), so
nodes sit on top.  Output is deterministic for fixed positions/styles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import NodeScore, ScoreMatrix
from ..errors import MissingAttributeError

CHANNELS = ("nodeSize", "nodeColor", "linkWidth", "linkColor")

DEFAULT_RANGES = {"nodeSize": (4.0, 14.0), "linkWidth": (0.8, 5.0)}
NUMERIC_GRADIENT = ((44, 123, 182), (215, 25, 28))  # blue to red
CATEGORICAL_PALETTE = (
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
    "#e6ab02", "#a6761d", "#666666", "#386cb0", "#f0027f",
)


@dataclass
class StyleBinding:
    """Binds a visual channel to an attribute column or a computed score."""

    channel: str
    source: object  # attribute name, NodeScore, or ScoreMatrix
    value_range: tuple | None = None
    palette: tuple = field(default=CATEGORICAL_PALETTE)

    def __post_init__(self):
        if self.channel not in CHANNELS:
            raise ValueError(f"channel must be one of {CHANNELS}, got {self.channel!r}")


def _source_values(net, binding):
    """Per-element values plus whether they are numeric."""
    node_side = binding.channel.startswith("node")
    source = binding.source
    if isinstance(source, NodeScore):
        if not node_side:
            raise ValueError(f"a node score cannot drive {binding.channel}")
        return list(source.values), True
    if isinstance(source, ScoreMatrix):
        if node_side:
            raise ValueError(f"a pair score cannot drive {binding.channel}")
        return [source.get(*net.link_ends(i)) for i in range(net.link_count)], True
    column = net.node_attribute(source) if node_side else net.link_attribute(source)
    numeric = column.kind == "numerical"
    values = list(column.values)
    if numeric and any(v is None for v in values):
        fallback = min((v for v in values if v is not None), default=0.0)
        values = [fallback if v is None else v for v in values]
    return values, numeric


def _linear(values, out_low, out_high):
    low, high = min(values), max(values)
    if high - low <= 0:
        mid = (out_low + out_high) / 2.0
        return [mid for _ in values]
    return [out_low + (v - low) / (high - low) * (out_high - out_low) for v in values]


def _gradient_color(t):
    (r0, g0, b0), (r1, g1, b1) = NUMERIC_GRADIENT
    r = round(r0 + (r1 - r0) * t)
    g = round(g0 + (g1 - g0) * t)
    b = round(b0 + (b1 - b0) * t)
    return f"#{r:02x}{g:02x}{b:02x}"


def _resolve(net, binding):
    values, numeric = _source_values(net, binding)
    if binding.channel in ("nodeSize", "linkWidth"):
        if not numeric:
            raise ValueError(f"{binding.channel} needs a numerical source")
        low, high = binding.value_range or DEFAULT_RANGES[binding.channel]
        return _linear(values, low, high)
    if numeric:
        scaled = _linear(values, 0.0, 1.0)
        return [_gradient_color(t) for t in scaled]
    seen = {}
    colors = []
    for value in values:
        key = "" if value is None else str(value)
        if key not in seen:
            seen[key] = binding.palette[len(seen) % len(binding.palette)]
        colors.append(seen[key])
    return colors


def render_svg(net, positions, styles=(), width=800, height=800):
    """Render the network to an SVG document string."""
    resolved = {}
    for binding in styles:
        if binding.channel in resolved:
            raise ValueError(f"channel {binding.channel!r} bound twice")
        resolved[binding.channel] = _resolve(net, binding)

    def fmt(value):
        return format(value, ".6g")

    node_radius = resolved.get("nodeSize", [6.0] * net.node_count)
    node_color = resolved.get("nodeColor", ["#4c78a8"] * net.node_count)
    link_width = resolved.get("linkWidth", [1.0] * net.link_count)
    link_color = resolved.get("linkColor", ["#999999"] * net.link_count)

    xs = [positions[u][0] * width for u in range(net.node_count)]
    ys = [(1.0 - positions[u][1]) * height for u in range(net.node_count)]

    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">']
    for index in range(net.link_count):
        u, v = net.link_ends(index)
        lines.append(f'  <line x1="{fmt(xs[u])}" y1="{fmt(ys[u])}" '
                     f'x2="{fmt(xs[v])}" y2="{fmt(ys[v])}" '
                     f'stroke="{link_color[index]}" stroke-width="{fmt(link_width[index])}"/>')
    for u in range(net.node_count):
        lines.append(f'  <circle cx="{fmt(xs[u])}" cy="{fmt(ys[u])}" r="{fmt(node_radius[u])}" '
                     f'fill="{node_color[u]}"/>')
    lines.append('</svg>')
    return "\n".join(lines) + "\n"
