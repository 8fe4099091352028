"""Deterministic geometric layouts: circular, layered, radial, grid, star."""

from __future__ import annotations

import math

import numpy as np

from collections import deque

from .positions import LayoutPositions, normalize_positions

RADIUS = 0.45


def _circle_point(angle, radius=RADIUS, center=(0.5, 0.5)):
    return (center[0] + radius * math.cos(angle), center[1] + radius * math.sin(angle))


def circular(net, order_score=None):
    """Nodes evenly on a circle, ordered by a score (ties keep index order)."""
    n = net.node_count
    order = list(range(n))
    if order_score is not None:
        values = list(order_score.values) if hasattr(order_score, "values") else list(order_score)
        order.sort(key=lambda u: (values[u], u))
    coords = np.zeros((n, 2))
    for position, u in enumerate(order):
        coords[u] = _circle_point(2.0 * math.pi * position / max(n, 1))
    return LayoutPositions(net, coords if n > 1 else normalize_positions(coords))


def _bfs_layers(net, root=0):
    """Layer index per node; disconnected parts restart from their lowest index."""
    n = net.node_count
    layer = [-1] * n
    starts = [root] + [u for u in range(n) if u != root]
    for start in starts:
        if layer[start] >= 0:
            continue
        layer[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in net.neighbors(u, "both"):
                if layer[v] < 0:
                    layer[v] = layer[u] + 1
                    queue.append(v)
    return layer


def _barycenter_order(net, layers):
    """One down-up sweep ordering each layer by mean neighbor position."""
    depth = max(layers) + 1 if layers else 0
    rows = [[u for u in range(len(layers)) if layers[u] == level] for level in range(depth)]
    position = {}
    for row in rows:
        for i, u in enumerate(row):
            position[u] = float(i)

    def sweep(level_range, reference_offset):
        for level in level_range:
            row = rows[level]
            reference = level + reference_offset
            keys = {}
            for u in row:
                anchors = [position[v] for v in net.neighbors(u, "both")
                           if layers[v] == reference]
                keys[u] = (float(np.mean(anchors)) if anchors else position[u], u)
            row.sort(key=lambda u: keys[u])
            for i, u in enumerate(row):
                position[u] = float(i)

    sweep(range(1, depth), -1)
    sweep(range(depth - 2, -1, -1), +1)
    return rows


def hierarchical(net, root=0):
    """Breadth-first layers from the root, barycenter-ordered per layer."""
    n = net.node_count
    if n == 0:
        return LayoutPositions(net, np.zeros((0, 2)))
    layers = _bfs_layers(net, root)
    rows = _barycenter_order(net, layers)
    coords = np.zeros((n, 2))
    depth = len(rows)
    for level, row in enumerate(rows):
        y = 0.5 if depth <= 1 else 1.0 - level / (depth - 1)  # root on top
        for i, u in enumerate(row):
            x = (i + 1) / (len(row) + 1)
            coords[u] = (x, y)
    return LayoutPositions(net, normalize_positions(coords))


def radial(net, root=0):
    """Layers mapped onto concentric rings around the root."""
    n = net.node_count
    if n == 0:
        return LayoutPositions(net, np.zeros((0, 2)))
    layers = _bfs_layers(net, root)
    rows = _barycenter_order(net, layers)
    coords = np.zeros((n, 2))
    depth = len(rows)
    for level, row in enumerate(rows):
        if level == 0 and len(row) == 1:
            coords[row[0]] = (0.5, 0.5)
            continue
        radius = RADIUS * (level if depth <= 1 else level / max(depth - 1, 1))
        if level == 0:
            radius = RADIUS / max(depth, 1)
        for i, u in enumerate(row):
            coords[u] = _circle_point(2.0 * math.pi * i / len(row), radius)
    return LayoutPositions(net, coords)


def grid(net, rows=None, cols=None):
    """Row-major placement on a near-square (or given) grid."""
    n = net.node_count
    if n == 0:
        return LayoutPositions(net, np.zeros((0, 2)))
    if rows is None and cols is None:
        cols = math.ceil(math.sqrt(n))
    if cols is None:
        cols = math.ceil(n / rows)
    grid_rows = math.ceil(n / cols)
    coords = np.zeros((n, 2))
    for u in range(n):
        r, c = divmod(u, cols)
        x = 0.5 if cols == 1 else c / (cols - 1)
        y = 0.5 if grid_rows == 1 else r / (grid_rows - 1)
        coords[u] = (x, y)
    return LayoutPositions(net, normalize_positions(coords))


def star_layout(net):
    """Highest-degree node at the center, everyone else on one ring."""
    n = net.node_count
    if n == 0:
        return LayoutPositions(net, np.zeros((0, 2)))
    center = max(range(n), key=lambda u: (net.degree(u), -u))
    coords = np.zeros((n, 2))
    coords[center] = (0.5, 0.5)
    others = [u for u in range(n) if u != center]
    for i, u in enumerate(others):
        coords[u] = _circle_point(2.0 * math.pi * i / max(len(others), 1))
    return LayoutPositions(net, coords)


def layout_structured(net, method="circular", order_score=None, root=0, rows=None, cols=None):
    method = method.lower()
    if method == "circular":
        return circular(net, order_score)
    if method == "hierarchical":
        return hierarchical(net, root)
    if method == "radial":
        return radial(net, root)
    if method == "grid":
        return grid(net, rows, cols)
    if method == "star":
        return star_layout(net)
    raise ValueError(f"unknown structured layout {method!r}")
