"""Per-node 2-D coordinates in the abstract unit square."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class LayoutPositions:
    """Coordinates for every node, kept inside [0, 1] x [0, 1]."""

    network: object
    coords: np.ndarray

    def __post_init__(self):
        self.coords = np.asarray(self.coords, dtype=np.float64)
        if self.coords.shape != (self.network.node_count, 2):
            raise ValueError("positions must be an (n, 2) array")

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, node):
        return tuple(self.coords[node])


def normalize_positions(coords, margin=0.05):
    """Rescale into [margin, 1-margin]^2 preserving aspect ratio.

    Degenerate extents collapse to the frame center, so a single node
    lands at (0.5, 0.5).
    """
    coords = np.asarray(coords, dtype=np.float64)
    if len(coords) == 0:
        return coords.reshape(0, 2)
    low = coords.min(axis=0)
    high = coords.max(axis=0)
    span = float(max(high[0] - low[0], high[1] - low[1]))
    out = np.full_like(coords, 0.5)
    if span <= 0:
        return out
    scale = (1.0 - 2.0 * margin) / span
    center = (low + high) / 2.0
    out = 0.5 + (coords - center) * scale
    return out
