"""Global aggregates of the node-level structural scores."""

from __future__ import annotations

import numpy as np

from .local import clustering_coefficient
from .paths import bfs_distances, eccentricity, out_adjacency


def connected_components(net):
    """Component label per node (weak components for directed networks)."""
    n = net.node_count
    labels = [-1] * n
    current = 0
    for start in range(n):
        if labels[start] >= 0:
            continue
        stack = [start]
        labels[start] = current
        while stack:
            u = stack.pop()
            for v in net.neighbors(u, "both"):
                if labels[v] < 0:
                    labels[v] = current
                    stack.append(v)
        current += 1
    return labels, current


def global_summary(net):
    """Diameter, mean clustering, mean path length, and component count.

    Mean clustering is reported as None for directed networks, where the
    per-node coefficient is undefined.
    """
    n = net.node_count
    ecc = eccentricity(net).values if n else np.zeros(0)
    diameter = float(ecc.max()) if n else 0.0
    mean_clustering = None
    if not net.directed:
        mean_clustering = float(clustering_coefficient(net).values.mean()) if n else 0.0
    # Mean over ordered reachable pairs, not over per-node means, so
    # every path counts once regardless of component sizes.
    adjacency = out_adjacency(net)
    total, pairs = 0.0, 0
    for source in range(n):
        dist = bfs_distances(net, source, adjacency)
        finite = dist[dist > 0]
        total += float(finite.sum())
        pairs += int(finite.size)
    mean_path_length = total / pairs if pairs else 0.0
    _, component_count = connected_components(net)
    return {
        "diameter": diameter,
        "mean_clustering": mean_clustering,
        "mean_path_length": mean_path_length,
        "component_count": component_count,
    }
