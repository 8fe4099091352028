"""Agglomerative clustering over a node-pair distance matrix."""

from __future__ import annotations

import numpy as np

from .. import hal
from ..core import Dendrogram
from ..metrics.paths import bfs_distances, out_adjacency

LINKAGES = ("single", "complete", "average")


def shortest_path_distances(net):
    """All-pairs hop distances; unreachable pairs get the finite sentinel n."""
    n = net.node_count
    adjacency = out_adjacency(net)
    rows = hal.parallel_map(0, n - 1, lambda s: bfs_distances(net, s, adjacency))
    dist = np.full((n, n), float(n))
    for s, row in enumerate(rows):
        reachable = row >= 0
        dist[s, reachable] = row[reachable]
    return dist


def hierarchical_cluster(net, linkage="single", distance=None):
    """Merge nodes bottom-up under the given linkage criterion.

    ``distance`` is a precomputed node-pair matrix; by default the
    shortest-path distance with unreachable pairs at the sentinel n.
    Returns the full merge tree (n - 1 merges).  Ties break on the
    lowest cluster-id pair, so runs are reproducible.
    """
    if linkage not in LINKAGES:
        raise ValueError(f"linkage must be one of {LINKAGES}, got {linkage!r}")
    n = net.node_count
    if distance is None:
        distance = shortest_path_distances(net)
    dist = np.array(distance, dtype=np.float64)

    # Active clusters are keyed by dendrogram ids (leaves 0..n-1, merge t -> n+t).
    active = {i: i for i in range(n)}  # dendrogram id -> row of the working matrix
    sizes = {i: 1 for i in range(n)}
    merges = []
    for t in range(n - 1):
        ids = sorted(active)
        best = None
        for i, a in enumerate(ids):
            row = dist[active[a]]
            for b in ids[i + 1:]:
                d = row[active[b]]
                if best is None or d < best[0] - 1e-15:
                    best = (d, a, b)
        d, a, b = best
        ra, rb = active[a], active[b]
        # Lance-Williams update of row ra in place.
        for c in ids:
            if c in (a, b):
                continue
            rc = active[c]
            if linkage == "single":
                merged = min(dist[ra, rc], dist[rb, rc])
            elif linkage == "complete":
                merged = max(dist[ra, rc], dist[rb, rc])
            else:
                merged = (sizes[a] * dist[ra, rc] + sizes[b] * dist[rb, rc]) / (sizes[a] + sizes[b])
            dist[ra, rc] = dist[rc, ra] = merged
        new = n + t
        active[new] = ra
        sizes[new] = sizes[a] + sizes[b]
        del active[a], active[b], sizes[a], sizes[b]
        merges.append((a, b, float(d)))
    return Dendrogram(n, merges)
