"""Neighborhood-level node scores: clustering and degree assortativity."""

from __future__ import annotations

import numpy as np

from .. import hal
from ..core import NodeScore
from ..errors import ParameterError, UnsupportedDirectionError


def clustering_coefficient(net):
    """Fraction of each node's neighbor pairs that are themselves linked.

    Nodes with fewer than two neighbors score 0.
    """
    if net.directed:
        raise UnsupportedDirectionError("clustering coefficient requires an undirected network")
    adjacency = [net.neighbors(u) for u in range(net.node_count)]
    neighbor_sets = [set(row) for row in adjacency]

    def one(u):
        trusted = adjacency[u]
        d = len(trusted)
        if d < 2:
            return 0.0
        closed = 0
        for i, v in enumerate(trusted):
            closed += sum(1 for w in trusted[i + 1:] if w in neighbor_sets[v])
        return 2.0 * closed / (d * (d - 1))

    values = hal.parallel_map(0, net.node_count - 1, one)
    return NodeScore(net, np.array(values, dtype=np.float64))


def assortativity(net, variant="unbiased"):
    """Per-node share of the network's degree-correlation coefficient.

    Works on remaining degrees (degree minus one); either variant sums
    exactly to the global coefficient and stays within [-1, 1].  The
    "biased" split hands every node the standardized products of its own
    link endpoints, so a node's share grows with its degree; the
    "unbiased" split weighs the deviation of the mean neighbor degree
    from the global endpoint mean by the node's own remaining degree.
    When every degree is equal the coefficient is undefined and all
    scores are 0.
    """
    if variant not in ("biased", "unbiased"):
        raise ValueError(f"variant must be 'biased' or 'unbiased', got {variant!r}")
    if net.link_count < 1:
        raise ParameterError("assortativity needs at least one link")
    n = net.node_count
    adjacency = [net.neighbors(u) for u in range(n)]
    degree = np.array([len(row) for row in adjacency], dtype=np.float64)
    remaining = degree - 1.0
    two_m = float(degree.sum())

    # Moments of the remaining degree seen from a uniformly random link endpoint.
    mean_q = float((degree * remaining).sum()) / two_m
    var_q = float((degree * remaining * remaining).sum()) / two_m - mean_q ** 2
    if var_q <= 1e-15:
        return NodeScore(net, np.zeros(n))

    if variant == "unbiased":
        neighbor_mean = np.zeros(n)
        for u in range(n):
            if adjacency[u]:
                neighbor_mean[u] = float(np.mean([remaining[v] for v in adjacency[u]]))
        values = degree * remaining * (neighbor_mean - mean_q) / (two_m * var_q)
    else:
        centered = remaining - mean_q
        values = np.array([centered[u] * sum(centered[v] for v in adjacency[u])
                           for u in range(n)]) / (two_m * var_q)
    return NodeScore(net, values)
