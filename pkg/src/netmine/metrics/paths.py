"""Shortest-path based scores: reachability, betweenness, link traversal counts.

All distances are unweighted breadth-first hop counts along out-links.
Per-source passes are fanned out through :mod:`netmine.hal` and merged
in source order, so results never depend on the worker count.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .. import hal
from ..core import NodeScore, ScoreMatrix
from ..errors import ParameterError


def out_adjacency(net):
    """Out-neighbor lists (plain neighbor lists when undirected)."""
    direction = "out" if net.directed else "both"
    return [net.neighbors(u, direction) for u in range(net.node_count)]


def bfs_distances(net, source, adjacency=None):
    """Hop distances from ``source``; unreachable nodes get -1."""
    adjacency = adjacency if adjacency is not None else out_adjacency(net)
    dist = np.full(net.node_count, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _per_source_sum(net, fn, size):
    """Sum ``fn(source)`` vectors over all sources, folding in index order."""
    if net.node_count == 0:
        return np.zeros(size)
    return hal.map_accumulate(0, net.node_count - 1, fn,
                              lambda acc, row: acc + row, np.zeros(size))


def _distance_score(net, reducer):
    adjacency = out_adjacency(net)
    n = net.node_count

    def one(source):
        return reducer(bfs_distances(net, source, adjacency))

    values = hal.parallel_map(0, n - 1, one)
    return NodeScore(net, np.array(values, dtype=np.float64))


def eccentricity(net):
    """Maximum distance to any reachable node (0 for isolated nodes)."""
    return _distance_score(net, lambda dist: float(dist.max(initial=0)))


def closeness(net):
    """Inverse of the summed distances to all reachable nodes; 0 when none."""

    def reduce(dist):
        total = dist[dist > 0].sum()
        return 1.0 / total if total > 0 else 0.0

    return _distance_score(net, reduce)


def adjusted_closeness(net):
    """Closeness scaled by (reachable - 1) / (n - 1) to reward coverage."""
    n = net.node_count

    def reduce(dist):
        reachable = int((dist >= 0).sum())  # includes the source itself
        total = dist[dist > 0].sum()
        if total <= 0 or n <= 1:
            return 0.0
        return (1.0 / total) * (reachable - 1) / (n - 1)

    return _distance_score(net, reduce)


def average_path_length(net):
    """Mean distance over reachable targets; 0 when nothing is reachable."""

    def reduce(dist):
        finite = dist[dist > 0]
        return float(finite.mean()) if finite.size else 0.0

    return _distance_score(net, reduce)


def decay(net, delta):
    """Sum of delta**distance over all reachable targets.

    As delta approaches 0 the score divided by delta approaches degree;
    at delta = 1 it equals (component size - 1).
    """
    if delta < 0:
        raise ParameterError("delta must be >= 0")

    def reduce(dist):
        finite = dist[dist > 0].astype(np.float64)
        return float(np.sum(np.power(delta, finite))) if finite.size else 0.0

    return _distance_score(net, reduce)


def normalized_decay(net, delta):
    """Decay divided by its single-hop upper bound (n - 1) * delta."""
    if delta <= 0:
        raise ParameterError("delta must be > 0 for the normalized variant")
    raw = decay(net, delta)
    n = net.node_count
    scale = (n - 1) * delta
    values = raw.values / scale if scale > 0 else np.zeros(n)
    return NodeScore(net, values)


def _brandes_pass(adjacency, source):
    """One shortest-path DAG from ``source``: visit order, parents, path counts."""
    n = len(adjacency)
    dist = np.full(n, -1, dtype=np.int64)
    sigma = np.zeros(n, dtype=np.float64)
    preds = [[] for _ in range(n)]
    dist[source] = 0
    sigma[source] = 1.0
    order = []
    queue = deque([source])
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
            if dist[v] == dist[u] + 1:
                sigma[v] += sigma[u]
                preds[v].append(u)
    return order, preds, sigma


def betweenness(net):
    """Count of shortest paths each node is involved in.

    Involvement covers interior positions (fractional credit when a pair
    has several shortest paths), both endpoints of every connected
    ordered pair, and the node's own trivial path, so the score ranges
    from 2n-1 to n*n-(n-1) on strongly-connected networks.
    """
    adjacency = out_adjacency(net)
    n = net.node_count

    def one(source):
        order, preds, sigma = _brandes_pass(adjacency, source)
        contribution = np.zeros(n, dtype=np.float64)
        delta = np.zeros(n, dtype=np.float64)
        for w in reversed(order):
            for p in preds[w]:
                delta[p] += sigma[p] / sigma[w] * (1.0 + delta[w])
            if w != source:
                contribution[w] += delta[w]  # interior credit
                contribution[w] += 1.0       # target endpoint credit
        contribution[source] += len(order) - 1  # source endpoint credit
        return contribution

    totals = _per_source_sum(net, one, n)
    return NodeScore(net, totals + 1.0)  # trivial self-path


def normalized_betweenness(net):
    """Betweenness mapped affinely from [2n-1, n*n-(n-1)] onto [0, 1]."""
    raw = betweenness(net)
    n = net.node_count
    span = (n - 1) * (n - 2)
    if span <= 0:
        return NodeScore(net, np.zeros(n))
    return NodeScore(net, (raw.values - (2 * n - 1)) / span)


def link_betweenness(net):
    """Count of ordered-pair shortest paths traversing each link."""
    adjacency = out_adjacency(net)
    n = net.node_count

    def one(source):
        order, preds, sigma = _brandes_pass(adjacency, source)
        delta = np.zeros(n, dtype=np.float64)
        credits = np.zeros(net.link_count, dtype=np.float64)
        for w in reversed(order):
            for p in preds[w]:
                share = sigma[p] / sigma[w] * (1.0 + delta[w])
                delta[p] += share
                credits[net.link_index(p, w)] += share
        return credits

    totals = _per_source_sum(net, one, net.link_count)
    matrix = ScoreMatrix(n, symmetric=not net.directed, dense=False)
    for index, value in enumerate(totals):
        u, v = net.link_ends(index)
        matrix.set(u, v, value)
    return matrix


def link_rays(net, max_length):
    """Number of simple paths of length <= max_length crossing each link,
    summed over all ordered node pairs."""
    if max_length < 1:
        raise ParameterError("max_length must be >= 1")
    adjacency = out_adjacency(net)
    n = net.node_count

    def one(source):
        credits = np.zeros(net.link_count, dtype=np.float64)
        on_path = [False] * n
        on_path[source] = True
        stack = []  # link indices of the current simple path

        def extend(u, depth):
            for v in adjacency[u]:
                if on_path[v]:
                    continue
                stack.append(net.link_index(u, v))
                # The grown path is one more source-to-target path; every
                # link on it is crossed by that path.
                for index in stack:
                    credits[index] += 1.0
                if depth + 1 < max_length:
                    on_path[v] = True
                    extend(v, depth + 1)
                    on_path[v] = False
                stack.pop()

        extend(source, 0)
        return credits

    totals = _per_source_sum(net, one, net.link_count)
    matrix = ScoreMatrix(n, symmetric=not net.directed, dense=False)
    for index, value in enumerate(totals):
        u, v = net.link_ends(index)
        matrix.set(u, v, value)
    return matrix
