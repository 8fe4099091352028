"""Random-walk scores: plain, with restart, and flow propagation."""

from __future__ import annotations

import numpy as np

from .. import hal
from ..core import NodeScore, ScoreMatrix
from ..errors import ParameterError, UnsupportedDirectionError

TOLERANCE = 1e-10
MAX_ITERATIONS = 10_000


def _row_normalized(net):
    """Column-stochastic walk operator (transpose of the row-normalized
    adjacency); dangling rows jump uniformly."""
    n = net.node_count
    a = np.zeros((n, n))
    direction = "out" if net.directed else "both"
    for u in range(n):
        row = net.neighbors(u, direction)
        if row:
            share = 1.0 / len(row)
            for v in row:
                a[v, u] = share
        else:
            a[:, u] = 1.0 / n
    return a


def _symmetric_normalized(net):
    if net.directed:
        raise UnsupportedDirectionError("flow propagation requires an undirected network")
    n = net.node_count
    a = np.zeros((n, n))
    for u, v in net.links():
        a[u, v] = a[v, u] = 1.0
    degree = a.sum(axis=1)
    inv_sqrt = np.zeros(n)
    positive = degree > 0
    inv_sqrt[positive] = 1.0 / np.sqrt(degree[positive])
    return (inv_sqrt[:, None] * a) * inv_sqrt[None, :]


def random_walk(net, seed_node):
    """Stationary distribution reached from a seed node.

    Iterates the lazy walk (averaging with the previous vector), which
    converges even on bipartite structures and has the same fixed point.
    """
    net._check_node(seed_node)
    operator = _row_normalized(net)
    n = net.node_count
    p = np.zeros(n)
    p[seed_node] = 1.0
    converged = False
    for _ in range(MAX_ITERATIONS):
        nxt = 0.5 * (p + operator @ p)
        change = np.abs(nxt - p).sum()
        p = nxt
        if change < TOLERANCE:
            converged = True
            break
    return NodeScore(net, p, converged=converged)


def _fixed_point(operator, alpha, seed_node, n):
    e = np.zeros(n)
    e[seed_node] = 1.0
    p = e.copy()
    converged = False
    for _ in range(MAX_ITERATIONS):
        nxt = (1.0 - alpha) * (operator @ p) + alpha * e
        change = np.abs(nxt - p).sum()
        p = nxt
        if change < TOLERANCE:
            converged = True
            break
    return p, converged


def random_walk_with_restart(net, seed_node, alpha=0.15):
    """Fixed point of p = (1 - alpha) W p + alpha e_seed."""
    if not 0.0 < alpha <= 1.0:
        raise ParameterError("alpha must lie in (0, 1]")
    net._check_node(seed_node)
    p, converged = _fixed_point(_row_normalized(net), alpha, seed_node, net.node_count)
    return NodeScore(net, p, converged=converged)


def flow_propagation(net, seed_node, alpha=0.15):
    """Restart walk on the doubly-normalized operator D^-1/2 A D^-1/2."""
    if not 0.0 < alpha <= 1.0:
        raise ParameterError("alpha must lie in (0, 1]")
    net._check_node(seed_node)
    p, converged = _fixed_point(_symmetric_normalized(net), alpha, seed_node, net.node_count)
    return NodeScore(net, p, converged=converged)


def random_walk_scores(net, variant="restart", alpha=0.15, seed_node=None):
    """Walk scores for one seed (NodeScore) or all sources (ScoreMatrix).

    The all-sources matrix symmetrizes as score(u, v) =
    p_u(v) + p_v(u), so undirected inputs score symmetrically.
    """
    single = {
        "plain": lambda s: random_walk(net, s),
        "restart": lambda s: random_walk_with_restart(net, s, alpha),
        "flow": lambda s: flow_propagation(net, s, alpha),
    }
    if variant not in single:
        raise ValueError(f"variant must be one of {sorted(single)}, got {variant!r}")
    if seed_node is not None:
        return single[variant](seed_node)
    from .local import check_dense_size

    check_dense_size(net.node_count)
    n = net.node_count
    scores = hal.parallel_map(0, n - 1, single[variant])
    stacked = np.vstack([s.values for s in scores]) if scores else np.zeros((0, 0))
    matrix = ScoreMatrix.from_dense(stacked + stacked.T, symmetric=not net.directed)
    matrix.converged = all(s.converged for s in scores)
    return matrix
