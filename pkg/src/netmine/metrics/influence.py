"""Influence centralities: iterative probability/eigenvector style scores."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import NodeScore
from ..errors import DivergenceError, ParameterError


@dataclass
class CentralityParams:
    """Shared knobs for the iterative centralities."""

    damping: float = 0.85
    tolerance: float = 1e-10
    max_iterations: int = 200

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise ParameterError("damping must lie in (0, 1)")
        if self.tolerance <= 0:
            raise ParameterError("tolerance must be > 0")


def adjacency_matrix(net):
    """Dense adjacency; A[u, v] = 1 when link u->v exists (symmetric if undirected)."""
    n = net.node_count
    a = np.zeros((n, n), dtype=np.float64)
    for u, v in net.links():
        a[u, v] = 1.0
        if not net.directed:
            a[v, u] = 1.0
    return a


def spectral_radius(a):
    """Largest absolute eigenvalue of a dense adjacency matrix."""
    if a.shape[0] == 0:
        return 0.0
    return float(np.max(np.abs(np.linalg.eigvals(a))))


def pagerank(net, params=None):
    """Stationary distribution of the damped random surfer.

    Dangling nodes spread their mass uniformly.  Scores always sum to 1;
    ``converged`` is False when max_iterations ran out first.
    """
    params = params or CentralityParams()
    n = net.node_count
    if n == 0:
        raise ParameterError("pagerank needs at least one node")
    direction = "out" if net.directed else "both"
    out = [net.neighbors(u, direction) for u in range(n)]
    out_degree = np.array([len(row) for row in out], dtype=np.float64)
    dangling = np.nonzero(out_degree == 0)[0]
    d = params.damping

    p = np.full(n, 1.0 / n)
    converged = False
    for _ in range(params.max_iterations):
        nxt = np.full(n, (1.0 - d) / n)
        if dangling.size:
            nxt += d * p[dangling].sum() / n
        for u in range(n):
            if out[u]:
                share = d * p[u] / out_degree[u]
                for v in out[u]:
                    nxt[v] += share
        change = np.abs(nxt - p).sum()
        p = nxt
        if change < params.tolerance:
            converged = True
            break
    return NodeScore(net, p / p.sum(), converged=converged)


def hits(net, params=None):
    """Hub and authority scores from alternating updates, L2-normalized."""
    params = params or CentralityParams()
    n = net.node_count
    if net.link_count == 0:
        raise ParameterError("hits is undefined on a network without links")
    a = adjacency_matrix(net)
    hub = np.full(n, 1.0 / np.sqrt(n))
    authority = hub.copy()
    converged = False
    for _ in range(params.max_iterations):
        new_authority = a.T @ hub
        norm = np.linalg.norm(new_authority)
        if norm > 0:
            new_authority /= norm
        new_hub = a @ new_authority
        norm = np.linalg.norm(new_hub)
        if norm > 0:
            new_hub /= norm
        change = np.abs(new_hub - hub).sum() + np.abs(new_authority - authority).sum()
        hub, authority = new_hub, new_authority
        if change < params.tolerance:
            converged = True
            break
    return (NodeScore(net, hub, converged=converged),
            NodeScore(net, authority, converged=converged))


def eigenvector_centrality(net, params=None):
    """Dominant adjacency eigenvector, L1-normalized and nonnegative.

    Each update averages with the previous iterate, which damps the
    oscillation bipartite networks would otherwise sustain.
    """
    params = params or CentralityParams()
    n = net.node_count
    if n == 0:
        raise ParameterError("eigenvector centrality needs at least one node")
    a = adjacency_matrix(net)
    x = np.full(n, 1.0 / n)
    converged = False
    for _ in range(params.max_iterations):
        y = a.T @ x
        y = 0.5 * (y + x)  # oscillation damping
        total = y.sum()
        if total <= 0:
            break
        y /= total
        change = np.abs(y - x).sum()
        x = y
        if change < params.tolerance:
            converged = True
            break
    return NodeScore(net, x, converged=converged)


def _check_decay(net, delta, a):
    radius = spectral_radius(a)
    if radius > 0 and delta >= 1.0 / radius:
        raise DivergenceError(
            f"delta {delta} is not below the convergence bound 1/lambda_max = {1.0 / radius:.12g}")


def katz_centrality(net, delta, params=None):
    """Sum over all path lengths of delta**length walks into each node."""
    if delta < 0:
        raise ParameterError("delta must be >= 0")
    a = adjacency_matrix(net)
    n = net.node_count
    if delta == 0:
        return NodeScore(net, np.zeros(n))
    _check_decay(net, delta, a)
    ones = np.ones(n)
    rhs = delta * (a.T @ ones)
    x = np.linalg.solve(np.eye(n) - delta * a.T, rhs)
    return NodeScore(net, x)


def diffusion_centrality(net, delta, path_limit, params=None):
    """Katz-style walk sum truncated at ``path_limit`` hops."""
    if delta < 0:
        raise ParameterError("delta must be >= 0")
    if path_limit < 1:
        raise ParameterError("path_limit must be >= 1")
    a = adjacency_matrix(net)
    n = net.node_count
    term = np.ones(n)
    total = np.zeros(n)
    for _ in range(path_limit):
        term = delta * (a.T @ term)
        total += term
    return NodeScore(net, total)
