"""Whole-topology path-sum scores: Katz and the global LHN similarity."""

from __future__ import annotations

import numpy as np

from ..core import ScoreMatrix
from ..errors import DivergenceError, ParameterError
from ..metrics.influence import adjacency_matrix, spectral_radius
from ..metrics.summary import connected_components
from .local import check_dense_size


def katz_score(net, beta):
    """Damped sum over all paths between each pair: (I - beta*A)^-1 - I."""
    if beta < 0:
        raise ParameterError("beta must be >= 0")
    check_dense_size(net.node_count)
    n = net.node_count
    a = adjacency_matrix(net)
    if beta == 0:
        return ScoreMatrix(n, symmetric=not net.directed, dense=True)
    radius = spectral_radius(a)
    if radius > 0 and beta >= 1.0 / radius:
        raise DivergenceError(
            f"beta {beta} is not below the convergence bound 1/lambda_max = {1.0 / radius:.12g}")
    kernel = np.linalg.solve(np.eye(n) - beta * a, np.eye(n)) - np.eye(n)
    return ScoreMatrix.from_dense(kernel, symmetric=not net.directed)


def lhn_global_score(net, phi):
    """Global vertex similarity scaled by the dominant eigenvalue.

    S = 2 m lambda_max D^-1 (I - phi A / lambda_max)^-1 D^-1, evaluated
    per connected component; cross-component pairs score 0.
    """
    if not 0.0 < phi < 1.0:
        raise ParameterError("phi must lie in (0, 1)")
    check_dense_size(net.node_count)
    n = net.node_count
    labels, count = connected_components(net)
    scores = np.zeros((n, n))
    for component in range(count):
        members = [u for u in range(n) if labels[u] == component]
        if len(members) < 2:
            continue
        local = {u: i for i, u in enumerate(members)}
        size = len(members)
        a = np.zeros((size, size))
        m = 0
        for u, v in net.links():
            if labels[u] == component and labels[v] == component:
                a[local[u], local[v]] = 1.0
                a[local[v], local[u]] = 1.0
                m += 1
        degree = a.sum(axis=1)
        radius = spectral_radius(a)
        if radius == 0:
            continue
        resolvent = np.linalg.solve(np.eye(size) - (phi / radius) * a, np.eye(size))
        inv_degree = 1.0 / degree
        block = 2.0 * m * radius * (inv_degree[:, None] * resolvent) * inv_degree[None, :]
        for i, u in enumerate(members):
            for j, v in enumerate(members):
                scores[u, v] = block[i, j]
    return ScoreMatrix.from_dense(scores, symmetric=True)
