"""Laplacian kernel scores: pseudoinverse rows, commute time, forest kernel."""

from __future__ import annotations

import math

import numpy as np

from ..core import ScoreMatrix
from ..community.spectral import laplacian_matrix
from ..metrics.summary import connected_components
from .local import check_dense_size


def _pinv_laplacian(net):
    check_dense_size(net.node_count)
    lap = laplacian_matrix(net)
    values, vectors = np.linalg.eigh(lap)
    inverted = np.where(values > 1e-10, 1.0 / np.where(values > 1e-10, values, 1.0), 0.0)
    return (vectors * inverted[None, :]) @ vectors.T


def pseudoinverse_laplacian(net):
    """Inner products of the rows of the Laplacian pseudoinverse.

    Cross-component pairs score 0 (the pseudoinverse is block diagonal).
    """
    plus = _pinv_laplacian(net)
    return ScoreMatrix.from_dense(plus @ plus.T, symmetric=True)


def average_commute_time(net):
    """Expected steps for a round trip between each pair of nodes.

    ACT(u, v) = 2m (L+_uu + L+_vv - 2 L+_uv); pairs in different
    components get the +infinity sentinel.
    """
    plus = _pinv_laplacian(net)
    n = net.node_count
    diagonal = np.diag(plus)
    act = 2.0 * net.link_count * (diagonal[:, None] + diagonal[None, :] - 2.0 * plus)
    np.fill_diagonal(act, 0.0)
    labels, count = connected_components(net)
    if count > 1:
        labels = np.asarray(labels)
        act[labels[:, None] != labels[None, :]] = math.inf
    return ScoreMatrix.from_dense(act, symmetric=True)


def random_forest_kernel(net):
    """Accessibility kernel (I + L)^-1; the identity on link-free networks."""
    check_dense_size(net.node_count)
    lap = laplacian_matrix(net)
    kernel = np.linalg.solve(np.eye(net.node_count) + lap, np.eye(net.node_count))
    return ScoreMatrix.from_dense(kernel, symmetric=True)


def laplacian_kernel_scores(net, method):
    methods = {
        "pseudoinverse_laplacian": pseudoinverse_laplacian,
        "average_commute_time": average_commute_time,
        "random_forest_kernel": random_forest_kernel,
    }
    if method not in methods:
        raise ValueError(f"method must be one of {sorted(methods)}, got {method!r}")
    return methods[method](net)
