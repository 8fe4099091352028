"""Spectral community detection on the graph Laplacian."""

from __future__ import annotations

import numpy as np

from ..core import Partition
from ..errors import NumericalError, ParameterError, UnsupportedDirectionError
from .partitional import lloyd
from ..rng import SplitMix64

DENSE_LIMIT = 500

METHODS = ("eig1", "knsc1", "spectral_kmeans")


def laplacian_matrix(net, normalized=False):
    """L = D - A, or the symmetric normalized form I - D^-1/2 A D^-1/2."""
    if net.directed:
        raise UnsupportedDirectionError("the Laplacian here is defined for undirected networks")
    n = net.node_count
    a = np.zeros((n, n))
    for u, v in net.links():
        a[u, v] = a[v, u] = 1.0
    degree = a.sum(axis=1)
    if not normalized:
        return np.diag(degree) - a
    inv_sqrt = np.zeros(n)
    positive = degree > 0
    inv_sqrt[positive] = 1.0 / np.sqrt(degree[positive])
    return np.eye(n) - (inv_sqrt[:, None] * a) * inv_sqrt[None, :]


def symmetric_eigen(matrix, k, tolerance=1e-10, max_iterations=10_000, force_iterative=False):
    """The ``k`` smallest eigenpairs of a symmetric matrix.

    Dense solve below DENSE_LIMIT nodes; otherwise shifted power
    iteration with deflation (largest eigenpairs of c*I - M are the
    smallest of M).  Returns (values, vectors) with vectors in columns.
    """
    n = matrix.shape[0]
    if k > n:
        raise ParameterError(f"cannot take {k} eigenpairs from a {n}x{n} matrix")
    if n <= DENSE_LIMIT and not force_iterative:
        values, vectors = np.linalg.eigh(matrix)
        return values[:k], vectors[:, :k]

    shift = float(np.abs(matrix).sum(axis=1).max()) + 1.0  # Gershgorin bound
    shifted = shift * np.eye(n) - matrix
    values, vectors = [], []
    rng = SplitMix64(20_080_516)
    for _ in range(k):
        x = np.array([rng.random() - 0.5 for _ in range(n)])
        for found in vectors:
            x -= (x @ found) * found
        x /= np.linalg.norm(x)
        converged = False
        for iteration in range(max_iterations):
            y = shifted @ x
            for found in vectors:  # deflate already-found directions
                y -= (y @ found) * found
            norm = np.linalg.norm(y)
            if norm == 0:
                break
            y /= norm
            if np.linalg.norm(y - x) < tolerance or np.linalg.norm(y + x) < tolerance:
                x = y
                converged = True
                break
            x = y
        if not converged:
            raise NumericalError(
                f"eigensolver did not converge within {max_iterations} iterations")
        eigenvalue = shift - float(x @ (shifted @ x))
        values.append(eigenvalue)
        vectors.append(x)
    order = np.argsort(values)
    values = np.array(values)[order]
    basis = np.column_stack([vectors[i] for i in order])
    return values, basis


def fiedler_vector(net, force_iterative=False):
    """Eigenvector of L for the second-smallest eigenvalue.

    The constant vector always spans part of the bottom eigenspace (all
    of it when the network is disconnected and the zero eigenvalue is
    degenerate), so the basis is orthogonalized against it and the first
    non-vanishing direction is returned.
    """
    lap = laplacian_matrix(net)
    n = lap.shape[0]
    _, vectors = symmetric_eigen(lap, min(2, n), force_iterative=force_iterative)
    ones = np.full(n, 1.0 / np.sqrt(n))
    for i in range(vectors.shape[1] - 1, -1, -1):
        candidate = vectors[:, i] - (vectors[:, i] @ ones) * ones
        norm = np.linalg.norm(candidate)
        if norm > 1e-9:
            return candidate / norm
    return vectors[:, -1]


def spectral_communities(net, method="knsc1", k=2, seed=0):
    """Partition nodes using Laplacian eigenvectors.

    eig1 thresholds the Fiedler vector at 0 (ratio-cut bipartition).
    knsc1 runs k-means on the row-normalized first k eigenvectors of the
    normalized Laplacian.  spectral_kmeans does the same on the
    unnormalized embedding.
    """
    method = method.lower()
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    n = net.node_count
    if method == "eig1":
        vector = fiedler_vector(net)
        labels = [0 if x >= 0 else 1 for x in vector]
        return Partition(labels)
    if not 2 <= k <= n:
        raise ParameterError(f"k must be in [2, {n}], got {k}")
    lap = laplacian_matrix(net, normalized=(method == "knsc1"))
    _, embedding = symmetric_eigen(lap, k)
    embedding = embedding.copy()
    if method == "knsc1":
        norms = np.linalg.norm(embedding, axis=1)
        positive = norms > 0
        embedding[positive] /= norms[positive, None]
    return Partition(lloyd(embedding, k, SplitMix64(seed)))
