"""Partitional methods: Kernighan-Lin bipartitioning and network k-means."""

from __future__ import annotations

import numpy as np

from ..core import Partition
from ..errors import ParameterError
from ..rng import SplitMix64


def cut_size(net, labels):
    return sum(1 for u, v in net.links() if labels[u] != labels[v])


def kernighan_lin(net, max_passes=10):
    """Balanced bipartition refined by gain-ordered node exchanges.

    Starts from the index split (first half vs second half).  Each pass
    tentatively swaps every pair once, keeps the best prefix if it
    lowers the cut, so the cut size never increases across passes.
    """
    n = net.node_count
    if n < 2:
        raise ParameterError("kernighan-lin needs at least two nodes")
    if max_passes < 1:
        raise ParameterError("max_passes must be >= 1")
    side = [0 if u < (n + 1) // 2 else 1 for u in range(n)]
    adjacency = [net.neighbors(u) for u in range(n)]

    def diff(u, current):
        external = sum(1 for v in adjacency[u] if current[v] != current[u])
        return external - (len(adjacency[u]) - external)

    for _ in range(max_passes):
        work = list(side)
        locked = [False] * n
        d = [diff(u, work) for u in range(n)]
        swaps, gains = [], []
        # A full pass pairs up every node once.
        for _ in range(n // 2):
            best = None
            for a in range(n):
                if locked[a] or work[a] != 0:
                    continue
                for b in range(n):
                    if locked[b] or work[b] != 1:
                        continue
                    linked = 1 if b in adjacency[a] else 0
                    gain = d[a] + d[b] - 2 * linked
                    if best is None or gain > best[0]:
                        best = (gain, a, b)
            if best is None:
                break
            gain, a, b = best
            swaps.append((a, b))
            gains.append(gain)
            locked[a] = locked[b] = True
            work[a], work[b] = 1, 0
            for u in range(n):
                if locked[u]:
                    continue
                for moved in (a, b):
                    if u in adjacency[moved]:
                        # After the swap, a sits on side 1 and b on side 0.
                        now_same = work[u] == work[moved]
                        d[u] += -2 if now_same else 2
        if not gains:
            break
        prefix = np.argmax(np.cumsum(gains))
        total = int(np.sum(gains[:prefix + 1]))
        if total <= 0:
            break
        for a, b in swaps[:prefix + 1]:
            side[a], side[b] = 1, 0
    return Partition(side)


def kmeans_communities(net, k, seed=0, max_rounds=100):
    """K-means over structural node features.

    Features are the closed-neighborhood row (adjacency plus self) with
    the degree appended, compared by cosine (rows are L2-normalized, so
    squared-Euclidean k-means applies).  Deterministic for a given seed.
    """
    n = net.node_count
    if not 1 <= k <= n:
        raise ParameterError(f"k must be in [1, {n}], got {k}")
    features = np.zeros((n, n + 1))
    for u in range(n):
        for v in net.neighbors(u):
            features[u, v] = 1.0
        features[u, u] = 1.0  # closed neighborhood: clique members look alike
        features[u, n] = net.degree(u)
    norms = np.linalg.norm(features, axis=1)
    nonzero = norms > 0
    features[nonzero] /= norms[nonzero, None]

    rng = SplitMix64(seed)
    return Partition(lloyd(features, k, rng, max_rounds))


def lloyd(points, k, rng, max_rounds=100):
    """Plain k-means assignment labels; empty clusters are revived with
    the worst-fit point, ties resolve to the lowest index."""
    n = len(points)
    centroids = _kmeans_plus_plus(points, k, rng)
    labels = None
    for _round in range(max_rounds):
        sq = ((points[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
        new_labels = np.argmin(sq, axis=1)
        revived = set()
        for c in range(k):
            if not np.any(new_labels == c):
                fit = sq[np.arange(n), new_labels].copy()
                fit[list(revived)] = -1.0
                farthest = int(np.argmax(fit))
                new_labels[farthest] = c
                revived.add(farthest)
        if labels is not None and np.array_equal(new_labels, labels):
            break
        labels = new_labels
        for c in range(k):
            members = points[labels == c]
            if len(members):
                centroids[c] = members.mean(axis=0)
    return labels.tolist()


def _kmeans_plus_plus(points, k, rng):
    n = len(points)
    chosen = [rng.randint(0, n - 1)]
    while len(chosen) < k:
        sq = np.min(((points[:, None, :] - points[chosen][None, :, :]) ** 2).sum(axis=2), axis=1)
        total = sq.sum()
        if total <= 0:
            # All remaining points coincide with a centroid: pick unused indices.
            for u in range(n):
                if u not in chosen:
                    chosen.append(u)
                    if len(chosen) == k:
                        break
            break
        target = rng.random() * total
        cumulative = np.cumsum(sq)
        chosen.append(int(np.searchsorted(cumulative, target, side="right")))
    return points[chosen].copy()
