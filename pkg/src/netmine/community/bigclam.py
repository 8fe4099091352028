"""Overlapping community detection by nonnegative profile factorization.

Each node carries a nonnegative strength per community; a link between u
and v is modelled with probability 1 - exp(-F_u . F_v).  Gradient ascent
on the log-likelihood pushes strengths up between linked nodes and down
between unlinked ones.
"""

from __future__ import annotations

import numpy as np

from ..core import MembershipMatrix
from ..errors import ParameterError, UnsupportedDirectionError
from ..rng import SplitMix64

_EPS = 1e-8


def _log_likelihood(strengths, adjacency_sets):
    n = len(adjacency_sets)
    gram = strengths @ strengths.T
    total_pairs = (np.sum(gram) - np.trace(gram)) / 2.0
    linked = 0.0
    linked_dot = 0.0
    for u in range(n):
        for v in adjacency_sets[u]:
            if v <= u:
                continue
            x = max(gram[u, v], _EPS)
            linked += np.log1p(-np.exp(-x))
            linked_dot += gram[u, v]
    return linked - (total_pairs - linked_dot)


def _conductance_seeds(net, k, rng):
    """Initial profiles from the k best locally-minimal ego neighborhoods."""
    n = net.node_count
    adjacency = [net.neighbors(u) for u in range(n)]
    two_m = sum(len(row) for row in adjacency)

    def conductance(u):
        inside = set(adjacency[u]) | {u}
        volume = sum(len(adjacency[w]) for w in inside)
        cut = sum(1 for w in inside for x in adjacency[w] if x not in inside)
        denom = min(volume, two_m - volume) or 1
        return cut / denom

    phi = [conductance(u) for u in range(n)]
    local_minima = [u for u in range(n)
                    if all(phi[u] <= phi[v] for v in adjacency[u])]
    local_minima.sort(key=lambda u: (phi[u], u))
    strengths = np.zeros((n, k))
    seeded = 0
    covered = set()
    for u in local_minima:
        if seeded == k:
            break
        members = set(adjacency[u]) | {u}
        if members <= covered:
            continue  # an identical or nested seed adds no second community
        strengths[u, seeded] = 1.0
        for v in adjacency[u]:
            strengths[v, seeded] = 1.0
        covered |= members
        seeded += 1
    # Noise floor keeps gradient ascent from pinning untouched profiles at 0.
    for u in range(n):
        for c in range(k):
            strengths[u, c] += 0.01 * rng.random()
    return strengths


def bigclam(net, k, max_iterations=500, learning_rate=0.01, seed=0):
    """Fit k possibly-overlapping communities by likelihood ascent.

    Full-matrix gradient steps with backtracking halving: a step is only
    accepted if it does not lower the log-likelihood, so the likelihood
    trace is non-decreasing.  Strengths stay nonnegative by projection.
    """
    if net.directed:
        raise UnsupportedDirectionError("bigclam requires an undirected network")
    if k < 1:
        raise ParameterError("k must be >= 1")
    n = net.node_count
    adjacency_sets = [set(net.neighbors(u)) for u in range(n)]
    rng = SplitMix64(seed)
    strengths = _conductance_seeds(net, k, rng)

    likelihood = _log_likelihood(strengths, adjacency_sets)
    for _ in range(max_iterations):
        gram = strengths @ strengths.T
        total = strengths.sum(axis=0)
        gradient = np.empty_like(strengths)
        for u in range(n):
            linked_sum = np.zeros(k)
            for v in adjacency_sets[u]:
                x = max(gram[u, v], _EPS)
                weight = np.exp(-x) / max(1.0 - np.exp(-x), _EPS)
                linked_sum += strengths[v] * (weight + 1.0)
            gradient[u] = linked_sum - (total - strengths[u])
        step = learning_rate
        accepted = False
        for _halving in range(30):
            candidate = np.maximum(strengths + step * gradient, 0.0)
            value = _log_likelihood(candidate, adjacency_sets)
            if value >= likelihood:
                accepted = True
                break
            step *= 0.5
        if not accepted:
            break
        if abs(value - likelihood) < 1e-9 and np.allclose(candidate, strengths):
            strengths = candidate
            likelihood = value
            break
        strengths = candidate
        likelihood = value
    return MembershipMatrix(net, strengths)
