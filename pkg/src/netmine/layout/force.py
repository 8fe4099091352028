"""Force-directed layouts: Fruchterman-Reingold and Kamada-Kawai."""

from __future__ import annotations

import numpy as np

from .. import hal
from ..metrics.paths import bfs_distances, out_adjacency
from ..rng import SplitMix64
from .positions import LayoutPositions, normalize_positions

IDEAL_COEFFICIENT = 1.0   # C in k = C * sqrt(area / n), unit-square area
INITIAL_TEMPERATURE = 0.1  # fraction of the frame
STRESS_TOLERANCE = 1e-4
STRESS_MAX_ITERATIONS = 500


def _seed_coords(n, seed):
    rng = SplitMix64(seed)
    return np.array([[rng.random(), rng.random()] for _ in range(n)])


def fruchterman_reingold(net, iterations=100, seed=0, normalize=True):
    """Spring-electrical layout: k^2/d repulsion, d^2/k attraction on links,
    displacement capped by a linearly cooling temperature."""
    n = net.node_count
    coords = _seed_coords(n, seed)
    if n == 0:
        return LayoutPositions(net, coords.reshape(0, 2))
    k = IDEAL_COEFFICIENT * np.sqrt(1.0 / n)
    temperature = INITIAL_TEMPERATURE
    dt = temperature / (iterations + 1)
    links = net.links()

    for _ in range(iterations):
        def repulsion(u):
            delta = coords[u] - coords
            dist = np.hypot(delta[:, 0], delta[:, 1])
            dist[u] = np.inf
            dist = np.maximum(dist, 1e-9)
            return ((k * k / dist**2)[:, None] * delta).sum(axis=0)

        displacement = np.vstack(hal.parallel_map(0, n - 1, repulsion))
        for u, v in links:
            delta = coords[u] - coords[v]
            dist = max(float(np.hypot(delta[0], delta[1])), 1e-9)
            pull = (dist / k) * delta
            displacement[u] -= pull
            displacement[v] += pull
        length = np.hypot(displacement[:, 0], displacement[:, 1])
        length = np.maximum(length, 1e-12)
        step = np.minimum(length, temperature) / length
        coords += displacement * step[:, None]
        temperature = max(temperature - dt, 0.0)

    if normalize:
        coords = normalize_positions(coords)
    return LayoutPositions(net, coords)


def layout_stress(net, coords, distances=None):
    """Sum of squared differences between geometric and graph distances."""
    if distances is None:
        distances = _graph_distances(net)
    coords = np.asarray(coords, dtype=np.float64)
    total = 0.0
    n = net.node_count
    for u in range(n):
        for v in range(u + 1, n):
            d = float(np.hypot(*(coords[u] - coords[v])))
            total += (d - distances[u, v]) ** 2
    return total


def _graph_distances(net):
    n = net.node_count
    adjacency = out_adjacency(net)
    rows = hal.parallel_map(0, n - 1, lambda s: bfs_distances(net, s, adjacency))
    distances = np.full((n, n), float(n))
    for s, row in enumerate(rows):
        reachable = row >= 0
        distances[s, reachable] = row[reachable]
    if net.directed:
        distances = np.minimum(distances, distances.T)
    return distances


def kamada_kawai(net, iterations=STRESS_MAX_ITERATIONS, seed=0, normalize=True):
    """Stress-minimizing layout: springs of rest length proportional to
    graph distance, descended with an adaptive gradient step."""
    n = net.node_count
    coords = _seed_coords(n, seed)
    if n <= 1:
        return LayoutPositions(net, normalize_positions(coords) if normalize else coords)
    distances = _graph_distances(net)
    ideal = distances / distances.max()
    np.fill_diagonal(ideal, 1.0)  # placeholder; diagonal never used
    weights = 1.0 / ideal**2
    np.fill_diagonal(weights, 0.0)

    step = 0.1
    stress = layout_stress(net, coords, ideal)
    for _ in range(iterations):
        delta = coords[:, None, :] - coords[None, :, :]
        dist = np.hypot(delta[..., 0], delta[..., 1])
        np.fill_diagonal(dist, 1.0)  # weights on the diagonal are 0 anyway
        dist = np.maximum(dist, 1e-9)
        # d/dx of sum w*(dist - ideal)^2
        factor = 2.0 * weights * (dist - ideal) / dist
        np.fill_diagonal(factor, 0.0)
        gradient = (factor[..., None] * delta).sum(axis=1)
        proposal = coords - step * gradient
        new_stress = layout_stress(net, proposal, ideal)
        if new_stress < stress:
            coords = proposal
            if stress - new_stress < STRESS_TOLERANCE * max(stress, 1e-12):
                stress = new_stress
                break
            stress = new_stress
            step *= 1.1
        else:
            step *= 0.5
            if step < 1e-12:
                break
    if normalize:
        coords = normalize_positions(coords)
    return LayoutPositions(net, coords)


def layout_force(net, method="fruchterman_reingold", iterations=None, seed=0, normalize=True):
    method = method.lower()
    if method in ("fruchterman_reingold", "fr"):
        return fruchterman_reingold(net, iterations or 100, seed, normalize)
    if method in ("kamada_kawai", "kk"):
        return kamada_kawai(net, iterations or STRESS_MAX_ITERATIONS, seed, normalize)
    raise ValueError(f"unknown force layout {method!r}")
