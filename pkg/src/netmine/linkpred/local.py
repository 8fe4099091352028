"""Local link scores built from the two endpoints' direct neighborhoods.

Every ratio-style score is defined as 0 when its denominator vanishes,
and Adamic-Adar skips shared neighbors of degree 1 (whose log is 0).
"""

from __future__ import annotations

import math

from .. import hal
from ..core import ScoreMatrix
from ..errors import UnsupportedDirectionError


def _common(sets, u, v):
    return sets[u] & sets[v]


def _score_common_neighbors(sets, degree, u, v):
    return float(len(_common(sets, u, v)))


def _score_adamic_adar(sets, degree, u, v):
    total = 0.0
    for w in _common(sets, u, v):
        if degree[w] > 1:
            total += 1.0 / math.log(degree[w])
    return total


def _score_resource_allocation(sets, degree, u, v):
    return sum(1.0 / degree[w] for w in _common(sets, u, v) if degree[w] > 0)


def _score_jaccard(sets, degree, u, v):
    union = len(sets[u] | sets[v])
    return len(_common(sets, u, v)) / union if union else 0.0


def _score_lhn_local(sets, degree, u, v):
    denom = degree[u] * degree[v]
    return len(_common(sets, u, v)) / denom if denom else 0.0


def _score_salton(sets, degree, u, v):
    denom = math.sqrt(degree[u] * degree[v])
    return len(_common(sets, u, v)) / denom if denom else 0.0


def _score_sorensen(sets, degree, u, v):
    denom = degree[u] + degree[v]
    return 2.0 * len(_common(sets, u, v)) / denom if denom else 0.0


def _score_hub_promoted(sets, degree, u, v):
    denom = min(degree[u], degree[v])
    return len(_common(sets, u, v)) / denom if denom else 0.0


def _score_hub_depressed(sets, degree, u, v):
    denom = max(degree[u], degree[v])
    return len(_common(sets, u, v)) / denom if denom else 0.0


def _score_preferential_attachment(sets, degree, u, v):
    return float(degree[u] * degree[v])


def _adaptive_gamma(net):
    """Degree-penalization exponent steered by the network's clustering.

    Highly clustered networks penalize hub intermediaries harder; the
    exponent interpolates between resource-allocation-like (1) behavior
    at full clustering and common-neighbors-like (0) at none.
    """
    from ..metrics import clustering_coefficient

    return float(clustering_coefficient(net).values.mean())


LOCAL_METHODS = {
    "common_neighbors": _score_common_neighbors,
    "adamic_adar": _score_adamic_adar,
    "resource_allocation": _score_resource_allocation,
    "adaptive_degree_penalization": None,  # handled separately: needs a network-level exponent
    "jaccard": _score_jaccard,
    "lhn_local": _score_lhn_local,
    "salton": _score_salton,
    "sorensen": _score_sorensen,
    "hub_promoted": _score_hub_promoted,
    "hub_depressed": _score_hub_depressed,
    "preferential_attachment": _score_preferential_attachment,
}


DENSE_PAIR_LIMIT = 2000


def check_dense_size(n):
    """All-pairs dense scoring is capped; larger networks must pass
    explicit candidate pairs."""
    from ..errors import ParameterError

    if n > DENSE_PAIR_LIMIT:
        raise ParameterError(
            f"dense all-pairs scoring is limited to {DENSE_PAIR_LIMIT} nodes "
            f"(got {n}); pass an explicit candidate pair list instead")


def local_score(net, method, pairs="all"):
    """Score node pairs with one of the local methods.

    ``pairs`` is "all" (every unordered pair, dense result, networks up
    to 2000 nodes) or an iterable of (u, v) pairs (sparse result, any
    size).
    """
    if net.directed:
        raise UnsupportedDirectionError("local link scores require an undirected network")
    if method not in LOCAL_METHODS:
        raise ValueError(f"unknown local method {method!r}; choose from {sorted(LOCAL_METHODS)}")
    n = net.node_count
    sets = [set(net.neighbors(u)) for u in range(n)]
    degree = [len(s) for s in sets]

    if method == "adaptive_degree_penalization":
        gamma = _adaptive_gamma(net)

        def score(u, v):
            return sum(degree[w] ** (-gamma) for w in _common(sets, u, v) if degree[w] > 0)
    else:
        fn = LOCAL_METHODS[method]

        def score(u, v):
            return fn(sets, degree, u, v)

    if pairs == "all":
        check_dense_size(n)
        matrix = ScoreMatrix(n, symmetric=True, dense=True)

        def row(u):
            return [score(u, v) for v in range(u + 1, n)]

        for u, values in enumerate(hal.parallel_map(0, n - 1, row) if n else []):
            for offset, value in enumerate(values):
                matrix.set(u, u + 1 + offset, value)
        return matrix

    matrix = ScoreMatrix(n, symmetric=True, dense=False)
    for u, v in pairs:
        matrix.set(u, v, score(u, v))
    return matrix
