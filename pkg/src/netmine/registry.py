"""Stable string names binding every algorithm for the CLI and the JSON API.

Each entry declares its parameters (name -> type/default) so both
front ends parse and validate overrides the same way.  docs/cli.md
carries the user-facing table.
"""

from __future__ import annotations

import numpy as np

from . import community, linkpred, metrics
from .core import NodeScore
from .errors import ParameterError
from .layout import layout_force, layout_structured


class Algorithm:
    """A named computation with typed, defaulted parameters."""

    def __init__(self, fn, kind, params=None, cost=None):
        self.fn = fn
        self.kind = kind  # node | node_pair_list | node_pairs | record | partition | membership
        self.params = params or {}
        self.cost = cost or (lambda n, m: n * m)

    def parse_params(self, overrides):
        values = {}
        for key, raw in (overrides or {}).items():
            if key not in self.params:
                raise ParameterError(
                    f"unknown parameter {key!r}; accepted: {sorted(self.params) or 'none'}")
            caster, _default = self.params[key]
            try:
                values[key] = caster(raw) if isinstance(raw, str) else caster(raw)
            except (TypeError, ValueError):
                raise ParameterError(f"bad value {raw!r} for parameter {key!r}") from None
        for key, (caster, default) in self.params.items():
            if key not in values:
                if default is REQUIRED:
                    raise ParameterError(f"parameter {key!r} is required")
                values[key] = default
        return values

    def run(self, net, overrides=None):
        return self.fn(net, **self.parse_params(overrides))


REQUIRED = object()


def _degree_score(net, direction):
    values = [net.degree(u, direction) for u in range(net.node_count)]
    return NodeScore(net, np.array(values, dtype=np.float64))


def _centrality_params(overrides):
    return metrics.CentralityParams(
        damping=overrides.pop("damping"),
        tolerance=overrides.pop("tolerance"),
        max_iterations=overrides.pop("max_iterations"),
    )


def _pagerank(net, damping=0.85, tolerance=1e-10, max_iterations=200):
    return metrics.pagerank(net, metrics.CentralityParams(damping, tolerance, max_iterations))


def _hits(net, tolerance=1e-10, max_iterations=200):
    return metrics.hits(net, metrics.CentralityParams(0.85, tolerance, max_iterations))


def _eigenvector(net, tolerance=1e-10, max_iterations=200):
    return metrics.eigenvector_centrality(
        net, metrics.CentralityParams(0.85, tolerance, max_iterations))


_ITER = {"tolerance": (float, 1e-10), "max_iterations": (int, 200)}

METRICS = {
    "degree": Algorithm(lambda net: _degree_score(net, "both"), "node"),
    "in_degree": Algorithm(lambda net: _degree_score(net, "in"), "node"),
    "out_degree": Algorithm(lambda net: _degree_score(net, "out"), "node"),
    "clustering": Algorithm(metrics.clustering_coefficient, "node"),
    "assortativity_biased": Algorithm(
        lambda net: metrics.assortativity(net, "biased"), "node"),
    "assortativity_unbiased": Algorithm(
        lambda net: metrics.assortativity(net, "unbiased"), "node"),
    "eccentricity": Algorithm(metrics.eccentricity, "node"),
    "closeness": Algorithm(metrics.closeness, "node"),
    "adjusted_closeness": Algorithm(metrics.adjusted_closeness, "node"),
    "avg_path_length": Algorithm(metrics.average_path_length, "node"),
    "decay": Algorithm(metrics.decay, "node", {"delta": (float, 0.5)}),
    "normalized_decay": Algorithm(metrics.normalized_decay, "node", {"delta": (float, 0.5)}),
    "betweenness": Algorithm(metrics.betweenness, "node"),
    "normalized_betweenness": Algorithm(metrics.normalized_betweenness, "node"),
    "pagerank": Algorithm(_pagerank, "node",
                          {"damping": (float, 0.85), **_ITER}),
    "hits": Algorithm(_hits, "hub_authority", dict(_ITER)),
    "eigenvector": Algorithm(_eigenvector, "node", dict(_ITER)),
    "katz": Algorithm(metrics.katz_centrality, "node", {"delta": (float, REQUIRED)}),
    "diffusion": Algorithm(metrics.diffusion_centrality, "node",
                           {"delta": (float, REQUIRED), "path_limit": (int, REQUIRED)}),
    "link_betweenness": Algorithm(metrics.link_betweenness, "link_list",
                                  cost=lambda n, m: n * m),
    "link_rays": Algorithm(metrics.link_rays, "link_list",
                           {"max_length": (int, 4)},
                           cost=lambda n, m: n * (m ** 2)),
    "summary": Algorithm(metrics.global_summary, "record"),
}


def _hierarchical(linkage):
    def run(net, k=0):
        dendrogram = community.hierarchical_cluster(net, linkage)
        if k:
            partition = dendrogram.partition_at(k)
        else:
            partition = dendrogram.best_modularity_partition(net)
        return partition, dendrogram

    return run


COMMUNITIES = {
    "single_link": Algorithm(_hierarchical("single"), "partition", {"k": (int, 0)},
                             cost=lambda n, m: n ** 3),
    "complete_link": Algorithm(_hierarchical("complete"), "partition", {"k": (int, 0)},
                               cost=lambda n, m: n ** 3),
    "average_link": Algorithm(_hierarchical("average"), "partition", {"k": (int, 0)},
                              cost=lambda n, m: n ** 3),
    "fastgreedy": Algorithm(lambda net: community.greedy_modularity(net, "fast"), "partition"),
    "multistep": Algorithm(lambda net: community.greedy_modularity(net, "multistep"),
                           "partition"),
    "kernighan_lin": Algorithm(community.kernighan_lin, "partition",
                               {"max_passes": (int, 10)}),
    "kmeans": Algorithm(community.kmeans_communities, "partition",
                        {"k": (int, REQUIRED), "seed": (int, 0)}),
    "eig1": Algorithm(lambda net: community.spectral_communities(net, "eig1"), "partition",
                      cost=lambda n, m: n ** 3),
    "knsc1": Algorithm(lambda net, k, seed: community.spectral_communities(net, "knsc1", k, seed),
                       "partition", {"k": (int, REQUIRED), "seed": (int, 0)},
                       cost=lambda n, m: n ** 3),
    "spectral_kmeans": Algorithm(
        lambda net, k, seed: community.spectral_communities(net, "spectral_kmeans", k, seed),
        "partition", {"k": (int, REQUIRED), "seed": (int, 0)}, cost=lambda n, m: n ** 3),
    "bigclam": Algorithm(community.bigclam, "membership",
                         {"k": (int, REQUIRED), "max_iterations": (int, 500),
                          "learning_rate": (float, 0.01), "seed": (int, 0)},
                         cost=lambda n, m: n ** 2),
}

LINKPRED = {name: Algorithm(
    (lambda method: lambda net: linkpred.local_score(net, method))(name), "pairs",
    cost=lambda n, m: n * n)
    for name in linkpred.LOCAL_METHODS}
LINKPRED.update({
    "katz": Algorithm(linkpred.katz_score, "pairs", {"beta": (float, REQUIRED)},
                      cost=lambda n, m: n ** 3),
    "lhn_global": Algorithm(linkpred.lhn_global_score, "pairs", {"phi": (float, 0.5)},
                            cost=lambda n, m: n ** 3),
    "random_walk": Algorithm(
        lambda net: linkpred.random_walk_scores(net, "plain"), "pairs",
        cost=lambda n, m: n * n * 30),
    "random_walk_restart": Algorithm(
        lambda net, alpha: linkpred.random_walk_scores(net, "restart", alpha), "pairs",
        {"alpha": (float, 0.15)}, cost=lambda n, m: n * n * 30),
    "flow_propagation": Algorithm(
        lambda net, alpha: linkpred.random_walk_scores(net, "flow", alpha), "pairs",
        {"alpha": (float, 0.15)}, cost=lambda n, m: n * n * 30),
    "pseudoinverse_laplacian": Algorithm(
        lambda net: linkpred.laplacian_kernel_scores(net, "pseudoinverse_laplacian"), "pairs",
        cost=lambda n, m: n ** 3),
    "average_commute_time": Algorithm(
        lambda net: linkpred.laplacian_kernel_scores(net, "average_commute_time"), "pairs",
        cost=lambda n, m: n ** 3),
    "random_forest_kernel": Algorithm(
        lambda net: linkpred.laplacian_kernel_scores(net, "random_forest_kernel"), "pairs",
        cost=lambda n, m: n ** 3),
})

LAYOUTS = {
    "fruchterman_reingold": Algorithm(
        lambda net, iterations, seed: layout_force(net, "fr", iterations, seed),
        "positions", {"iterations": (int, 100), "seed": (int, 0)}),
    "kamada_kawai": Algorithm(
        lambda net, iterations, seed: layout_force(net, "kk", iterations, seed),
        "positions", {"iterations": (int, 500), "seed": (int, 0)}),
    "circular": Algorithm(
        lambda net, order: layout_structured(
            net, "circular",
            order_score=METRICS[order].run(net) if order else None),
        "positions", {"order": (str, "")}),
    "hierarchical": Algorithm(
        lambda net, root: layout_structured(net, "hierarchical", root=root),
        "positions", {"root": (int, 0)}),
    "radial": Algorithm(
        lambda net, root: layout_structured(net, "radial", root=root),
        "positions", {"root": (int, 0)}),
    "grid": Algorithm(lambda net: layout_structured(net, "grid"), "positions"),
    "star": Algorithm(lambda net: layout_structured(net, "star"), "positions"),
}

GENERATORS_HELP = (
    "erdos_renyi(nodes,links)  gilbert(nodes,prob)  anchored(nodes,links)  "
    "connected_random(nodes,links)  watts_strogatz(nodes,degree,prob)  "
    "barabasi_albert(nodes,links)  price(nodes,out_links)  complete(nodes)  "
    "star(nodes)  ring(nodes)  tandem(nodes)  mesh(rows,cols)  torus(rows,cols)  "
    "hypercube(dim)  binary_tree(depth)  isolates(nodes)"
)
