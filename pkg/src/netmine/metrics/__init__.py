"""Structural properties of networks: node, link, and global scores."""

from .local import assortativity, clustering_coefficient
from .influence import (
    CentralityParams,
    diffusion_centrality,
    eigenvector_centrality,
    hits,
    katz_centrality,
    pagerank,
)
from .paths import (
    adjusted_closeness,
    average_path_length,
    betweenness,
    bfs_distances,
    closeness,
    decay,
    eccentricity,
    link_betweenness,
    link_rays,
    normalized_betweenness,
    normalized_decay,
)
from .summary import connected_components, global_summary

__all__ = [
    "CentralityParams",
    "adjusted_closeness",
    "assortativity",
    "average_path_length",
    "betweenness",
    "bfs_distances",
    "closeness",
    "clustering_coefficient",
    "connected_components",
    "decay",
    "diffusion_centrality",
    "eccentricity",
    "eigenvector_centrality",
    "global_summary",
    "hits",
    "katz_centrality",
    "link_betweenness",
    "link_rays",
    "normalized_betweenness",
    "normalized_decay",
    "pagerank",
]
