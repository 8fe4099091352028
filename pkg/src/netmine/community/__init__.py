"""Community detection: hierarchical, modularity-greedy, partitional,
spectral, and overlapping methods, plus the shared modularity measure."""

from .modularity import modularity
from .hierarchical import hierarchical_cluster, shortest_path_distances
from .greedy import greedy_modularity
from .partitional import kernighan_lin, kmeans_communities
from .spectral import laplacian_matrix, spectral_communities, symmetric_eigen
from .bigclam import bigclam

__all__ = [
    "bigclam",
    "greedy_modularity",
    "hierarchical_cluster",
    "kernighan_lin",
    "kmeans_communities",
    "laplacian_matrix",
    "modularity",
    "shortest_path_distances",
    "spectral_communities",
    "symmetric_eigen",
]
