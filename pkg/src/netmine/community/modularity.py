"""Modularity of a disjoint partition."""

from __future__ import annotations

from ..errors import ParameterError, UnsupportedDirectionError


def modularity(net, partition):
    """Intra-community link excess over the degree-preserving random baseline.

    Q = sum over communities of (e_c / m - (d_c / 2m)^2), where e_c is
    the number of links inside community c, d_c the total degree of its
    members, and m the link count.  Q lies in [-0.5, 1).
    """
    if net.directed:
        raise UnsupportedDirectionError("modularity requires an undirected network")
    m = net.link_count
    if m == 0:
        raise ParameterError("modularity is undefined on a network without links")
    labels = partition.labels if hasattr(partition, "labels") else list(partition)
    if len(labels) != net.node_count:
        raise ParameterError("partition length must equal node count")
    k = max(labels) + 1 if labels else 0
    internal = [0] * k
    degree_total = [0] * k
    for u, v in net.links():
        if labels[u] == labels[v]:
            internal[labels[u]] += 1
    for u in range(net.node_count):
        degree_total[labels[u]] += net.degree(u)
    q = 0.0
    for c in range(k):
        q += internal[c] / m - (degree_total[c] / (2.0 * m)) ** 2
    return q
