"""Greedy modularity agglomeration: one merge per round, or several."""

from __future__ import annotations

import math

from ..core import Partition
from ..errors import ParameterError, UnsupportedDirectionError


def greedy_modularity(net, variant="fast"):
    """Merge communities by best modularity gain; return the peak partition.

    "fast" merges the single best linked pair per round; "multistep"
    applies the top ceil(sqrt(current communities)) non-conflicting
    merges per round.  Agglomeration runs to a single community and the
    snapshot with the highest modularity wins.  Ties break on the lowest
    community-label pair.
    """
    if variant not in ("fast", "multistep"):
        raise ValueError(f"variant must be 'fast' or 'multistep', got {variant!r}")
    if net.directed:
        raise UnsupportedDirectionError("greedy modularity requires an undirected network")
    m = net.link_count
    if m == 0:
        raise ParameterError("greedy modularity needs at least one link")
    n = net.node_count

    community = list(range(n))
    degree_total = [float(net.degree(u)) for u in range(n)]
    between = {}  # community pair -> links between them
    for u, v in net.links():
        key = (min(u, v), max(u, v))
        between[key] = between.get(key, 0) + 1

    # Q relative to singletons: track current Q incrementally.
    q = -sum((d / (2.0 * m)) ** 2 for d in degree_total)
    best_q, best_assignment = q, list(community)
    alive = set(range(n))

    def gain(a, b):
        return between[(a, b)] / m - degree_total[a] * degree_total[b] / (2.0 * m * m)

    while len(alive) > 1:
        if not between:
            break  # remaining communities are disconnected from each other
        scored = sorted(((gain(a, b), a, b) for (a, b) in between),
                        key=lambda t: (-t[0], t[1], t[2]))
        if variant == "fast":
            chosen = [scored[0]]
        else:
            budget = math.isqrt(len(alive) - 1) + 1
            chosen, used = [], set()
            for entry in scored:
                _, a, b = entry
                if a in used or b in used:
                    continue
                chosen.append(entry)
                used.update((a, b))
                if len(chosen) >= budget:
                    break
        for delta, a, b in chosen:
            q += delta
            # Fold community b into a.
            degree_total[a] += degree_total[b]
            alive.discard(b)
            for (x, y) in list(between):
                if b not in (x, y):
                    continue
                links = between.pop((x, y))
                other = x if y == b else y
                if other == a:
                    continue  # now internal to a
                key = (min(a, other), max(a, other))
                between[key] = between.get(key, 0) + links
            for u in range(n):
                if community[u] == b:
                    community[u] = a
        if q > best_q + 1e-12:
            best_q, best_assignment = q, list(community)
    return Partition(best_assignment)
