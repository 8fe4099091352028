"""Holdout evaluation of link predictors: AUC and precision at k."""

from __future__ import annotations

from ..errors import ParameterError
from ..rng import SplitMix64


def evaluate_predictor(net, score_fn, holdout_fraction=0.1, seed=0, k=10):
    """Hide a seeded sample of links, rescore, and report retrieval quality.

    ``score_fn(reduced_net)`` must return a ScoreMatrix over node pairs
    of the reduced network.  AUC is the probability that a held-out link
    outscores a uniformly random true non-link, with ties worth half.
    """
    m = net.link_count
    held_count = max(1, int(round(m * holdout_fraction)))
    if held_count >= m:
        raise ParameterError("holdout would leave the network without links")
    rng = SplitMix64(seed)
    indices = list(range(m))
    rng.shuffle(indices)
    held = sorted(indices[:held_count])
    held_pairs = [net.link_ends(i) for i in held]
    reduced = _rebuild_without(net, set((min(u, v), max(u, v)) if not net.directed else (u, v)
                                        for u, v in held_pairs))

    scores = score_fn(reduced)
    n = net.node_count
    if net.directed:
        non_links = [(u, v) for u in range(n) for v in range(n)
                     if u != v and not net.has_link(u, v)]
    else:
        non_links = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if not net.has_link(u, v)]
    if not non_links:
        raise ParameterError("network is complete; nothing to rank held-out links against")

    wins = 0.0
    comparisons = 0
    for u, v in held_pairs:
        positive = scores.get(u, v)
        for a, b in non_links:
            negative = scores.get(a, b)
            if positive > negative:
                wins += 1.0
            elif positive == negative:
                wins += 0.5
            comparisons += 1
    auc = wins / comparisons

    candidates = [(u, v) for u, v in non_links] + held_pairs
    candidates.sort(key=lambda p: (-scores.get(*p), p))
    held_set = set((min(u, v), max(u, v)) if not net.directed else (u, v) for u, v in held_pairs)
    top = candidates[:k]
    hits = sum(1 for u, v in top
               if ((min(u, v), max(u, v)) if not net.directed else (u, v)) in held_set)
    return {
        "held_out": held_count,
        "auc": auc,
        "precision_at_k": hits / len(top) if top else 0.0,
        "k": k,
    }


def _rebuild_without(net, removed_keys):
    from ..core import Network

    reduced = Network(net.directed)
    reduced.add_nodes(net.node_count)
    for u, v in net.links():
        key = (u, v) if net.directed else (min(u, v), max(u, v))
        if key not in removed_keys:
            reduced.add_link(u, v)
    return reduced
