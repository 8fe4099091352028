"""Synthetic network models: seeded random generators and regular topologies.

Every random model is driven by :class:`netmine.rng.SplitMix64`, so the
same seed yields a byte-identical link set on every run.
"""

from __future__ import annotations

from .core import Network
from .errors import ParameterError
from .rng import SplitMix64


def _max_links(n):
    return n * (n - 1) // 2


def _check_m(n, m, minimum=0):
    if m < minimum:
        raise ParameterError(f"need at least {minimum} links for {n} nodes, got {m}")
    if m > _max_links(n):
        raise ParameterError(f"{m} links exceed the {_max_links(n)} possible for {n} nodes")


def erdos_renyi(n, m, seed=0):
    """Uniform random graph with exactly ``m`` distinct links."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    _check_m(n, m)
    net = Network(node_count=n)
    rng = SplitMix64(seed)
    if m > _max_links(n) // 2:
        # Dense case: pick the complement uniformly instead.
        holes = set()
        target = _max_links(n) - m
        while len(holes) < target:
            u, v = rng.sample_pair(n)
            holes.add((u, v) if u < v else (v, u))
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) not in holes:
                    net.add_link(u, v)
        return net
    while net.link_count < m:
        u, v = rng.sample_pair(n)
        net.add_link_if_absent(u, v)
    return net


def gilbert(n, p, seed=0):
    """Each of the n(n-1)/2 possible links exists independently with probability ``p``."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"probability must be in [0, 1], got {p}")
    net = Network(node_count=n)
    rng = SplitMix64(seed)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                net.add_link(u, v)
    return net


def anchored(n, m, seed=0):
    """Random graph where every node i > 0 keeps a link to some lower index.

    The anchor of node i is chosen uniformly from 0..i-1; the remaining
    m - (n - 1) links are uniform over the free pairs.
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    _check_m(n, m, minimum=max(0, n - 1))
    net = Network(node_count=n)
    rng = SplitMix64(seed)
    for i in range(1, n):
        net.add_link(i, rng.randint(0, i - 1))
    while net.link_count < m:
        u, v = rng.sample_pair(n)
        net.add_link_if_absent(u, v)
    return net


def connected_random(n, m, seed=0):
    """Random graph guaranteed to form a single connected component.

    A uniformly-grown random tree (each node attaches to a uniform
    earlier node after a seeded relabeling) is filled up to ``m`` links.
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    _check_m(n, m, minimum=max(0, n - 1))
    net = Network(node_count=n)
    rng = SplitMix64(seed)
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        net.add_link(order[i], order[rng.randint(0, i - 1)])
    while net.link_count < m:
        u, v = rng.sample_pair(n)
        net.add_link_if_absent(u, v)
    return net


def watts_strogatz(n, k, p, seed=0):
    """Small-world model: ring lattice of mean degree ``k`` with rewiring.

    Each lattice link keeps its source; with probability ``p`` the target
    is moved to a uniform node, skipping moves that would create a
    self-loop or a duplicate.  The link count n*k/2 is preserved.
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    if k % 2 != 0 or k < 0:
        raise ParameterError(f"k must be even and >= 0, got {k}")
    if k >= n:
        raise ParameterError(f"k must be smaller than n, got k={k}, n={n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"probability must be in [0, 1], got {p}")
    net = Network(node_count=n)
    rng = SplitMix64(seed)
    for offset in range(1, k // 2 + 1):
        for u in range(n):
            net.add_link_if_absent(u, (u + offset) % n)
    if p == 0.0:
        return net
    for offset in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + offset) % n
            if rng.random() >= p:
                continue
            index = net.link_index(u, v)
            if index is None:
                continue  # already rewired away by an earlier pass
            w = rng.randint(0, n - 1)
            if w == u or net.has_link(u, w):
                continue
            net.remove_link(index)
            net.add_link(u, w)
    return net


def barabasi_albert(n, m_total, seed=0):
    """Preferential-attachment network with ``n`` nodes and exactly ``m_total`` links.

    New nodes attach to existing ones with probability proportional to
    current degree.  Links per new node is round(m_total / n); the
    deficit left by the complete initial core is spread one extra link
    at a time over the earliest new nodes.
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    _check_m(n, m_total)
    per_node = round(m_total / n) if n else 0
    core = min(n, per_node + 1)
    core_links = _max_links(core)
    grown = n - core
    if core_links > m_total:
        raise ParameterError(f"{m_total} links infeasible: initial core already needs {core_links}")
    # Spread the gap left by the core over the growth steps, earliest first,
    # capped by how many distinct targets exist when each node arrives.
    wanted = [per_node] * grown
    deficit = m_total - core_links - grown * per_node
    if deficit > 0:
        for t in range(grown):
            take = min((core + t) - wanted[t], deficit)
            wanted[t] += take
            deficit -= take
    elif deficit < 0:
        # Shave one link at a time cycling from the tail, so late nodes
        # keep at least one link whenever the budget allows.
        t = grown - 1
        while deficit < 0 and any(w > 0 for w in wanted):
            if wanted[t] > 0:
                wanted[t] -= 1
                deficit += 1
            t = t - 1 if t > 0 else grown - 1
    if deficit != 0:
        raise ParameterError(f"{m_total} links infeasible for {n} nodes")

    net = Network(node_count=n)
    rng = SplitMix64(seed)
    endpoints = []  # one entry per link endpoint: sampling is degree-proportional
    for u in range(core):
        for v in range(u + 1, core):
            net.add_link(u, v)
            endpoints.append(u)
            endpoints.append(v)
    for t in range(grown):
        u = core + t
        chosen = set()
        while len(chosen) < wanted[t]:
            if endpoints:
                v = endpoints[rng.randint(0, len(endpoints) - 1)]
            else:
                v = rng.randint(0, u - 1)  # degree-0 bootstrap: uniform
            if v == u or v in chosen:
                continue
            chosen.add(v)
        for v in sorted(chosen):
            net.add_link(u, v)
            endpoints.append(u)
            endpoints.append(v)
    return net


def price_citation(n, m_out, seed=0):
    """Directed citation-style growth; targets drawn with probability ~ in-degree + 1.

    Node i cites min(i, m_out) distinct earlier nodes.
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    if m_out < 1:
        raise ParameterError("m_out must be >= 1")
    net = Network(directed=True, node_count=n)
    rng = SplitMix64(seed)
    weights = []  # node repeated (in-degree + 1) times
    weights.append(0)
    for u in range(1, n):
        wanted = min(u, m_out)
        chosen = set()
        while len(chosen) < wanted:
            v = weights[rng.randint(0, len(weights) - 1)]
            if v == u or v in chosen:
                continue
            chosen.add(v)
        for v in sorted(chosen):
            net.add_link(u, v)
            weights.append(v)
        weights.append(u)
    return net


# -- regular models ---------------------------------------------------


def complete(n):
    net = Network(node_count=n)
    for u in range(n):
        for v in range(u + 1, n):
            net.add_link(u, v)
    return net


def star(n):
    """Hub node 0 connected to every other node."""
    net = Network(node_count=n)
    for v in range(1, n):
        net.add_link(0, v)
    return net


def ring(n):
    net = Network(node_count=n)
    for u in range(n):
        net.add_link_if_absent(u, (u + 1) % n)
    return net


def tandem(n):
    """Open chain: the ring without its closing link."""
    net = Network(node_count=n)
    for u in range(n - 1):
        net.add_link(u, u + 1)
    return net


def mesh(rows, cols):
    if rows < 1 or cols < 1:
        raise ParameterError("mesh dimensions must be >= 1")
    net = Network(node_count=rows * cols)
    for r in range(rows):
        for c in range(cols):
            u = r * cols + c
            if c + 1 < cols:
                net.add_link(u, u + 1)
            if r + 1 < rows:
                net.add_link(u, u + cols)
    return net


def torus(rows, cols):
    """Mesh with opposite borders joined (skipping degenerate wraps)."""
    net = mesh(rows, cols)
    for r in range(rows):
        if cols > 1:
            net.add_link_if_absent(r * cols, r * cols + cols - 1)
    for c in range(cols):
        if rows > 1:
            net.add_link_if_absent(c, (rows - 1) * cols + c)
    return net


def hypercube(d):
    if d < 1:
        raise ParameterError("hypercube dimension must be >= 1")
    n = 1 << d
    net = Network(node_count=n)
    for u in range(n):
        for bit in range(d):
            v = u ^ (1 << bit)
            if u < v:
                net.add_link(u, v)
    return net


def binary_tree(depth):
    """Complete binary tree with ``depth`` levels (2^depth - 1 nodes, root 0)."""
    if depth < 1:
        raise ParameterError("depth must be >= 1")
    n = (1 << depth) - 1
    net = Network(node_count=n)
    for u in range(n):
        for child in (2 * u + 1, 2 * u + 2):
            if child < n:
                net.add_link(u, child)
    return net


def isolates(n):
    return Network(node_count=n)


RANDOM_MODELS = {
    "erdos_renyi": erdos_renyi,
    "gilbert": gilbert,
    "anchored": anchored,
    "connected_random": connected_random,
    "watts_strogatz": watts_strogatz,
    "barabasi_albert": barabasi_albert,
    "price": price_citation,
}

REGULAR_MODELS = {
    "complete": complete,
    "star": star,
    "ring": ring,
    "tandem": tandem,
    "mesh": mesh,
    "torus": torus,
    "hypercube": hypercube,
    "binary_tree": binary_tree,
    "isolates": isolates,
}
