import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from netmine import Network
from netmine.generators import erdos_renyi
from netmine.rng import SplitMix64

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def two_cliques_bridge():
    """Two Complete(3) cliques joined by one bridge link (2, 3)."""
    net = Network()
    net.add_nodes(6)
    for u, v in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]:
        net.add_link(u, v)
    return net


@pytest.fixture
def karate_path():
    return FIXTURES / "karate.gml"


def random_network(seed, max_nodes=8, directed=False, ensure_link=False):
    """Small random graph for oracle sweeps, sized and filled by the seed."""
    rng = SplitMix64(seed)
    n = rng.randint(2, max_nodes)
    possible = n * (n - 1) // 2
    lo = 1 if ensure_link else 0
    m = rng.randint(min(lo, possible), possible)
    net = erdos_renyi(n, m, seed=rng.next_u64())
    if directed:
        flipped = Network(directed=True, node_count=n)
        for u, v in net.links():
            if rng.random() < 0.5:
                u, v = v, u
            flipped.add_link(u, v)
            if rng.random() < 0.3:
                flipped.add_link_if_absent(v, u)
        return flipped
    return net


def connected_random_network(seed, max_nodes=12):
    from netmine.generators import connected_random

    rng = SplitMix64(seed)
    n = rng.randint(3, max_nodes)
    possible = n * (n - 1) // 2
    m = rng.randint(n - 1, possible)
    return connected_random(n, m, seed=rng.next_u64())
