import numpy as np
import pytest

from netmine import generators as gen
from netmine.errors import ParameterError
from netmine.metrics import clustering_coefficient
from netmine.metrics.summary import connected_components


def test_erdos_renyi_exact_links():
    net = gen.erdos_renyi(10, 15, seed=1)
    assert net.node_count == 10
    assert net.link_count == 15


def test_erdos_renyi_dense_and_infeasible():
    net = gen.erdos_renyi(6, 14, seed=2)
    assert net.link_count == 14
    with pytest.raises(ParameterError):
        gen.erdos_renyi(5, 11, seed=0)


def test_gilbert_extremes():
    assert gen.gilbert(8, 0.0, seed=3).link_count == 0
    assert gen.gilbert(8, 1.0, seed=3).link_count == 28


def test_gilbert_binomial_mean():
    counts = [gen.gilbert(20, 0.3, seed=s).link_count for s in range(40)]
    expected = 0.3 * 190
    assert abs(np.mean(counts) - expected) < 6  # ~4 sigma for 40 draws


def test_anchored_lower_index_links():
    net = gen.anchored(12, 20, seed=4)
    assert net.link_count == 20
    for i in range(1, 12):
        assert any(v < i for v in net.neighbors(i))
    with pytest.raises(ParameterError):
        gen.anchored(10, 5, seed=0)


@pytest.mark.parametrize("seed", range(20))
def test_connected_random_connected(seed):
    net = gen.connected_random(15, 20, seed=seed)
    assert net.link_count == 20
    _, count = connected_components(net)
    assert count == 1


def test_watts_strogatz_counts_and_lattice_clustering():
    net = gen.watts_strogatz(20, 4, 0.0, seed=0)
    assert net.link_count == 40
    mean = clustering_coefficient(net).values.mean()
    assert abs(mean - 0.5) < 1e-9  # 3(k-2)/(4(k-1)) at k=4
    rewired = gen.watts_strogatz(20, 4, 0.5, seed=7)
    assert rewired.link_count == 40


def test_watts_strogatz_parameter_checks():
    with pytest.raises(ParameterError):
        gen.watts_strogatz(10, 3, 0.1)
    with pytest.raises(ParameterError):
        gen.watts_strogatz(4, 4, 0.1)


def test_watts_strogatz_clustering_drops_with_p():
    lattice = [clustering_coefficient(gen.watts_strogatz(100, 6, 0.0, seed=s)).values.mean()
               for s in range(20)]
    shuffled = [clustering_coefficient(gen.watts_strogatz(100, 6, 1.0, seed=s)).values.mean()
                for s in range(20)]
    assert np.mean(shuffled) <= np.mean(lattice)


def test_barabasi_albert_exact_total():
    net = gen.barabasi_albert(100, 1000, seed=7)
    assert net.node_count == 100
    assert net.link_count == 1000


@pytest.mark.parametrize("n,m", [(10, 45), (2, 1), (10, 9), (50, 49), (7, 21)])
def test_barabasi_albert_feasible_extremes(n, m):
    net = gen.barabasi_albert(n, m, seed=3)
    assert net.node_count == n
    assert net.link_count == m


def test_barabasi_albert_heavy_tail():
    wins = 0
    for seed in range(100):
        ba = gen.barabasi_albert(2000, 4000, seed=seed)
        er = gen.erdos_renyi(2000, 4000, seed=seed)
        ba_max = max(ba.degree(u) for u in range(2000))
        er_max = max(er.degree(u) for u in range(2000))
        wins += ba_max > er_max
    assert wins >= 95


def test_price_directed_citations():
    net = gen.price_citation(50, 3, seed=9)
    assert net.directed
    for u in range(1, 50):
        assert net.degree(u, "out") == min(u, 3)
    assert net.degree(0, "out") == 0


def test_regular_counts():
    assert gen.complete(5).link_count == 10
    assert gen.star(6).link_count == 5
    assert gen.ring(4).link_count == 4
    assert gen.tandem(4).link_count == 3
    assert gen.mesh(3, 4).link_count == 3 * 3 + 4 * 2
    assert gen.isolates(7).link_count == 0
    assert gen.binary_tree(3).node_count == 7


def test_hypercube_degrees():
    net = gen.hypercube(3)
    assert net.node_count == 8
    assert all(net.degree(u) == 3 for u in range(8))


def test_torus_wraps():
    net = gen.torus(3, 4)
    assert all(net.degree(u) == 4 for u in range(12))


def test_seed_determinism():
    for model, args in [(gen.erdos_renyi, (30, 60)), (gen.gilbert, (30, 0.2)),
                        (gen.anchored, (30, 60)), (gen.connected_random, (30, 60)),
                        (gen.watts_strogatz, (30, 4, 0.3)), (gen.barabasi_albert, (30, 90)),
                        (gen.price_citation, (30, 2))]:
        first = model(*args, seed=42)
        second = model(*args, seed=42)
        assert first.links() == second.links()
        different = model(*args, seed=43)
        assert first.links() != different.links() or first.link_count == 0


def test_no_self_loops_or_duplicates():
    for seed in range(5):
        for net in (gen.erdos_renyi(20, 50, seed=seed),
                    gen.watts_strogatz(20, 4, 0.8, seed=seed),
                    gen.barabasi_albert(20, 60, seed=seed),
                    gen.price_citation(20, 2, seed=seed)):
            seen = set()
            for u, v in net.links():
                assert u != v
                key = (u, v) if net.directed else (min(u, v), max(u, v))
                assert key not in seen
                seen.add(key)


def every_model_output():
    yield gen.erdos_renyi(15, 30, seed=1)
    yield gen.gilbert(15, 0.3, seed=1)
    yield gen.anchored(15, 25, seed=1)
    yield gen.connected_random(15, 25, seed=1)
    yield gen.watts_strogatz(16, 4, 0.4, seed=1)
    yield gen.barabasi_albert(15, 40, seed=1)
    yield gen.price_citation(15, 2, seed=1)
    yield gen.complete(6)
    yield gen.star(6)
    yield gen.ring(6)
    yield gen.tandem(6)
    yield gen.mesh(3, 4)
    yield gen.torus(3, 4)
    yield gen.hypercube(3)
    yield gen.binary_tree(3)
    yield gen.isolates(5)


def test_degree_sum_invariant_on_every_model():
    for net in every_model_output():
        if net.directed:
            out_total = sum(net.degree(u, "out") for u in range(net.node_count))
            assert out_total == net.link_count
        else:
            total = sum(net.degree(u) for u in range(net.node_count))
            assert total == 2 * net.link_count
        for u in range(net.node_count):
            for v in net.neighbors(u):
                assert net.has_link(u, v) or (net.directed and net.has_link(v, u))
