import pytest

from netmine import AttributeColumn, Network, Partition, ScoreMatrix
from netmine.errors import (
    DuplicateLinkError,
    ImmutableNetworkError,
    OutOfRangeError,
    SelfLoopError,
)

from conftest import random_network


def test_add_node_returns_old_count():
    net = Network()
    assert net.add_node() == 0
    assert net.node_count == 1
    net.add_nodes(4)
    assert net.add_node() == 5
    first = net.add_node()
    second = net.add_node()
    assert second == first + 1


def test_add_link_undirected_symmetry():
    net = Network(node_count=2)
    net.add_link(0, 1)
    assert net.neighbors(1) == [0]
    assert net.neighbors(0) == [1]
    assert net.has_link(1, 0)


def test_add_link_directed():
    net = Network(directed=True, node_count=2)
    net.add_link(0, 1)
    assert net.neighbors(0, "out") == [1]
    assert net.neighbors(0, "in") == []
    assert net.neighbors(1, "in") == [0]
    assert not net.has_link(1, 0)


def test_duplicate_link_rejected():
    net = Network(node_count=2)
    net.add_link(0, 1)
    with pytest.raises(DuplicateLinkError):
        net.add_link(0, 1)
    with pytest.raises(DuplicateLinkError):
        net.add_link(1, 0)


def test_self_loop_rejected():
    net = Network(node_count=1)
    with pytest.raises(SelfLoopError):
        net.add_link(0, 0)


def test_invalid_indices():
    net = Network(node_count=2)
    with pytest.raises(OutOfRangeError):
        net.neighbors(5)
    with pytest.raises(OutOfRangeError):
        net.add_link(0, 7)
    with pytest.raises(OutOfRangeError):
        net.link_ends(0)


def test_neighbors_triangle_and_star():
    net = Network(node_count=3)
    for u, v in [(0, 1), (1, 2), (2, 0)]:
        net.add_link(u, v)
    assert net.neighbors(0) == [1, 2]

    star = Network(node_count=5)
    for leaf in range(1, 5):
        star.add_link(0, leaf)
    assert star.degree(0) == 4
    assert star.degree(3) == 1


def test_degree_directions():
    net = Network(directed=True, node_count=2)
    net.add_link(0, 1)
    assert net.degree(0, "out") == 1
    assert net.degree(0, "in") == 0
    assert net.degree(0, "both") == 1


def test_remove_node_recompacts():
    net = Network(node_count=3)
    for u, v in [(0, 1), (1, 2), (2, 0)]:
        net.add_link(u, v)
    net.remove_node(2)
    assert net.node_count == 2
    assert net.link_count == 1
    assert net.has_link(0, 1)


def test_remove_only_link():
    net = Network(node_count=2)
    net.add_link(0, 1)
    net.remove_link(0)
    assert net.link_count == 0
    assert net.node_count == 2
    assert net.neighbors(0) == []


def test_remove_from_empty_errors():
    net = Network()
    with pytest.raises(OutOfRangeError):
        net.remove_node(0)


def test_remove_node_swaps_last():
    net = Network(node_count=4)
    net.add_link(0, 3)
    net.add_link(1, 3)
    net.remove_node(1)  # node 3 becomes node 1
    assert net.node_count == 3
    assert net.link_count == 1
    assert net.has_link(0, 1)


def test_attribute_columns_track_mutations():
    net = Network(node_count=2)
    column = net.add_node_attribute("weight", "numerical")
    column[0] = 1.5
    net.add_node()
    assert column[2] is None
    assert len(column) == 3
    net.remove_node(0)  # old node 2 slides into slot 0
    assert len(column) == 2
    assert column[0] is None

    links = Network(node_count=3)
    links.add_link(0, 1)
    link_col = links.add_link_attribute("cost", "string")
    link_col[0] = "x"
    links.add_link(1, 2)
    assert len(link_col) == 2


def test_attribute_kind_validation():
    column = AttributeColumn("w", "numerical")
    with pytest.raises(ValueError):
        column.append(float("nan"))
    with pytest.raises(ValueError):
        AttributeColumn("bad", "tensor")


@pytest.mark.parametrize("seed", range(30))
def test_degree_sum_and_membership_invariants(seed):
    net = random_network(seed, max_nodes=12)
    total = sum(net.degree(u) for u in range(net.node_count))
    assert total == 2 * net.link_count
    for u in range(net.node_count):
        for v in net.neighbors(u):
            assert net.has_link(u, v)
    for u, v in net.links():
        assert v in net.neighbors(u)
        assert u in net.neighbors(v)


@pytest.mark.parametrize("seed", range(10))
def test_density_after_mutations(seed):
    from netmine.rng import SplitMix64

    rng = SplitMix64(seed)
    net = Network()
    for _ in range(200):
        roll = rng.random()
        if roll < 0.4 or net.node_count < 2:
            net.add_node()
        elif roll < 0.7:
            u, v = rng.sample_pair(net.node_count)
            net.add_link_if_absent(u, v)
        elif roll < 0.85 and net.link_count:
            net.remove_link(rng.randint(0, net.link_count - 1))
        elif net.node_count:
            net.remove_node(rng.randint(0, net.node_count - 1))
        # density: every stored link references valid nodes
        for u, v in net.links():
            assert 0 <= u < net.node_count
            assert 0 <= v < net.node_count
        total = sum(net.degree(u) for u in range(net.node_count))
        assert total == 2 * net.link_count


def test_frozen_network_matches_and_rejects_mutation():
    net = random_network(3, max_nodes=10)
    frozen = net.frozen()
    assert frozen.node_count == net.node_count
    assert frozen.links() == net.links()
    for u in range(net.node_count):
        assert list(frozen.neighbors(u)) == net.neighbors(u)
    with pytest.raises(ImmutableNetworkError):
        frozen.add_node()
    with pytest.raises(ImmutableNetworkError):
        frozen.add_link(0, 1)
    assert frozen.frozen() is frozen


def test_frozen_directed_directions():
    net = Network(directed=True, node_count=3)
    net.add_link(0, 1)
    net.add_link(2, 1)
    frozen = net.frozen()
    assert frozen.neighbors(1, "in") == [0, 2]
    assert frozen.neighbors(1, "out") == []
    assert frozen.neighbors(1, "both") == [0, 2]


def test_score_matrix_modes():
    dense = ScoreMatrix(3, symmetric=True, dense=True)
    dense.set(0, 2, 1.5)
    assert dense.get(2, 0) == 1.5
    sparse = ScoreMatrix(3, symmetric=True, dense=False)
    sparse.set(2, 0, 2.5)
    assert sparse.get(0, 2) == 2.5
    assert sparse.get(0, 1) == 0.0
    assert sparse.top_pairs()[0] == (0, 2, 2.5)


def test_partition_normalizes_labels():
    partition = Partition([5, 5, 9, 5, 2])
    assert partition.labels == [0, 0, 1, 0, 2]
    assert partition.k == 3
    assert partition.communities() == [[0, 1, 3], [2], [4]]
