import pytest

from netmine import Network
from netmine.errors import ParseError, ReferentialError, UnknownFormatError
from netmine.generators import barabasi_albert, connected_random, watts_strogatz
from netmine.io import FormatId, detect_format, read_network, write_network
from netmine.rng import SplitMix64


def canonical_topology(net):
    if net.directed:
        links = sorted(net.links())
    else:
        links = sorted((min(u, v), max(u, v)) for u, v in net.links())
    return net.directed, net.node_count, links


def decorate(net, seed=0):
    rng = SplitMix64(seed)
    weight = net.add_node_attribute("weight", "numerical")
    tag = net.add_node_attribute("tag", "string")
    for u in range(net.node_count):
        weight[u] = round(rng.random() * 10, 6)
        tag[u] = f"node {u}" if u % 3 else None
    cost = net.add_link_attribute("cost", "numerical")
    for i in range(net.link_count):
        cost[i] = float(i) / 4.0
    return net


def assert_attributes_equal(a, b):
    assert set(a.node_attributes) == set(b.node_attributes)
    for name, column in a.node_attributes.items():
        other = b.node_attributes[name]
        for x, y in zip(column.values, other.values):
            if column.kind == "numerical" and x is not None:
                assert abs(x - y) < 1e-9
            else:
                assert (x is None and y is None) or str(x) == str(y)
    assert set(a.link_attributes) == set(b.link_attributes)


# -- hand fixtures ------------------------------------------------------


def test_pajek_fixture():
    net = read_network('*Vertices 3\n1 "a"\n2 "b"\n3 "c"\n*Edges\n1 2\n', FormatId.PAJEK)
    assert net.node_count == 3
    assert net.link_count == 1
    assert not net.directed
    assert net.node_attributes["label"].values == ["a", "b", "c"]


def test_pajek_arcs_directed():
    net = read_network("*Vertices 2\n*Arcs\n1 2\n", "pajek")
    assert net.directed
    assert net.has_link(0, 1)
    assert not net.has_link(1, 0)


def test_gml_fixture():
    net = read_network("graph [ node [ id 0 ] node [ id 1 ] edge [ source 0 target 1 ] ]",
                       "gml")
    assert net.node_count == 2
    assert net.link_count == 1


def test_gml_directed_and_unknown_keys():
    text = ('graph [ directed 1 '
            'node [ id 7 label "a" size 3.5 shape [ kind "disc" ] ] '
            'node [ id 9 ] edge [ source 7 target 9 speed 2 ] ]')
    net = read_network(text, "gml")
    assert net.directed
    assert net.node_attributes["label"][0] == "a"
    assert net.node_attributes["size"][0] == 3.5
    assert "disc" in net.node_attributes["shape"][0]
    assert net.link_attributes["speed"][0] == 2.0


def test_snap_fixture():
    net = read_network("0\t1\n1\t2\n", "snap")
    assert net.node_count == 3
    assert net.link_count == 2


def test_snap_sparse_ids_and_comments():
    net = read_network("# a comment\n5 100\n100 7\n5 7\n", "snap")
    assert net.node_count == 3
    ids = net.node_attributes["original_id"].values
    assert ids == [5.0, 7.0, 100.0]
    assert net.link_count == 3


def test_gdf_numeric_header_example():
    net = Network(node_count=2)
    column = net.add_node_attribute("weight", "numerical")
    column[0], column[1] = 1.0, 2.0
    net.add_link(0, 1)
    text = write_network(net, "gdf")
    assert text.splitlines()[0] == "nodedef>name VARCHAR,weight DOUBLE"
    back = read_network(text, "gdf")
    assert back.node_attributes["weight"].values == [1.0, 2.0]


def test_gdf_directed_flag_round_trip():
    net = Network(directed=True, node_count=3)
    net.add_link(0, 1)
    net.add_link(2, 1)
    back = read_network(write_network(net, "gdf"), "gdf")
    assert back.directed
    assert canonical_topology(back) == canonical_topology(net)


def test_empty_gml_round_trip():
    text = write_network(Network(), "gml")
    assert text.startswith("graph [")
    assert read_network(text, "gml").node_count == 0


# -- errors -------------------------------------------------------------


def test_dangling_endpoints():
    with pytest.raises(ReferentialError):
        read_network("graph [ node [ id 0 ] edge [ source 0 target 4 ] ]", "gml")
    with pytest.raises(ReferentialError):
        read_network("*Vertices 2\n*Edges\n1 9\n", "pajek")


def test_parse_errors_have_line_numbers():
    try:
        read_network("*Vertices two\n", "pajek")
    except ParseError as error:
        assert error.line == 1
    else:
        pytest.fail("expected ParseError")
    with pytest.raises(ParseError):
        read_network("", "gml")
    with pytest.raises(ParseError):
        read_network("", "graphml")
    with pytest.raises(ParseError):
        read_network("", "snap")
    with pytest.raises(ParseError):
        read_network("", "gdf")


def test_graphml_multiple_graphs_rejected():
    text = ('<graphml><graph edgedefault="undirected"></graph>'
            '<graph edgedefault="undirected"></graph></graphml>')
    with pytest.raises(ParseError, match="multiple"):
        read_network(text, "graphml")


def test_detect_format():
    assert detect_format("x.net") == FormatId.PAJEK
    assert detect_format("x.gdf") == FormatId.GDF
    assert detect_format("x.gml") == FormatId.GML
    assert detect_format("x.graphml") == FormatId.GRAPHML
    assert detect_format("x.txt") == FormatId.SNAP
    assert detect_format("<graphml xmlns='x'>") == FormatId.GRAPHML
    assert detect_format("nodedef>name VARCHAR\n") == FormatId.GDF
    assert detect_format("*Vertices 3\n1\n") == FormatId.PAJEK
    assert detect_format("graph [\n node [ id 0 ]\n]") == FormatId.GML
    assert detect_format("0\t1\n") == FormatId.SNAP
    with pytest.raises(UnknownFormatError):
        detect_format("\x00\x01\x02 binary garbage")
    with pytest.raises(UnknownFormatError):
        detect_format("x.xyz")


# -- round trips --------------------------------------------------------


def _random_topologies():
    """50 isolate-free random networks (SNAP cannot carry isolated nodes)."""
    nets = []
    for seed in range(17):
        n = 3 + seed % 9
        nets.append(connected_random(n, min(n - 1 + seed % 5, n * (n - 1) // 2), seed=seed))
    for seed in range(17):
        net = watts_strogatz(8 + seed % 10, 4, 0.3, seed=seed)
        if min(net.degree(u) for u in range(net.node_count)) == 0:
            net = connected_random(8 + seed % 10, 2 * (8 + seed % 10), seed=seed)
        nets.append(net)
    for seed in range(16):
        nets.append(barabasi_albert(6 + seed % 9, 12 + seed % 7, seed=seed))
    return nets


@pytest.mark.parametrize("format_id", list(FormatId))
def test_topology_round_trip_50_networks(format_id):
    for index, net in enumerate(_random_topologies()):
        text = write_network(net, format_id)
        back = read_network(text, format_id)
        assert canonical_topology(back) == canonical_topology(net), \
            f"{format_id.value} round trip failed on network {index}"


@pytest.mark.parametrize("format_id", [FormatId.GDF, FormatId.GML, FormatId.GRAPHML])
def test_attribute_round_trip(format_id):
    for seed in (0, 1, 2):
        net = decorate(connected_random(9, 14, seed=seed), seed)
        back = read_network(write_network(net, format_id), format_id)
        assert canonical_topology(back) == canonical_topology(net)
        assert_attributes_equal(net, back)


def test_directed_round_trips():
    from netmine.generators import price_citation

    net = price_citation(12, 2, seed=5)
    for format_id in FormatId:
        back = read_network(write_network(net, format_id), format_id,
                            directed=True if format_id in (FormatId.SNAP,) else None)
        assert back.directed, format_id
        assert canonical_topology(back) == canonical_topology(net), format_id


# -- fuzzing ------------------------------------------------------------


@pytest.mark.parametrize("format_id", list(FormatId))
def test_fuzz_never_crashes(format_id):
    rng = SplitMix64(2024)
    corpora = []
    for _ in range(40):
        length = rng.randint(0, 4096)
        corpora.append(bytes(rng.randint(0, 255) for _ in range(length)))
    # structured-ish fuzz: mutate a valid document
    base = write_network(decorate(connected_random(6, 8, seed=1)), format_id).encode()
    for _ in range(40):
        mutated = bytearray(base)
        for _m in range(rng.randint(1, 30)):
            if mutated:
                mutated[rng.randint(0, len(mutated) - 1)] = rng.randint(0, 255)
        corpora.append(bytes(mutated))
    for blob in corpora:
        text = blob.decode("utf-8", errors="replace")
        try:
            read_network(text, format_id)
        except (ParseError, ReferentialError):
            pass  # expected failure mode
