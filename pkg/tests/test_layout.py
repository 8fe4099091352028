import math

import numpy as np
import pytest

from conftest import connected_random_network

from netmine import Network
from netmine.errors import MissingAttributeError
from netmine.generators import binary_tree, complete, ring, star
from netmine.layout import (
    StyleBinding,
    layout_force,
    layout_stress,
    layout_structured,
    normalize_positions,
    render_svg,
)
from netmine.layout.force import _graph_distances, _seed_coords
from netmine.metrics import pagerank


def test_single_node_centered():
    net = Network(node_count=1)
    for method in ("fr", "kk"):
        pos = layout_force(net, method)
        assert pos[0] == (0.5, 0.5)


def test_fr_two_nodes_near_ideal_length():
    net = Network(node_count=2)
    net.add_link(0, 1)
    pos = layout_force(net, "fr", iterations=300, seed=3, normalize=False)
    distance = math.dist(pos[0], pos[1])
    ideal = math.sqrt(1.0 / 2.0)
    assert abs(distance - ideal) / ideal < 0.2


def test_fr_deterministic_and_in_bounds():
    net = connected_random_network(4, max_nodes=15)
    first = layout_force(net, "fr", seed=9)
    second = layout_force(net, "fr", seed=9)
    assert np.array_equal(first.coords, second.coords)
    assert first.coords.min() >= 0.0
    assert first.coords.max() <= 1.0


def test_kk_beats_random_layout_stress():
    net = ring(6)
    distances = _graph_distances(net)
    ideal = distances / distances.max()
    kk = layout_force(net, "kk", seed=2, normalize=False)
    random_stress = layout_stress(net, _seed_coords(6, 123), ideal)
    assert layout_stress(net, kk.coords, ideal) < random_stress


def test_kk_ring_roughly_regular():
    net = ring(6)
    pos = layout_force(net, "kk", seed=5, normalize=False)
    linked = [math.dist(pos[u], pos[v]) for u, v in net.links()]
    assert max(linked) / min(linked) < 1.5


def test_circular_angles():
    net = ring(4)
    pos = layout_structured(net, "circular")
    center = np.array([0.5, 0.5])
    angles = sorted((math.degrees(math.atan2(*(pos.coords[u] - center)[::-1])) + 360) % 360
                    for u in range(4))
    assert angles == pytest.approx([0.0, 90.0, 180.0, 270.0], abs=1e-6)


def test_circular_order_score():
    net = star(5)
    score = pagerank(net)
    pos = layout_structured(net, "circular", order_score=score)
    # hub has the top score, so it lands at the last angle slot
    center = np.array([0.5, 0.5])
    hub_angle = (math.degrees(math.atan2(*(pos.coords[0] - center)[::-1])) + 360) % 360
    assert hub_angle == pytest.approx(360 * 4 / 5, abs=1e-6)


def test_hierarchical_tree_layers():
    net = binary_tree(3)
    pos = layout_structured(net, "hierarchical")
    ys = pos.coords[:, 1].round(6)
    levels = sorted(set(ys), reverse=True)
    assert len(levels) == 3
    by_level = [np.count_nonzero(ys == level) for level in levels]
    assert by_level == [1, 2, 4]


def test_radial_star():
    net = star(7)
    pos = layout_structured(net, "radial")
    assert pos[0] == (0.5, 0.5)
    radii = [math.dist(pos[u], (0.5, 0.5)) for u in range(1, 7)]
    assert np.allclose(radii, radii[0])
    assert radii[0] > 0.1


def test_grid_near_square():
    net = Network(node_count=9)
    pos = layout_structured(net, "grid")
    xs = sorted(set(pos.coords[:, 0].round(6)))
    ys = sorted(set(pos.coords[:, 1].round(6)))
    assert len(xs) == 3 and len(ys) == 3


def test_star_layout_centers_max_degree():
    net = star(6)
    pos = layout_structured(net, "star")
    assert pos[0] == (0.5, 0.5)


def test_normalize_positions_margins():
    coords = np.array([[0.0, 0.0], [10.0, 5.0]])
    out = normalize_positions(coords)
    assert out.min() >= 0.05 - 1e-12
    assert out.max() <= 0.95 + 1e-12
    # aspect preserved: x-span twice the y-span
    span = out.max(axis=0) - out.min(axis=0)
    assert span[0] == pytest.approx(2 * span[1])


def test_render_element_counts():
    net = complete(3)
    pos = layout_structured(net, "circular")
    svg = render_svg(net, pos)
    assert svg.count("<circle") == 3
    assert svg.count("<line") == 3
    assert 'viewBox="0 0 800 800"' in svg
    assert svg.index("<line") < svg.index("<circle")  # nodes drawn over links


def test_render_deterministic():
    net = connected_random_network(6, max_nodes=10)
    pos = layout_force(net, "fr", seed=4)
    first = render_svg(net, pos)
    second = render_svg(net, pos)
    assert first == second


def test_render_node_size_binding():
    net = star(5)
    pos = layout_structured(net, "star")
    score = pagerank(net)
    svg = render_svg(net, pos, [StyleBinding("nodeSize", score)])
    import re

    radii = [float(r) for r in re.findall(r'r="([0-9.]+)"', svg)]
    assert radii[0] == max(radii)
    assert all(radii[0] > r for r in radii[1:])


def test_render_categorical_color_binding():
    net = Network(node_count=4)
    net.add_link(0, 1)
    column = net.add_node_attribute("kind", "categorical")
    for u, value in enumerate(["a", "b", "a", "b"]):
        column[u] = value
    pos = layout_structured(net, "grid")
    svg = render_svg(net, pos, [StyleBinding("nodeColor", "kind")])
    import re

    fills = re.findall(r'fill="(#[0-9a-f]{6})"', svg)
    assert fills[0] == fills[2]
    assert fills[1] == fills[3]
    assert fills[0] != fills[1]


def test_render_missing_attribute_names_source():
    net = complete(3)
    pos = layout_structured(net, "circular")
    with pytest.raises(MissingAttributeError, match="ghost"):
        render_svg(net, pos, [StyleBinding("nodeColor", "ghost")])


def test_constant_numeric_binding_maps_to_midpoint():
    net = complete(3)
    column = net.add_node_attribute("w", "numerical")
    for u in range(3):
        column[u] = 7.0
    pos = layout_structured(net, "circular")
    svg = render_svg(net, pos, [StyleBinding("nodeSize", "w")])
    import re

    radii = {float(r) for r in re.findall(r'r="([0-9.]+)"', svg)}
    assert radii == {9.0}  # middle of the default 4..14 range


def test_permutation_equivariance():
    net = ring(5)
    pos = layout_force(net, "kk", seed=8, normalize=False)
    stress_a = layout_stress(net, pos.coords)
    relabeled = Network(node_count=5)
    mapping = [4, 3, 2, 1, 0]
    for u, v in net.links():
        relabeled.add_link(mapping[u], mapping[v])
    pos_b = layout_force(relabeled, "kk", seed=8, normalize=False)
    stress_b = layout_stress(relabeled, pos_b.coords)
    assert stress_a == pytest.approx(stress_b, rel=0.2)
