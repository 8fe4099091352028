"""Acceptance suite: one test per release criterion, at its stated
tolerance and time budget.  Run with `pytest tests/test_acceptance.py -s`
to see one PASS line per criterion."""

import math
import shutil
import subprocess
import sys
import time

import numpy as np
import pytest

import oracles
from conftest import FIXTURES, random_network

from netmine import Network, Partition, hal
from netmine import community, linkpred, metrics
from netmine.generators import (
    barabasi_albert,
    complete,
    connected_random,
    erdos_renyi,
    star,
    watts_strogatz,
    ring,
)
from netmine.io import FormatId, read_network, read_network_file, write_network
from netmine.registry import COMMUNITIES, LINKPRED, METRICS
from netmine.rng import SplitMix64


class Budget:
    def __init__(self, name, seconds):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, _exc, _tb):
        elapsed = time.monotonic() - self.start
        if exc_type is None:
            print(f"PASS: {self.name} ({elapsed:.2f}s / budget {self.seconds}s)")
            assert elapsed < self.seconds, f"{self.name} exceeded its {self.seconds}s budget"
        else:
            print(f"FAIL: {self.name} ({elapsed:.2f}s)")
        return False


def test_criterion_betweenness_range_endpoints():
    with Budget("betweenness range endpoints (K6=11, Star6 hub=31)", 1.0):
        k6 = metrics.betweenness(complete(6)).values
        assert k6.tolist() == [11.0] * 6
        hub = metrics.betweenness(star(6)).values[0]
        assert hub == 31.0


def test_criterion_decay_limits():
    with Budget("decay limits (delta->0 degree, delta=1 component size - 1)", 5.0):
        rng = SplitMix64(90)
        for _ in range(20):
            n = rng.randint(4, 16)
            maximum = n * (n - 1) // 2
            net = connected_random(n, rng.randint(n - 1, maximum), seed=rng.next_u64())
            small = metrics.decay(net, 1e-6).values / 1e-6
            degrees = np.array([net.degree(u) for u in range(n)], dtype=float)
            assert np.all(np.abs(small - degrees) / degrees < 1e-3)
            unit = metrics.decay(net, 1.0).values
            assert np.array_equal(unit, np.full(n, float(n - 1)))


def test_criterion_oracle_equivalence_200_graphs():
    with Budget("oracle equivalence on 200 random graphs (n<=8)", 30.0):
        local_methods = sorted(linkpred.LOCAL_METHODS)
        for seed in range(200):
            net = random_network(seed, max_nodes=8)
            assert np.allclose(metrics.betweenness(net).values,
                               oracles.betweenness(net), atol=1e-9)
            assert np.allclose(metrics.closeness(net).values,
                               oracles.closeness(net), atol=1e-9)
            assert np.allclose(metrics.eccentricity(net).values,
                               oracles.eccentricity(net), atol=1e-9)
            assert np.allclose(metrics.clustering_coefficient(net).values,
                               oracles.clustering(net), atol=1e-9)
            for method in local_methods:
                mine = linkpred.local_score(net, method)
                for (u, v), expected in oracles.local_scores(net, method).items():
                    assert abs(mine.get(u, v) - expected) <= 1e-9


def test_criterion_katz_and_pagerank():
    with Budget("katz series (Ring5, beta=0.1) and pagerank fixtures", 5.0):
        series = oracles.katz_series_sum(ring(5), 0.1, 60)
        mine = linkpred.katz_score(ring(5), 0.1).as_array()
        assert np.max(np.abs(mine - series)) < 1e-10
        scores = metrics.pagerank(ring(5))
        assert np.allclose(scores.values, 0.2, atol=1e-9)
        for fixture in (ring(5), complete(6), star(9),
                        erdos_renyi(25, 60, seed=3), barabasi_albert(30, 90, seed=1)):
            assert metrics.pagerank(fixture).values.sum() == pytest.approx(1.0, abs=1e-9)


def test_criterion_commute_time():
    with Budget("average commute time (exact 2-node, Monte Carlo within 5%)", 60.0):
        two = Network(node_count=2)
        two.add_link(0, 1)
        assert linkpred.average_commute_time(two).get(0, 1) == pytest.approx(2.0, abs=1e-9)
        rng = SplitMix64(7)
        for trial in range(5):
            n = rng.randint(5, 20)
            maximum = n * (n - 1) // 2
            net = connected_random(n, rng.randint(n - 1, maximum), seed=rng.next_u64())
            act = linkpred.average_commute_time(net)
            u = rng.randint(0, n - 1)
            v = (u + 1 + rng.randint(0, n - 2)) % n
            estimate = oracles.commute_time_mc(net, u, v, walks=100_000, seed=trial)
            assert abs(estimate - act.get(u, v)) / act.get(u, v) < 0.05


def test_criterion_community_recovery(two_cliques_bridge, karate_path):
    with Budget("community recovery (bridge fixture + karate factions)", 10.0):
        expected_q = 6.0 / 7.0 - 0.5
        fast = community.greedy_modularity(two_cliques_bridge, "fast")
        assert fast.labels == [0, 0, 0, 1, 1, 1]
        assert community.modularity(two_cliques_bridge, fast) == \
            pytest.approx(expected_q, abs=1e-9)
        eig = community.spectral_communities(two_cliques_bridge, "eig1")
        assert eig.labels == [0, 0, 0, 1, 1, 1]
        assert community.modularity(two_cliques_bridge, eig) == \
            pytest.approx(expected_q, abs=1e-9)

        karate = read_network_file(karate_path)
        club = karate.node_attributes["club"].values
        reference = [0 if value == club[0] else 1 for value in club]
        partition = community.spectral_communities(karate, "knsc1", k=2)
        agree = sum(a == b for a, b in zip(partition.labels, reference))
        assert max(agree, karate.node_count - agree) / karate.node_count >= 0.9


def test_criterion_generator_contracts():
    with Budget("generator contracts (BA counts, WS clustering, connectivity)", 10.0):
        ba = barabasi_albert(100, 1000, seed=7)
        assert ba.node_count == 100
        assert ba.link_count == 1000
        ws = watts_strogatz(20, 4, 0.0, seed=0)
        mean = metrics.clustering_coefficient(ws).values.mean()
        assert abs(mean - 0.5) < 1e-9
        from netmine.metrics.summary import connected_components

        for seed in range(100):
            net = connected_random(20, 30, seed=seed)
            _, count = connected_components(net)
            assert count == 1


def test_criterion_io_round_trip():
    with Budget("I/O round trip (50 networks x 5 formats)", 10.0):
        rng = SplitMix64(11)
        nets = []
        while len(nets) < 50:
            n = rng.randint(4, 14)
            maximum = n * (n - 1) // 2
            net = connected_random(n, rng.randint(n - 1, maximum), seed=rng.next_u64())
            weight = net.add_node_attribute("weight", "numerical")
            name = net.add_node_attribute("name", "string")
            for u in range(n):
                weight[u] = round(rng.random() * 100, 6)
                name[u] = f"item {u}"
            nets.append(net)
        for net in nets:
            reference = sorted((min(u, v), max(u, v)) for u, v in net.links())
            for format_id in FormatId:
                back = read_network(write_network(net, format_id), format_id)
                assert back.node_count == net.node_count, format_id
                assert sorted((min(u, v), max(u, v)) for u, v in back.links()) == reference
                if format_id in (FormatId.GDF, FormatId.GML, FormatId.GRAPHML):
                    for column_name in ("weight", "name"):
                        mine = net.node_attributes[column_name].values
                        theirs = back.node_attributes[column_name].values
                        for a, b in zip(mine, theirs):
                            if isinstance(a, float):
                                assert abs(a - b) < 1e-9
                            else:
                                assert str(a) == str(b)


def test_criterion_parallel_determinism(two_cliques_bridge, karate_path):
    with Budget("parallel determinism (1, 2, 8 workers)", 60.0):
        fixtures = [two_cliques_bridge, connected_random(12, 24, seed=2),
                    read_network_file(karate_path)]
        runs = []
        for workers in (1, 2, 8):
            hal.configure(workers)
            try:
                blob = []
                for net in fixtures:
                    for name, algorithm in sorted(METRICS.items()):
                        params = {"delta": 0.3, "path_limit": 3} if name in ("katz", "diffusion") \
                            else ({"delta": 0.5} if "decay" in name else {})
                        if name == "katz":
                            params = {"delta": 0.1}
                        if name == "link_rays":
                            params = {"max_length": 3}
                        result = algorithm.run(net, params)
                        blob.append((name, _digest(result, algorithm.kind, net)))
                    for name in ("fastgreedy", "multistep", "kernighan_lin", "eig1"):
                        partition = COMMUNITIES[name].run(net)
                        blob.append((name, tuple(_partition(partition).labels)))
                    blob.append(("kmeans", tuple(
                        COMMUNITIES["kmeans"].run(net, {"k": 2, "seed": 3}).labels)))
                    blob.append(("knsc1", tuple(
                        _partition(COMMUNITIES["knsc1"].run(net, {"k": 2})).labels)))
                    for name in ("adamic_adar", "jaccard", "katz", "random_walk_restart",
                                 "pseudoinverse_laplacian", "random_forest_kernel"):
                        params = {"beta": 0.05} if name == "katz" else {}
                        matrix = LINKPRED[name].run(net, params)
                        blob.append((name, matrix.as_array().tobytes()))
                runs.append(blob)
            finally:
                hal.configure(None)
        assert runs[0] == runs[1] == runs[2]


def _partition(result):
    return result[0] if isinstance(result, tuple) else result


def _digest(result, kind, net):
    if kind == "node":
        return result.values.tobytes()
    if kind == "hub_authority":
        return result[0].values.tobytes() + result[1].values.tobytes()
    if kind == "link_list":
        return tuple(round(result.get(u, v), 15) for u, v in net.links())
    if kind == "record":
        return tuple(sorted((k, v) for k, v in result.items()))
    raise AssertionError(kind)


def test_criterion_cli_end_to_end(tmp_path):
    with Budget("CLI end-to-end (generate / analyze / convert round trip)", 60.0):
        exe = shutil.which("netmine")
        assert exe is not None, "the netmine console script must be installed"

        gml_path = tmp_path / "g.gml"
        result = subprocess.run(
            [exe, "generate", "--model", "ba", "--nodes", "100", "--links", "1000",
             "--seed", "7", "-o", str(gml_path)], capture_output=True, text=True)
        assert result.returncode == 0, result.stderr
        generated = read_network_file(gml_path)
        assert generated.node_count == 100
        assert generated.link_count == 1000

        result = subprocess.run(
            [exe, "analyze", "--metric", "pagerank", "-i", str(FIXTURES / "karate.gml")],
            capture_output=True, text=True)
        assert result.returncode == 0, result.stderr
        lines = result.stdout.strip().splitlines()
        assert len(lines) == 34
        assert all("\t" in line for line in lines)
        assert abs(sum(float(line.split("\t")[1]) for line in lines) - 1.0) < 1e-9

        net_path = tmp_path / "g.net"
        graphml_path = tmp_path / "g.graphml"
        back_path = tmp_path / "back.net"
        subprocess.run([exe, "convert", "-i", str(gml_path), "-o", str(net_path)],
                       capture_output=True, check=True)
        subprocess.run([exe, "convert", "-i", str(net_path), "-o", str(graphml_path)],
                       capture_output=True, check=True)
        subprocess.run([exe, "convert", "-i", str(graphml_path), "-o", str(back_path)],
                       capture_output=True, check=True)
        first = read_network_file(net_path)
        second = read_network_file(back_path)
        assert first.node_count == second.node_count
        assert sorted(map(sorted, first.links())) == sorted(map(sorted, second.links()))

        bogus = subprocess.run([exe, "analyze", "--metric", "pagerank", "-i",
                                str(tmp_path / "missing.gml")], capture_output=True, text=True)
        assert bogus.returncode == 1
        usage = subprocess.run([exe, "analyze", "--metric", "not_a_metric", "-i", "x"],
                               capture_output=True, text=True)
        assert usage.returncode == 2
