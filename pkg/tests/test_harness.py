import random

import pytest

from cyclelink.errors import CyclelinkError
from cyclelink.harness import (
    is_k_connected,
    oracle_sweep,
    random_graph,
    sample_k_connected,
    verify_theorem,
)
from cyclelink.graph import Graph, complete_graph, cycle_graph, path_graph


def test_is_k_connected_basics():
    assert is_k_connected(cycle_graph(list(range(5))), 2)
    assert not is_k_connected(cycle_graph(list(range(5))), 3)
    assert not is_k_connected(path_graph(list(range(4))), 2)
    assert is_k_connected(complete_graph(list(range(6))), 5)
    assert not is_k_connected(complete_graph(list(range(6))), 6)  # needs n > c
    assert not is_k_connected(Graph([0, 1], []), 1)


def test_is_k_connected_cut_vertex():
    # two triangles sharing vertex 2
    g = Graph(range(5), [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert is_k_connected(g, 1)
    assert not is_k_connected(g, 2)


def test_sample_k_connected_verified():
    rng = random.Random(1)
    for g in sample_k_connected(rng, 3, 6, 8, 5):
        assert is_k_connected(g, 3)


def test_sample_k_connected_impossible():
    rng = random.Random(1)
    with pytest.raises(CyclelinkError):
        sample_k_connected(rng, 9, 5, 6, 1, max_tries=50)


def test_verify_theorem_report_shape():
    report = verify_theorem(
        connectivity=4, n_low=6, n_high=7, graphs=4, subsets=2, seed=11, k=3
    )
    assert report["checks"] == 4 * 2 * 1  # one canonical order for k=3
    assert len(report["records"]) == 8
    assert report["falsifiers"] == []
    assert "elapsed_s" in report["timing"]


def test_verify_theorem_seeded_repeatability():
    kw = dict(connectivity=4, n_low=6, n_high=7, graphs=3, subsets=2, seed=5, k=3)
    r1 = verify_theorem(**kw)
    r2 = verify_theorem(**kw)
    r1.pop("timing")
    r2.pop("timing")
    assert r1 == r2


def test_worker_pool_matches_serial(monkeypatch):
    kw = dict(connectivity=4, n_low=6, n_high=7, graphs=3, subsets=2, seed=9, k=3)
    serial = verify_theorem(**kw)
    monkeypatch.setenv("CYCLELINK_WORKERS", "2")
    parallel = verify_theorem(**kw)
    serial.pop("timing")
    parallel.pop("timing")
    assert serial == parallel


def test_oracle_sweep_small(corpus_path):
    report = oracle_sweep([corpus_path], [3], limit=10)
    assert report["disagreements"] == []
    assert report["pairs"] == report["agreements"] > 0


def test_random_graph_seeded():
    g1 = random_graph(random.Random(42), 8, 0.5)
    g2 = random_graph(random.Random(42), 8, 0.5)
    assert g1 == g2
