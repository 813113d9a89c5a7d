import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_dag
from fairdag.errors import ArgumentError
from fairdag.graph import CausalGraph
from fairdag.metrics import compare


def graph_from(edges, n=15):
    g = CausalGraph([f"v{i}" for i in range(n)])
    for u, v in edges:
        g.add_edge_unchecked(u, v)
    return g


class TestCompare:
    def test_identical_graphs(self):
        g = graph_from([(0, 1), (1, 2), (0, 3)])
        m = compare(g, g)
        assert m.precision == m.recall == m.f1 == 1.0
        assert m.nhd == 0.0 and m.nhd_ratio == 0.0
        assert m.adjacency_accuracy == 1.0

    def test_empty_prediction_all_miss(self):
        truth = graph_from([(0, 1), (1, 2)])
        pred = graph_from([])
        m = compare(pred, truth)
        assert m.precision == 0.0 and m.recall == 0.0 and m.f1 == 0.0
        assert m.nhd == pytest.approx(2 / 225)
        assert m.nhd_ratio == 1.0

    def test_hand_computed_counts(self):
        # 13 shared edges, 4 extra predictions, 15 misses on 15 nodes
        truth_edges = [(i, j) for i in range(7) for j in range(i + 1, i + 5) if j < 15][:28]
        assert len(truth_edges) == 28
        pred_edges = truth_edges[:13] + [(9, 10), (10, 11), (11, 12), (12, 13)]
        truth = graph_from(truth_edges)
        pred = graph_from(pred_edges)
        m = compare(pred, truth)
        assert (m.tp, m.fp, m.fn) == (13, 4, 15)
        assert m.precision == pytest.approx(0.7647, abs=1e-4)
        assert m.recall == pytest.approx(0.4643, abs=1e-4)
        assert m.f1 == pytest.approx(0.5778, abs=1e-4)
        assert m.edge_jaccard_accuracy == pytest.approx(0.4063, abs=1e-4)
        assert m.nhd == pytest.approx(19 / 225, abs=1e-12)
        assert m.nhd_ratio == pytest.approx(1 - m.f1, abs=1e-12)

    def test_reversed_edge_counts_fp_plus_fn(self):
        truth = graph_from([(0, 1)])
        pred = graph_from([(1, 0)])
        m = compare(pred, truth)
        assert (m.tp, m.fp, m.fn) == (0, 1, 1)

    def test_node_set_mismatch_rejected(self):
        a = CausalGraph(["x", "y"])
        b = CausalGraph(["x", "z"])
        with pytest.raises(ArgumentError):
            compare(a, b)

    def test_node_order_irrelevant(self):
        a = CausalGraph(["x", "y"])
        a.add_edge_unchecked(0, 1)  # x -> y
        b = CausalGraph(["y", "x"])
        b.add_edge_unchecked(1, 0)  # x -> y
        m = compare(a, b)
        assert m.f1 == 1.0

    def test_is_dag_reported(self):
        pred = graph_from([(0, 1), (1, 2), (2, 0)], n=3)
        truth = graph_from([(0, 1)], n=3)
        assert compare(pred, truth).is_dag is False


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 100_000))
def test_identities_on_random_pairs(seed):
    rng = np.random.default_rng(seed)
    pred = random_dag(15, rng.uniform(0.05, 0.3), rng)
    truth = random_dag(15, rng.uniform(0.05, 0.3), rng)
    m = compare(pred, truth)
    assert m.adjacency_accuracy + m.nhd == 1.0
    if m.tp + m.fp + m.fn > 0:
        assert abs(m.nhd_ratio - (1.0 - m.f1)) < 1e-12
    assert m.edge_jaccard_accuracy <= m.f1 + 1e-12
    assert compare(truth, pred).nhd == m.nhd
