import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fairdag.benchmark import generate_baseline
from fairdag.discovery import (
    STOP_BUDGET,
    STOP_EXHAUSTED,
    STOP_ORACLE_UNAVAILABLE,
    STOP_THRESHOLD,
    DiscoveryConfig,
    ScoringWeights,
    dynamic_score,
    hist_score,
    llm_conf_score,
    run_active_discovery,
    run_bfs_baseline,
    run_pairwise_baseline,
    select_next_pair,
)
from fairdag.errors import ArgumentError, OracleUnavailableError
from fairdag.graph import CausalGraph
from fairdag.metrics import compare
from fairdag.oracle import OracleConfig, SimulatedOracle

WEIGHTS = ScoringWeights(0.3, 0.3, 0.4)


def adult(n=800, seed=1):
    return generate_baseline(n, seed=seed)


def active_config(threshold=0.0, max_iter=210, flip=0.0, seed=1):
    return DiscoveryConfig(
        weights=WEIGHTS,
        score_threshold=threshold,
        max_iterations=max_iter,
        oracle=OracleConfig(kind="simulated", flip_probability=flip, seed=seed),
    )


class TestScoringPieces:
    def test_hist_score_values(self):
        assert hist_score(0) == 1.5
        assert hist_score(1) == 0.75
        assert hist_score(2) == 0.5

    def test_hist_score_negative_rejected(self):
        with pytest.raises(ArgumentError):
            hist_score(-1)

    def test_llm_conf_score_values(self):
        assert llm_conf_score(0.0) == pytest.approx(0.5, abs=1e-12)
        assert llm_conf_score(1.0) == pytest.approx(0.7310585786, abs=1e-9)
        assert llm_conf_score(0.5) == pytest.approx(0.6224593312, abs=1e-9)

    def test_llm_conf_score_out_of_range(self):
        with pytest.raises(ArgumentError):
            llm_conf_score(1.2)

    def test_dynamic_score_composite(self):
        got = dynamic_score(0.5, 0.5, 0, WEIGHTS)
        assert got == pytest.approx(0.936738, abs=1e-6)

    def test_dynamic_score_stat_only(self):
        w = ScoringWeights(1.0, 0.0, 0.0)
        for s in (0.0, 0.3, 1.0):
            assert dynamic_score(s, 0.5, 0, w) == pytest.approx(s)

    def test_dynamic_score_hist_only_decays_to_zero(self):
        w = ScoringWeights(0.0, 0.0, 1.0)
        values = [dynamic_score(0.0, 0.0, k, w) for k in range(0, 200, 10)]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert values[-1] < 0.01

    def test_weights_must_sum_to_one(self):
        with pytest.raises(ArgumentError):
            ScoringWeights(0.5, 0.5, 0.5)
        with pytest.raises(ArgumentError):
            ScoringWeights(1.2, -0.1, -0.1)


class TestSelectNextPair:
    def test_lexicographic_tie_break(self):
        scores = {(0, 1): 0.9, (1, 0): 0.9, (0, 2): 0.8}
        assert select_next_pair(list(scores), scores) == (0, 1)

    def test_empty_returns_none(self):
        assert select_next_pair([], {}) is None

    def test_single_candidate(self):
        assert select_next_pair([(2, 1)], {(2, 1): 0.1}) == (2, 1)

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 9999), scale=st.floats(0.1, 10.0))
    def test_argmax_invariant_under_score_rescaling(self, seed, scale):
        rng = np.random.default_rng(seed)
        pairs = [(i, j) for i in range(5) for j in range(5) if i != j]
        scores = {p: float(rng.random()) for p in pairs}
        scaled = {p: s * scale for p, s in scores.items()}
        assert select_next_pair(pairs, scores) == select_next_pair(pairs, scaled)


class TestActiveDiscovery:
    def test_perfect_oracle_recovers_exactly(self):
        b = adult()
        result = run_active_discovery(b.data, active_config(), truth=b.truth)
        m = compare(result.graph, b.truth)
        assert m.f1 == 1.0
        assert m.nhd == 0.0
        assert result.stop_reason == STOP_EXHAUSTED

    def test_budget_one_means_one_call(self):
        b = adult(n=300)
        result = run_active_discovery(b.data, active_config(max_iter=1), truth=b.truth)
        assert result.iterations_used == 1
        assert len(result.query_log) == 1
        assert result.graph.n_edges <= 1
        assert result.stop_reason == STOP_BUDGET

    def test_unreachable_threshold_stops_immediately(self):
        b = adult(n=300)
        # upper bound of the score: w_stat*1 + w_conf*sigmoid(1) + w_hist*1.5
        bound = 0.3 * 1.0 + 0.3 * (1 / (1 + math.exp(-1))) + 0.4 * 1.5
        result = run_active_discovery(
            b.data, active_config(threshold=bound + 0.01), truth=b.truth
        )
        assert result.iterations_used == 0
        assert result.graph.n_edges == 0
        assert result.stop_reason == STOP_THRESHOLD

    def test_no_duplicate_ordered_pairs(self):
        b = adult(n=300)
        result = run_active_discovery(b.data, active_config(flip=0.3), truth=b.truth)
        pairs = [r.pair for r in result.query_log]
        assert len(pairs) == len(set(pairs))

    def test_calls_bounded_by_budget(self):
        b = adult(n=300)
        for max_iter in (5, 60, 210):
            result = run_active_discovery(
                b.data, active_config(max_iter=max_iter, flip=0.2), truth=b.truth
            )
            assert result.iterations_used <= max_iter
            assert len(result.query_log) <= max_iter

    def test_output_always_dag(self):
        b = adult(n=300)
        for flip in (0.0, 0.5, 1.0):
            result = run_active_discovery(b.data, active_config(flip=flip), truth=b.truth)
            assert result.graph.is_dag()

    def test_active_cheaper_than_pairwise_on_perfect_oracle(self):
        b = adult(n=300)
        active = run_active_discovery(b.data, active_config(), truth=b.truth)
        pairwise = run_pairwise_baseline(
            SimulatedOracle(b.truth, 0.0, seed=1), b.data.names
        )
        assert compare(active.graph, b.truth).f1 == 1.0
        assert compare(pairwise.graph, b.truth).f1 == 1.0
        assert len(active.query_log) <= len(pairwise.query_log)

    def test_oracle_quality_monotone_over_seeds(self):
        f1 = {0.05: [], 0.3: []}
        for seed in range(1, 11):
            b = adult(n=200, seed=seed)
            for eps in f1:
                result = run_active_discovery(
                    b.data, active_config(flip=eps, seed=seed), truth=b.truth
                )
                f1[eps].append(compare(result.graph, b.truth).f1)
        assert np.mean(f1[0.05]) > np.mean(f1[0.3])

    def test_oracle_failure_flags_incomplete(self):
        class FailingOracle:
            records = []

            def query_edge(self, x, y):
                raise OracleUnavailableError("down")

        b = adult(n=300)
        result = run_active_discovery(b.data, active_config(), oracle=FailingOracle())
        assert result.incomplete is True
        assert result.stop_reason == STOP_ORACLE_UNAVAILABLE

    def test_needs_two_columns(self):
        from fairdag.dataset import ColumnSchema, TabularDataset

        ds = TabularDataset([ColumnSchema("x", "continuous")], [np.zeros(5)])
        with pytest.raises(ArgumentError):
            run_active_discovery(ds, active_config())


def chain_truth():
    g = CausalGraph(["a", "b", "c"])
    g.add_edge_acyclic(0, 1)
    g.add_edge_acyclic(1, 2)
    return g


class TestBfsBaseline:
    def test_chain_trace(self):
        truth = chain_truth()
        oracle = SimulatedOracle(truth, 0.0, seed=0)
        result = run_bfs_baseline(oracle, truth.nodes)
        assert result.graph.edges() == [(0, 1), (1, 2)]
        # one roots query plus four pair queries
        assert len(result.query_log) == 5
        pair_records = [r for r in result.query_log if r.pair != ("*", "*")]
        assert len(pair_records) == 4

    def test_single_variable(self):
        g = CausalGraph(["x"])
        oracle = SimulatedOracle(g, 0.0, seed=0)
        result = run_bfs_baseline(oracle, ["x"])
        assert result.graph.n_edges == 0
        assert len(result.query_log) == 1  # just the roots query

    def test_perfect_oracle_full_recovery(self):
        b = adult(n=50)
        oracle = SimulatedOracle(b.truth, 0.0, seed=0)
        result = run_bfs_baseline(oracle, b.truth.nodes)
        assert compare(result.graph, b.truth).f1 == 1.0
        assert len(result.query_log) <= 1 + 15 * 14

    def test_empty_roots_promotes_all_nodes(self):
        truth = CausalGraph(["a", "b"])  # no edges; every node is a root
        oracle = SimulatedOracle(truth, 1.0, seed=3)  # inverts root membership
        result = run_bfs_baseline(oracle, ["a", "b"])
        assert result.graph.is_dag()

    def test_output_dag_under_noise(self):
        b = adult(n=50)
        oracle = SimulatedOracle(b.truth, 0.4, seed=9)
        result = run_bfs_baseline(oracle, b.truth.nodes)
        assert result.graph.is_dag()


class TestPairwiseBaseline:
    def test_exact_call_count(self):
        b = adult(n=50)
        oracle = SimulatedOracle(b.truth, 0.0, seed=0)
        result = run_pairwise_baseline(oracle, b.truth.nodes)
        assert len(result.query_log) == 15 * 14

    def test_perfect_oracle_full_recovery(self):
        b = adult(n=50)
        oracle = SimulatedOracle(b.truth, 0.0, seed=0)
        result = run_pairwise_baseline(oracle, b.truth.nodes)
        assert compare(result.graph, b.truth).f1 == 1.0

    def test_inverted_oracle_on_empty_truth_still_dag(self):
        truth = CausalGraph([f"v{i}" for i in range(6)])
        oracle = SimulatedOracle(truth, 1.0, seed=0)  # says yes to every pair
        result = run_pairwise_baseline(oracle, truth.nodes)
        assert len(result.query_log) == 30
        assert result.graph.is_dag()
        assert result.graph.n_edges == 15  # acyclic gate keeps one direction each

    def test_needs_two_variables(self):
        oracle = SimulatedOracle(CausalGraph(["x"]), 0.0, seed=0)
        with pytest.raises(ArgumentError):
            run_pairwise_baseline(oracle, ["x"])
