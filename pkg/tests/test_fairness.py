import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_force_paths, random_dag
from fairdag.benchmark import generate_baseline, truth_graph
from fairdag.dataset import CONTINUOUS, ColumnSchema, TabularDataset
from fairdag.errors import ArgumentError
from fairdag.fairness import (
    FairnessSpec,
    classify_paths,
    estimate_effects,
    fairness_path_contribution,
    fairness_report,
)
from fairdag.graph import CausalGraph

SPEC = FairnessSpec()


class TestClassifyPaths:
    def test_benchmark_truth_counts(self):
        pc = classify_paths(truth_graph(), SPEC)
        assert pc.direct_count == 2
        assert pc.indirect_count == 25
        assert pc.spurious_count == 25

    def test_zero_edges_all_zero(self):
        g = CausalGraph(["sex", "race", "age", "income"])
        pc = classify_paths(g, SPEC)
        assert (pc.direct_count, pc.indirect_count, pc.spurious_count) == (0, 0, 0)

    def test_single_direct_edge(self):
        g = CausalGraph(["sex", "race", "age", "income"])
        g.add_edge_acyclic(0, 3)
        pc = classify_paths(g, SPEC)
        assert (pc.direct_count, pc.indirect_count, pc.spurious_count) == (1, 0, 0)

    def test_classes_disjoint_and_direct_bounded(self):
        pc = classify_paths(truth_graph(), SPEC)
        all_paths = [tuple(p) for p in pc.direct + pc.indirect + pc.spurious]
        assert len(all_paths) == len(set(all_paths))
        assert pc.direct_count <= len(SPEC.sensitive)
        for p in pc.direct:
            assert len(p) == 2
        for p in pc.indirect:
            assert len(p) >= 3

    @settings(max_examples=50, deadline=None)
    @given(seed=st.integers(0, 10_000), n=st.integers(3, 8))
    def test_counts_match_brute_force(self, seed, n):
        rng = np.random.default_rng(seed)
        g = random_dag(n, 0.35, rng)
        spec = FairnessSpec(sensitive=("v0", "v1"), outcome=f"v{n - 1}")
        outcome = n - 1
        direct = indirect = spurious = 0
        for s in (0, 1):
            for path in brute_force_paths(g.edges(), n, s):
                if path[-1] == outcome:
                    if len(path) == 2:
                        direct += 1
                    else:
                        indirect += 1
                elif outcome not in path:
                    spurious += 1
        pc = classify_paths(g, spec)
        assert (pc.direct_count, pc.indirect_count, pc.spurious_count) == (
            direct, indirect, spurious,
        )


class TestContribution:
    def test_benchmark_truth_value(self):
        pc = classify_paths(truth_graph(), SPEC)
        assert fairness_path_contribution(pc) == pytest.approx(27 / 52, abs=1e-12)
        assert fairness_path_contribution(pc) == pytest.approx(0.519, abs=0.001)

    def test_no_paths_is_zero(self):
        g = CausalGraph(["sex", "race", "age", "income"])
        assert fairness_path_contribution(classify_paths(g, SPEC)) == 0.0

    def test_only_spurious_is_zero(self):
        g = CausalGraph(["sex", "race", "age", "income", "other"])
        g.add_edge_acyclic(0, 4)
        assert fairness_path_contribution(classify_paths(g, SPEC)) == 0.0

    def test_only_direct_is_one(self):
        g = CausalGraph(["sex", "race", "age", "income"])
        g.add_edge_acyclic(0, 3)
        assert fairness_path_contribution(classify_paths(g, SPEC)) == 1.0


def linear_scm_dataset(n=100_000, a=0.7, b=0.5, c=0.3, seed=0):
    rng = np.random.default_rng(seed)
    s = rng.standard_normal(n)
    m = a * s + rng.standard_normal(n)
    y = b * m + c * s + rng.standard_normal(n)
    schema = [ColumnSchema("s", CONTINUOUS), ColumnSchema("m", CONTINUOUS),
              ColumnSchema("y", CONTINUOUS)]
    ds = TabularDataset(schema, [s, m, y])
    g = CausalGraph(["s", "m", "y"])
    g.add_edge_acyclic(0, 1)
    g.add_edge_acyclic(1, 2)
    g.add_edge_acyclic(0, 2)
    return ds, g


class TestEstimateEffects:
    def test_linear_scm_recovers_path_coefficients(self):
        ds, g = linear_scm_dataset()
        eff = estimate_effects(g, ds, FairnessSpec(sensitive=("s",), outcome="y"))
        assert eff.de == pytest.approx(0.3, abs=0.02)
        assert eff.ie == pytest.approx(0.7 * 0.5, abs=0.02)
        assert eff.te == pytest.approx(eff.de + eff.ie, abs=1e-9)

    def test_empty_graph_all_zero(self):
        ds, _ = linear_scm_dataset(n=500)
        g = CausalGraph(["s", "m", "y"])
        eff = estimate_effects(g, ds, FairnessSpec(sensitive=("s",), outcome="y"))
        assert eff.de == eff.ie == eff.te == eff.c_bias == 0.0

    def test_independent_data_gives_near_zero_te(self):
        rng = np.random.default_rng(4)
        n = 50_000
        schema = [ColumnSchema(c, CONTINUOUS) for c in ("s", "m", "y")]
        ds = TabularDataset(schema, [rng.standard_normal(n) for _ in range(3)])
        g = CausalGraph(["s", "m", "y"])
        g.add_edge_acyclic(0, 1)
        g.add_edge_acyclic(1, 2)
        g.add_edge_acyclic(0, 2)
        eff = estimate_effects(g, ds, FairnessSpec(sensitive=("s",), outcome="y"))
        assert abs(eff.te) < 0.05

    def test_benchmark_truth_positive_bias(self):
        b = generate_baseline(20_000, seed=1)
        eff = estimate_effects(b.truth, b.data, SPEC)
        assert eff.te > 0.0
        assert eff.c_bias > 0.0
        assert eff.fairness_path_contribution == pytest.approx(27 / 52, abs=1e-12)

    def test_collinear_parents_flagged_degenerate(self):
        rng = np.random.default_rng(2)
        n = 1000
        x = rng.standard_normal(n)
        schema = [ColumnSchema(c, CONTINUOUS) for c in ("a", "b", "y")]
        ds = TabularDataset(schema, [x, x.copy(), x + rng.standard_normal(n)])
        g = CausalGraph(["a", "b", "y"])
        g.add_edge_acyclic(0, 2)
        g.add_edge_acyclic(1, 2)
        eff = estimate_effects(g, ds, FairnessSpec(sensitive=("a",), outcome="y"))
        assert eff.degenerate is True

    def test_too_few_rows_rejected(self):
        ds, g = linear_scm_dataset(n=3)
        with pytest.raises(ArgumentError):
            estimate_effects(g, ds, FairnessSpec(sensitive=("s",), outcome="y"))


class TestSpecAndReport:
    def test_outcome_cannot_be_sensitive(self):
        with pytest.raises(ArgumentError):
            FairnessSpec(sensitive=("income",), outcome="income")

    def test_report_mirrors_table_columns(self):
        b = generate_baseline(5_000, seed=1)
        report = fairness_report(b.truth, b.data, SPEC)
        assert report["direct_paths"] == 2
        assert report["indirect_paths"] == 25
        assert report["spurious_paths"] == 25
        assert report["fairness_path_contribution"] == pytest.approx(0.5192, abs=5e-4)
        for key in ("direct_effect", "indirect_effect", "total_effect", "c_bias"):
            assert key in report

    def test_report_without_data_counts_only(self):
        report = fairness_report(truth_graph(), None, SPEC)
        assert "c_bias" not in report
        assert report["spurious_paths"] == 25
