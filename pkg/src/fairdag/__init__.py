"""Oracle-guided causal discovery with a fairness benchmark and pathway analysis."""

__version__ = "0.1.0"

from .benchmark import (
    SEED_SUITE,
    GeneratedBenchmark,
    NoiseConfig,
    add_gaussian_noise,
    flip_labels,
    generate_baseline,
    generate_noisy,
    truth_graph,
)
from .dataset import ColumnSchema, TabularDataset, quantile_bins
from .discovery import (
    DiscoveryConfig,
    DiscoveryResult,
    ScoringWeights,
    dynamic_score,
    hist_score,
    llm_conf_score,
    run_active_discovery,
    run_bfs_baseline,
    run_pairwise_baseline,
    select_next_pair,
)
from .fairness import (
    EffectDecomposition,
    FairnessSpec,
    PathClassification,
    classify_paths,
    estimate_effects,
    fairness_path_contribution,
)
from .graph import CausalGraph
from .metrics import MetricsReport, compare
from .oracle import (
    LiveOracle,
    OracleAnswer,
    OracleConfig,
    QueryRecord,
    SimulatedOracle,
    build_oracle,
)
from .stats import PairStat, mutual_information, pair_stats, partial_correlation, stat_score
from .tuning import PRESETS, SearchSpace, TrialRecord, random_search

__all__ = [
    "SEED_SUITE",
    "CausalGraph",
    "ColumnSchema",
    "DiscoveryConfig",
    "DiscoveryResult",
    "EffectDecomposition",
    "FairnessSpec",
    "GeneratedBenchmark",
    "LiveOracle",
    "MetricsReport",
    "NoiseConfig",
    "OracleAnswer",
    "OracleConfig",
    "PathClassification",
    "PairStat",
    "PRESETS",
    "QueryRecord",
    "ScoringWeights",
    "SearchSpace",
    "SimulatedOracle",
    "TabularDataset",
    "TrialRecord",
    "add_gaussian_noise",
    "build_oracle",
    "classify_paths",
    "compare",
    "dynamic_score",
    "estimate_effects",
    "fairness_path_contribution",
    "flip_labels",
    "generate_baseline",
    "generate_noisy",
    "hist_score",
    "llm_conf_score",
    "mutual_information",
    "pair_stats",
    "partial_correlation",
    "quantile_bins",
    "random_search",
    "run_active_discovery",
    "run_bfs_baseline",
    "run_pairwise_baseline",
    "select_next_pair",
    "stat_score",
    "truth_graph",
]
