"""Oracle-guided structure discovery.

Three modes build a DAG over the dataset's variables:

* active  -- scores every undecided ordered pair by a weighted blend of
  statistical dependence, oracle confidence and a query-history penalty,
  queries the argmax pair, and stops on a score threshold, a query
  budget, or candidate exhaustion;
* bfs     -- frontier expansion seeded by an oracle roots query;
* pairwise -- exhaustive lexicographic sweep over all ordered pairs.

All modes admit positive answers through the acyclic insertion gate, so
the output is a DAG by construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .dataset import TabularDataset
from .errors import ArgumentError, OracleUnavailableError
from .graph import CausalGraph
from .oracle import OracleConfig, QueryRecord, build_oracle
from .stats import MIN_ENTROPY, PairStat, pair_stats

STOP_BUDGET = "budget-exhausted"
STOP_THRESHOLD = "below-threshold"
STOP_EXHAUSTED = "pairs-exhausted"
STOP_ORACLE_UNAVAILABLE = "oracle-unavailable"

DEFAULT_CONFIDENCE = 0.5


@dataclass(frozen=True)
class ScoringWeights:
    w_stat: float
    w_conf: float
    w_hist: float

    def __post_init__(self):
        for w in (self.w_stat, self.w_conf, self.w_hist):
            if not 0.0 <= w <= 1.0:
                raise ArgumentError("weights must lie in [0, 1]")
        if abs(self.w_stat + self.w_conf + self.w_hist - 1.0) > 1e-9:
            raise ArgumentError("weights must sum to 1")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.w_stat, self.w_conf, self.w_hist)


@dataclass(frozen=True)
class DiscoveryConfig:
    weights: ScoringWeights = ScoringWeights(0.3, 0.3, 0.4)
    score_threshold: float = 0.3
    max_iterations: int = 100
    oracle: OracleConfig = OracleConfig()
    mi_bins: int = 10
    mi_normalization: str = MIN_ENTROPY

    def __post_init__(self):
        if self.score_threshold < 0.0:
            raise ArgumentError("score_threshold must be >= 0")
        if self.max_iterations < 1:
            raise ArgumentError("max_iterations must be >= 1")


@dataclass
class DiscoveryResult:
    graph: CausalGraph
    query_log: list[QueryRecord] = field(repr=False)
    iterations_used: int
    stop_reason: str
    seed: int = 0
    incomplete: bool = False


def hist_score(query_count: int) -> float:
    """Query-history penalty: 1.5 / (1 + count)."""
    if query_count < 0:
        raise ArgumentError("query_count must be >= 0")
    return 1.5 / (1.0 + query_count)


def llm_conf_score(confidence: float) -> float:
    """Sigmoid of the oracle confidence."""
    if not 0.0 <= confidence <= 1.0:
        raise ArgumentError("confidence must lie in [0, 1]")
    return 1.0 / (1.0 + math.exp(-confidence))


def dynamic_score(
    stat_score: float,
    confidence: float,
    query_count: int,
    weights: ScoringWeights,
) -> float:
    """Informativeness blend of the three per-pair signals."""
    return (
        weights.w_stat * stat_score
        + weights.w_conf * llm_conf_score(confidence)
        + weights.w_hist * hist_score(query_count)
    )


def select_next_pair(
    candidates: Sequence[tuple[int, int]],
    scores: dict[tuple[int, int], float],
) -> tuple[int, int] | None:
    """Argmax-score pair; ties broken lexicographically; None when empty."""
    best: tuple[int, int] | None = None
    best_score = -math.inf
    for pair in sorted(candidates):
        s = scores[pair]
        if s > best_score:
            best = pair
            best_score = s
    return best


def run_active_discovery(
    dataset: TabularDataset,
    config: DiscoveryConfig,
    oracle=None,
    stats: dict[tuple[int, int], PairStat] | None = None,
    truth: CausalGraph | None = None,
) -> DiscoveryResult:
    """Score-prioritized querying loop.

    Pair statistics are computed once up front (or injected); the
    confidence and history terms are per-pair state updated after each
    query.  A pair is decided after one query and never asked again; the
    reverse of an accepted edge is also retired, since it could only
    yield a cycle-rejected edge.
    """
    if dataset.n_cols < 2:
        raise ArgumentError("need at least 2 columns")
    names = dataset.names
    p = len(names)
    if oracle is None:
        oracle = build_oracle(config.oracle, truth=truth)
    if stats is None:
        stats = pair_stats(dataset, config.mi_bins, config.mi_normalization)

    weights = config.weights
    confidence = {pair: DEFAULT_CONFIDENCE for pair in stats}
    query_count = {pair: 0 for pair in stats}
    candidates = {(i, j) for i in range(p) for j in range(p) if i != j}
    # undecided pairs are never re-queried, so their conf/hist terms stay at
    # the defaults and each candidate's score is fixed once computed
    scores = {
        pair: dynamic_score(stats[pair].stat_score, confidence[pair], query_count[pair], weights)
        for pair in candidates
    }
    graph = CausalGraph(names)
    start_turn = len(oracle.records)
    iterations = 0
    incomplete = False

    while True:
        if not candidates:
            stop = STOP_EXHAUSTED
            break
        pair = select_next_pair(candidates, scores)
        if scores[pair] < config.score_threshold:
            stop = STOP_THRESHOLD
            break
        if iterations >= config.max_iterations:
            stop = STOP_BUDGET
            break

        i, j = pair
        try:
            answer = oracle.query_edge(names[i], names[j])
        except OracleUnavailableError:
            stop = STOP_ORACLE_UNAVAILABLE
            incomplete = True
            break
        iterations += 1
        confidence[pair] = answer.confidence
        query_count[pair] += 1
        candidates.discard(pair)
        if answer.causal and graph.add_edge_acyclic(i, j):
            candidates.discard((j, i))

    return DiscoveryResult(
        graph=graph,
        query_log=list(oracle.records[start_turn:]),
        iterations_used=iterations,
        stop_reason=stop,
        seed=config.oracle.seed,
        incomplete=incomplete,
    )


def run_bfs_baseline(oracle, variables: Sequence[str]) -> DiscoveryResult:
    """Frontier-expansion baseline.

    The oracle first names the independent root variables (falling back
    to every variable when it names none).  Each frontier node x is then
    expanded by querying x -> y for every pair not yet determined, where
    a pair counts as determined once queried or once its reverse is an
    accepted edge.  Nodes reached by accepted edges join the next
    frontier; leftover unexplored nodes are promoted when the frontier
    drains, so every node is explored.
    """
    if not variables:
        raise ArgumentError("need at least one variable")
    names = list(variables)
    index = {name: k for k, name in enumerate(names)}
    graph = CausalGraph(names)
    start_turn = len(oracle.records)
    incomplete = False

    try:
        roots = oracle.query_independent_roots(names)
        frontier = sorted(index[r] for r in roots if r in index)
        if not frontier:
            frontier = list(range(len(names)))

        explored: set[int] = set()
        queried: set[tuple[int, int]] = set()
        queue = list(frontier)
        while queue or len(explored) < len(names):
            if not queue:
                queue = [k for k in range(len(names)) if k not in explored]
            x = queue.pop(0)
            if x in explored:
                continue
            explored.add(x)
            reached: list[int] = []
            for y in range(len(names)):
                if y == x or (x, y) in queried:
                    continue
                if graph.has_edge(y, x):
                    continue  # reverse already accepted; x -> y can only cycle
                answer = oracle.query_edge(names[x], names[y])
                queried.add((x, y))
                if answer.causal and graph.add_edge_acyclic(x, y):
                    reached.append(y)
            for y in reached:
                if y not in explored and y not in queue:
                    queue.append(y)
    except OracleUnavailableError:
        incomplete = True

    records = list(oracle.records[start_turn:])
    return DiscoveryResult(
        graph=graph,
        query_log=records,
        iterations_used=len(records),
        stop_reason=STOP_ORACLE_UNAVAILABLE if incomplete else STOP_EXHAUSTED,
        incomplete=incomplete,
    )


def run_pairwise_baseline(oracle, variables: Sequence[str]) -> DiscoveryResult:
    """Exhaustive baseline: all n(n-1) ordered pairs in lexicographic order."""
    if len(variables) < 2:
        raise ArgumentError("need at least two variables")
    names = list(variables)
    graph = CausalGraph(names)
    start_turn = len(oracle.records)
    incomplete = False

    try:
        for i in range(len(names)):
            for j in range(len(names)):
                if i == j:
                    continue
                answer = oracle.query_edge(names[i], names[j])
                if answer.causal:
                    graph.add_edge_acyclic(i, j)
    except OracleUnavailableError:
        incomplete = True

    records = list(oracle.records[start_turn:])
    return DiscoveryResult(
        graph=graph,
        query_log=records,
        iterations_used=len(records),
        stop_reason=STOP_ORACLE_UNAVAILABLE if incomplete else STOP_EXHAUSTED,
        incomplete=incomplete,
    )
