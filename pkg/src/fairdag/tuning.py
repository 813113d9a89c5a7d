"""Chunked uniform random search over the documented hyperparameter spaces.

Trials are split round-robin into chunks; each chunk samples from its own
contiguous sub-interval of every range so distinct regions of the space
get covered.  Weight tuples come from a finite list and are drawn
uniformly.  The best configuration is the recorded argmax of F1, ties
resolved toward the earlier trial.
"""
from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .discovery import ScoringWeights
from .errors import ArgumentError
from .metrics import MetricsReport

FAILED_F1 = -1.0


@dataclass(frozen=True)
class SearchSpace:
    weight_tuples: tuple[tuple[float, float, float], ...]
    threshold_range: tuple[float, float]
    temperature_range: tuple[float, float]
    max_iter_range: tuple[int, int]

    def __post_init__(self):
        for lo, hi in (self.threshold_range, self.temperature_range, self.max_iter_range):
            if lo > hi:
                raise ArgumentError("range bounds must satisfy lo <= hi")
        for tup in self.weight_tuples:
            ScoringWeights(*tup)  # validates the sum-to-1 constraint


DEFAULT_WEIGHT_TUPLES = (
    (0.3, 0.3, 0.4),
    (0.25, 0.25, 0.5),
    (0.4, 0.3, 0.3),
    (0.3, 0.4, 0.3),
)

PRESETS: dict[str, SearchSpace] = {
    "adult": SearchSpace(DEFAULT_WEIGHT_TUPLES, (0.25, 0.35), (0.25, 0.6), (40, 100)),
    "child": SearchSpace(DEFAULT_WEIGHT_TUPLES, (0.01, 0.2), (0.05, 0.7), (10, 50)),
    "neuropathic": SearchSpace(DEFAULT_WEIGHT_TUPLES, (0.1, 0.5), (0.1, 0.3), (200, 500)),
}


@dataclass(frozen=True)
class SampledConfig:
    weights: tuple[float, float, float]
    score_threshold: float
    temperature: float
    max_iterations: int
    seed: int


@dataclass
class TrialRecord:
    trial: int
    chunk: int
    config: SampledConfig
    metrics: MetricsReport | None
    seconds: float
    seed: int

    @property
    def f1(self) -> float:
        return self.metrics.f1 if self.metrics is not None else FAILED_F1


def _sub_interval(lo: float, hi: float, chunk: int, chunks: int) -> tuple[float, float]:
    width = (hi - lo) / chunks
    return lo + chunk * width, lo + (chunk + 1) * width


def _sample(space: SearchSpace, chunk: int, chunks: int, rng: np.random.Generator, seed: int) -> SampledConfig:
    weights = space.weight_tuples[int(rng.integers(0, len(space.weight_tuples)))]
    t_lo, t_hi = _sub_interval(*space.threshold_range, chunk, chunks)
    threshold = float(rng.uniform(t_lo, t_hi))
    m_lo, m_hi = _sub_interval(*space.temperature_range, chunk, chunks)
    temperature = float(rng.uniform(m_lo, m_hi))
    i_lo, i_hi = _sub_interval(*space.max_iter_range, chunk, chunks)
    lo_int, hi_int = math.ceil(i_lo), math.floor(i_hi)
    if lo_int > hi_int:  # sub-interval too narrow to hold an integer
        lo_int = hi_int = round((i_lo + i_hi) / 2)
    max_iter = int(rng.integers(lo_int, hi_int + 1))
    return SampledConfig(weights, threshold, temperature, max_iter, seed)


def random_search(
    space: SearchSpace,
    trials: int,
    chunks: int,
    evaluator: Callable[[SampledConfig], MetricsReport],
    seed: int = 0,
) -> tuple[SampledConfig, list[TrialRecord]]:
    """Run the search; returns (best config, every trial record)."""
    if trials < 1:
        raise ArgumentError("trials must be >= 1")
    if chunks < 1:
        raise ArgumentError("chunks must be >= 1")
    rng = np.random.default_rng(seed)
    records: list[TrialRecord] = []
    best: TrialRecord | None = None

    for trial in range(trials):
        chunk = trial % chunks
        trial_seed = int(np.random.default_rng([seed, trial]).integers(0, 2**31 - 1))
        config = _sample(space, chunk, chunks, rng, trial_seed)
        t0 = time.perf_counter()
        try:
            metrics = evaluator(config)
        except Exception:
            metrics = None
        record = TrialRecord(
            trial=trial,
            chunk=chunk,
            config=config,
            metrics=metrics,
            seconds=time.perf_counter() - t0,
            seed=trial_seed,
        )
        records.append(record)
        if best is None or record.f1 > best.f1:
            best = record

    return best.config, records


def write_trials_csv(records: Sequence[TrialRecord], path) -> None:
    """Trial log in the layout consumed by downstream parameter analyses."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["trial", "chunk", "w_stat", "w_conf", "w_hist", "threshold",
             "temperature", "max_iter", "f1", "precision", "recall", "nhd", "seconds"]
        )
        for rec in records:
            m = rec.metrics
            writer.writerow([
                rec.trial,
                rec.chunk,
                rec.config.weights[0],
                rec.config.weights[1],
                rec.config.weights[2],
                rec.config.score_threshold,
                rec.config.temperature,
                rec.config.max_iterations,
                rec.f1,
                m.precision if m else "",
                m.recall if m else "",
                m.nhd if m else "",
                round(rec.seconds, 6),
            ])
