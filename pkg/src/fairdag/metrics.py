"""Structure-recovery metrics between a predicted and a true graph.

Directed-edge convention: a reversed edge costs one false positive plus
one false negative.  The NHD ratio is normalized by the all-wrong
baseline (pred_edges + true_edges) / n^2, which makes it equal 1 - F1
whenever any edge exists on either side.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .errors import ArgumentError
from .graph import CausalGraph


@dataclass(frozen=True)
class MetricsReport:
    tp: int
    fp: int
    fn: int
    precision: float
    recall: float
    f1: float
    edge_jaccard_accuracy: float
    adjacency_accuracy: float
    nhd: float
    nhd_ratio: float
    pred_edges: int
    true_edges: int
    is_dag: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def write_json(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def compare(pred: CausalGraph, truth: CausalGraph) -> MetricsReport:
    """Compare directed edge sets of two graphs over the same node names."""
    if set(pred.nodes) != set(truth.nodes):
        raise ArgumentError("node name sets differ")
    n = pred.n_nodes
    pred_edges = set(pred.edge_names())
    true_edges = set(truth.edge_names())
    tp = len(pred_edges & true_edges)
    fp = len(pred_edges - true_edges)
    fn = len(true_edges - pred_edges)

    precision = tp / (tp + fp) if (tp + fp) > 0 else 0.0
    recall = tp / (tp + fn) if (tp + fn) > 0 else 0.0
    f1 = 2 * precision * recall / (precision + recall) if (precision + recall) > 0 else 0.0
    jaccard = tp / (tp + fp + fn) if (tp + fp + fn) > 0 else 0.0
    nhd = (fp + fn) / (n * n)
    baseline = (len(pred_edges) + len(true_edges)) / (n * n)
    nhd_ratio = nhd / baseline if baseline > 0 else 0.0

    return MetricsReport(
        tp=tp,
        fp=fp,
        fn=fn,
        precision=precision,
        recall=recall,
        f1=f1,
        edge_jaccard_accuracy=jaccard,
        adjacency_accuracy=(n * n - fp - fn) / (n * n),
        nhd=nhd,
        nhd_ratio=nhd_ratio,
        pred_edges=len(pred_edges),
        true_edges=len(true_edges),
        is_dag=pred.is_dag(),
    )
