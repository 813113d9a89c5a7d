"""Fairness pathway analysis over a discovered graph.

Paths from each sensitive attribute are enumerated and split into
direct (one edge into the outcome), indirect (longer paths ending at the
outcome) and spurious (paths never reaching the outcome).  Effect sizes
use linear path tracing over per-node least-squares parent regressions:
the direct effect is the outcome-regression coefficient of the sensitive
attribute, the indirect effect sums coefficient products along indirect
paths, and the total effect is their sum.  Attributes are aggregated by
absolute value so opposite-signed biases cannot cancel.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .dataset import TabularDataset
from .errors import ArgumentError, CyclicGraphError
from .graph import CausalGraph

DEFAULT_SENSITIVE = ("sex", "race", "age")
DEFAULT_OUTCOME = "income"


@dataclass(frozen=True)
class FairnessSpec:
    sensitive: tuple[str, ...] = DEFAULT_SENSITIVE
    outcome: str = DEFAULT_OUTCOME

    def __post_init__(self):
        if self.outcome in self.sensitive:
            raise ArgumentError("outcome cannot be a sensitive attribute")
        if not self.sensitive:
            raise ArgumentError("need at least one sensitive attribute")


@dataclass
class PathClassification:
    direct: list[list[int]] = field(default_factory=list)
    indirect: list[list[int]] = field(default_factory=list)
    spurious: list[list[int]] = field(default_factory=list)

    @property
    def direct_count(self) -> int:
        return len(self.direct)

    @property
    def indirect_count(self) -> int:
        return len(self.indirect)

    @property
    def spurious_count(self) -> int:
        return len(self.spurious)


@dataclass(frozen=True)
class EffectDecomposition:
    de: float
    ie: float
    te: float
    c_bias: float
    fairness_path_contribution: float
    degenerate: bool = False


def classify_paths(graph: CausalGraph, spec: FairnessSpec) -> PathClassification:
    """Classify every simple directed path out of the sensitive attributes.

    Paths that pass through the outcome without ending there belong to no
    class (their prefix ending at the outcome is already counted).
    """
    if not graph.is_dag():
        raise CyclicGraphError("path classification requires a DAG")
    outcome = graph.index_of(spec.outcome)
    pc = PathClassification()
    for name in spec.sensitive:
        s = graph.index_of(name)
        for path in graph.enumerate_directed_paths(s):
            if path[-1] == outcome:
                (pc.direct if len(path) == 2 else pc.indirect).append(path)
            elif outcome not in path:
                pc.spurious.append(path)
    return pc


def fairness_path_contribution(pc: PathClassification) -> float:
    """Share of outcome-reaching paths among all classified paths."""
    total = pc.direct_count + pc.indirect_count + pc.spurious_count
    if total == 0:
        return 0.0
    return (pc.direct_count + pc.indirect_count) / total


def _edge_coefficients(graph: CausalGraph, matrix: np.ndarray) -> tuple[dict, bool]:
    """OLS coefficient of each parent in its child's regression."""
    coef: dict[tuple[int, int], float] = {}
    degenerate = False
    for v in range(graph.n_nodes):
        parents = graph.predecessors(v)
        if not parents:
            continue
        design = np.column_stack([np.ones(matrix.shape[0]), matrix[:, parents]])
        beta, _, rank, _ = np.linalg.lstsq(design, matrix[:, v], rcond=None)
        if rank < design.shape[1]:
            degenerate = True
        for k, u in enumerate(parents):
            coef[(u, v)] = float(beta[k + 1])
    return coef, degenerate


def estimate_effects(
    graph: CausalGraph,
    dataset: TabularDataset,
    spec: FairnessSpec,
) -> EffectDecomposition:
    """Path-tracing effect decomposition of sensitive attributes on the outcome."""
    if not graph.is_dag():
        raise CyclicGraphError("effect estimation requires a DAG")
    if graph.nodes != dataset.names:
        if set(graph.nodes) != set(dataset.names):
            raise ArgumentError("graph nodes do not match dataset columns")
        order = [dataset.index_of(name) for name in graph.nodes]
        matrix = dataset.encode_numeric()[:, order]
    else:
        matrix = dataset.encode_numeric()
    max_in = max((graph.in_degree(v) for v in range(graph.n_nodes)), default=0)
    if dataset.n_rows <= max_in + 1:
        raise ArgumentError("too few rows for the graph's largest parent set")

    outcome = graph.index_of(spec.outcome)
    coef, degenerate = _edge_coefficients(graph, matrix)

    de_total = 0.0
    ie_total = 0.0
    for name in spec.sensitive:
        s = graph.index_of(name)
        de_s = coef.get((s, outcome), 0.0) if graph.has_edge(s, outcome) else 0.0
        ie_s = 0.0
        for path in graph.enumerate_directed_paths(s, target=outcome):
            if len(path) < 3:
                continue
            prod = 1.0
            for u, v in zip(path, path[1:]):
                prod *= coef[(u, v)]
            ie_s += prod
        de_total += abs(de_s)
        ie_total += abs(ie_s)

    te = de_total + ie_total
    var_y = float(matrix[:, outcome].var())
    c_bias = te / var_y if var_y > 0 else 0.0
    pc = classify_paths(graph, spec)
    return EffectDecomposition(
        de=de_total,
        ie=ie_total,
        te=te,
        c_bias=c_bias,
        fairness_path_contribution=fairness_path_contribution(pc),
        degenerate=degenerate,
    )


def fairness_report(
    graph: CausalGraph,
    dataset: TabularDataset | None,
    spec: FairnessSpec,
) -> dict:
    """Pathway counts plus effect decomposition as a JSON-ready mapping."""
    pc = classify_paths(graph, spec)
    report = {
        "sensitive": list(spec.sensitive),
        "outcome": spec.outcome,
        "direct_paths": pc.direct_count,
        "indirect_paths": pc.indirect_count,
        "spurious_paths": pc.spurious_count,
        "fairness_path_contribution": fairness_path_contribution(pc),
    }
    if dataset is not None:
        eff = estimate_effects(graph, dataset, spec)
        report.update(
            {
                "direct_effect": eff.de,
                "indirect_effect": eff.ie,
                "total_effect": eff.te,
                "c_bias": eff.c_bias,
                "degenerate": eff.degenerate,
            }
        )
    return report


def write_fairness_report(report: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
