"""Statistical dependence signals feeding the query scorer.

Two ingredients per variable pair: plug-in mutual information over
discretized columns (normalized to [0, 1] by the smaller marginal
entropy) and the absolute full-order partial correlation (conditioning
on every other observed column via regression residuals).  Their plain
average is the pair's statistical score.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .dataset import TabularDataset, quantile_bins
from .errors import ArgumentError, DegenerateDataError

MIN_ENTROPY = "min-entropy"
NO_NORMALIZATION = "none"

_RESIDUAL_VAR_FLOOR = 1e-12


@dataclass(frozen=True)
class PairStat:
    mi_norm: float
    pcorr_abs: float

    @property
    def stat_score(self) -> float:
        return (self.mi_norm + self.pcorr_abs) / 2.0


def _discretize(col: np.ndarray, bins: int) -> np.ndarray:
    arr = np.asarray(col)
    if np.issubdtype(arr.dtype, np.integer):
        return arr.astype(np.int64)
    if arr.shape[0] < bins:
        # too few rows to bin; fall back to rank labels
        return np.unique(arr, return_inverse=True)[1]
    return quantile_bins(arr, bins)


def mutual_information(x, y, bins: int = 10, normalization: str = MIN_ENTROPY) -> float:
    """Plug-in MI of two columns in nats, normalized into [0, 1].

    Integer-typed arrays are treated as categorical labels; float arrays
    are quantile-binned first.  Normalization divides by min(H(x), H(y)),
    returning 0 when either column is constant.
    """
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape[0] != y.shape[0]:
        raise ArgumentError("columns differ in length")
    if x.shape[0] < 2:
        raise ArgumentError("need at least 2 rows")

    lx = np.unique(_discretize(x, bins), return_inverse=True)[1]
    ly = np.unique(_discretize(y, bins), return_inverse=True)[1]
    kx = int(lx.max()) + 1
    ky = int(ly.max()) + 1
    joint = np.bincount(lx * ky + ly, minlength=kx * ky).reshape(kx, ky) / x.shape[0]
    px = joint.sum(axis=1)
    py = joint.sum(axis=0)

    nz = joint > 0
    mi = float(np.sum(joint[nz] * np.log(joint[nz] / np.outer(px, py)[nz])))
    mi = max(mi, 0.0)
    if normalization == NO_NORMALIZATION:
        return mi
    if normalization != MIN_ENTROPY:
        raise ArgumentError(f"unknown MI normalization {normalization!r}")
    hx = float(-np.sum(px[px > 0] * np.log(px[px > 0])))
    hy = float(-np.sum(py[py > 0] * np.log(py[py > 0])))
    h_min = min(hx, hy)
    if h_min <= 0.0:
        return 0.0
    return min(mi / h_min, 1.0)


def _standardize(matrix: np.ndarray) -> np.ndarray:
    mean = matrix.mean(axis=0)
    std = matrix.std(axis=0)
    std = np.where(std > 0, std, 1.0)
    return (matrix - mean) / std


def _residual(y: np.ndarray, z: np.ndarray) -> np.ndarray:
    if z.shape[1] == 0:
        return y - y.mean()
    design = np.column_stack([np.ones(z.shape[0]), z])
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    return y - design @ coef

def partial_correlation(i: int, j: int, data: np.ndarray) -> float:
    """|partial correlation| of columns i, j given all remaining columns.

    Residuals of least-squares regressions of each column on the rest are
    correlated; the result is clamped to [0, 1] and collapses to 0 when a
    residual is numerically constant.
    """
    data = np.asarray(data, dtype=np.float64)
    n, p = data.shape
    if n <= p:
        raise DegenerateDataError(f"need more rows than columns (n={n}, p={p})")
    if i == j:
        raise ArgumentError("i and j must differ")
    if not (0 <= i < p and 0 <= j < p):
        raise ArgumentError("column index out of range")

    std = _standardize(data)
    rest = [k for k in range(p) if k not in (i, j)]
    z = std[:, rest]
    ri = _residual(std[:, i], z)
    rj = _residual(std[:, j], z)
    vi = float(ri @ ri) / n
    vj = float(rj @ rj) / n
    if vi < _RESIDUAL_VAR_FLOOR or vj < _RESIDUAL_VAR_FLOOR:
        return 0.0
    r = float(ri @ rj) / (n * np.sqrt(vi * vj))
    return min(abs(r), 1.0)


def stat_score(
    i: int,
    j: int,
    dataset: TabularDataset,
    bins: int = 10,
    mi_normalization: str = MIN_ENTROPY,
) -> PairStat:
    """Combined statistical score for one column pair."""
    mi = mutual_information(dataset.columns[i], dataset.columns[j], bins, mi_normalization)
    pc = partial_correlation(i, j, dataset.encode_numeric())
    return PairStat(mi_norm=mi, pcorr_abs=pc)


def pair_stats(
    dataset: TabularDataset,
    bins: int = 10,
    mi_normalization: str = MIN_ENTROPY,
) -> dict[tuple[int, int], PairStat]:
    """All-pairs statistics, precomputed once and shared by both orders."""
    p = dataset.n_cols
    matrix = dataset.encode_numeric()
    table: dict[tuple[int, int], PairStat] = {}
    for i in range(p):
        for j in range(i + 1, p):
            mi = mutual_information(dataset.columns[i], dataset.columns[j], bins, mi_normalization)
            pc = partial_correlation(i, j, matrix)
            stat = PairStat(mi_norm=mi, pcorr_abs=pc)
            table[(i, j)] = stat
            table[(j, i)] = stat
    return table


def write_pair_stats_csv(table: dict[tuple[int, int], PairStat], path) -> None:
    """Audit dump: one row per ordered pair."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["i", "j", "mi_norm", "pcorr_abs", "stat_score"])
        for (i, j) in sorted(table):
            s = table[(i, j)]
            writer.writerow([i, j, repr(s.mi_norm), repr(s.pcorr_abs), repr(s.stat_score)])
