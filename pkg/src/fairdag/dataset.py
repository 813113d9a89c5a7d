"""Typed tabular data: categorical columns stored as level indices,
continuous columns as float arrays.

CSV files are self-describing through a schema sidecar JSON; categorical
cells are serialized by level name so the files read naturally, and
continuous cells use shortest round-trip float repr.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ArgumentError

CATEGORICAL = "categorical"
CONTINUOUS = "continuous"


@dataclass(frozen=True)
class ColumnSchema:
    name: str
    kind: str
    levels: tuple[str, ...] = ()
    unit: str = ""

    def __post_init__(self):
        if self.kind not in (CATEGORICAL, CONTINUOUS):
            raise ArgumentError(f"unknown column kind {self.kind!r}")
        if self.kind == CATEGORICAL:
            if not self.levels:
                raise ArgumentError(f"categorical column {self.name!r} needs levels")
            if len(set(self.levels)) != len(self.levels):
                raise ArgumentError(f"duplicate levels in column {self.name!r}")
        object.__setattr__(self, "levels", tuple(self.levels))

    @property
    def is_categorical(self) -> bool:
        return self.kind == CATEGORICAL


@dataclass
class TabularDataset:
    schema: list[ColumnSchema]
    columns: list[np.ndarray] = field(repr=False)

    def __post_init__(self):
        if len(self.schema) != len(self.columns):
            raise ArgumentError("schema/column count mismatch")
        n = None
        cols = []
        for spec, col in zip(self.schema, self.columns):
            arr = np.asarray(col)
            if n is None:
                n = arr.shape[0]
            elif arr.shape[0] != n:
                raise ArgumentError(f"column {spec.name!r} has {arr.shape[0]} rows, expected {n}")
            if spec.is_categorical:
                arr = arr.astype(np.int64)
                if arr.size and (arr.min() < 0 or arr.max() >= len(spec.levels)):
                    raise ArgumentError(f"level index out of range in column {spec.name!r}")
            else:
                arr = arr.astype(np.float64)
                if arr.size and not np.all(np.isfinite(arr)):
                    raise ArgumentError(f"non-finite value in column {spec.name!r}")
            cols.append(arr)
        self.columns = cols

    @property
    def n_rows(self) -> int:
        return int(self.columns[0].shape[0]) if self.columns else 0

    @property
    def n_cols(self) -> int:
        return len(self.schema)

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.schema]

    def column(self, name: str) -> np.ndarray:
        return self.columns[self.index_of(name)]

    def index_of(self, name: str) -> int:
        for i, spec in enumerate(self.schema):
            if spec.name == name:
                return i
        raise ArgumentError(f"unknown column {name!r}")

    def encode_numeric(self) -> np.ndarray:
        """n x p float matrix: level indices for categoricals, values as-is."""
        if not self.columns:
            return np.zeros((0, 0))
        return np.column_stack([c.astype(np.float64) for c in self.columns])

    # ---- serialization -----------------------------------------------------

    def schema_dict(self) -> dict:
        cols = []
        for spec in self.schema:
            entry: dict = {"name": spec.name, "kind": spec.kind}
            if spec.is_categorical:
                entry["levels"] = list(spec.levels)
            cols.append(entry)
        return {"columns": cols}

    def write_schema_json(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.schema_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(self.names)
            for r in range(self.n_rows):
                row = []
                for spec, col in zip(self.schema, self.columns):
                    if spec.is_categorical:
                        row.append(spec.levels[col[r]])
                    else:
                        row.append(repr(float(col[r])))
                writer.writerow(row)

    @classmethod
    def read_csv(cls, data_path, schema_path) -> "TabularDataset":
        schema = read_schema_json(schema_path)
        with open(data_path, encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            if header != [s.name for s in schema]:
                raise ArgumentError("CSV header does not match schema")
            raw_rows = list(reader)
        cols: list[np.ndarray] = []
        for j, spec in enumerate(schema):
            if spec.is_categorical:
                lookup = {lvl: i for i, lvl in enumerate(spec.levels)}
                try:
                    cols.append(np.array([lookup[row[j]] for row in raw_rows], dtype=np.int64))
                except KeyError as exc:
                    raise ArgumentError(f"unknown level {exc} in column {spec.name!r}") from None
            else:
                cols.append(np.array([float(row[j]) for row in raw_rows], dtype=np.float64))
        return cls(schema, cols)


def read_schema_json(path) -> list[ColumnSchema]:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    schema = []
    for entry in payload["columns"]:
        schema.append(
            ColumnSchema(
                name=entry["name"],
                kind=entry["kind"],
                levels=tuple(entry.get("levels") or ()),
            )
        )
    return schema


def quantile_bins(values: Sequence[float], bins: int) -> np.ndarray:
    """Assign each value its empirical quantile bucket in [0, bins).

    Bucket boundaries sit at quantiles k/bins; values equal to a boundary
    fall in the lower bucket.  A constant column collapses to bucket 0.
    """
    if bins < 2:
        raise ArgumentError("bins must be >= 2")
    arr = np.asarray(values, dtype=np.float64)
    if arr.shape[0] < bins:
        raise ArgumentError(f"need at least {bins} values for {bins} bins")
    edges = np.quantile(arr, [k / bins for k in range(1, bins)])
    return np.searchsorted(edges, arr, side="left").astype(np.int64)
