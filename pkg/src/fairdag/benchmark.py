"""Semi-synthetic census-style benchmark generator.

Fifteen observed socioeconomic variables are sampled in topological
order from rule-based structural equations; income is a terminal binary
outcome with injected direct edges from sex and race.  The noisy
configuration adds a hidden standard-normal advantage variable U into
years_of_education, capital_gain and hours_per_week, then corrupts the
observed data with scaled additive Gaussian noise on continuous columns
and symmetric label noise on categorical columns.  Noise is applied
after generation, so the ground-truth graph is identical across
configurations.

Every column draws from its own seeded RNG stream, so toggling the
latent variable or a noise knob never perturbs another column's draws,
and the baseline equals the noisy configuration with all knobs zeroed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .dataset import CATEGORICAL, CONTINUOUS, ColumnSchema, TabularDataset
from .errors import ArgumentError
from .graph import CausalGraph

# canonical seeds for multi-dataset averaging runs
SEED_SUITE = (1, 2, 3, 4)

_STREAM_STRUCTURAL = 0
_STREAM_ADDITIVE = 1
_STREAM_FLIP = 2
_STREAM_LATENT = 3

COLUMNS: list[ColumnSchema] = [
    ColumnSchema("age", CONTINUOUS, unit="years"),
    ColumnSchema("sex", CATEGORICAL, ("Male", "Female")),
    ColumnSchema("race", CATEGORICAL, ("White", "Non-white")),
    ColumnSchema("native_country", CATEGORICAL, ("US", "Mexico", "India", "Philippines", "Other")),
    ColumnSchema("education", CATEGORICAL, ("primary", "secondary", "bachelors", "masters", "doctorate")),
    ColumnSchema("years_of_education", CONTINUOUS, unit="years"),
    ColumnSchema("occupation", CATEGORICAL, ("professional", "executive", "service", "manual", "other")),
    ColumnSchema("work_class", CATEGORICAL, ("private", "government", "self_employed", "unemployed", "other")),
    ColumnSchema("marital_status", CATEGORICAL, ("never_married", "married", "divorced", "widowed", "separated")),
    ColumnSchema("relationship", CATEGORICAL, ("spouse", "other_relative", "own_child", "unmarried")),
    ColumnSchema("capital_gain", CONTINUOUS, unit="USD"),
    ColumnSchema("capital_loss", CONTINUOUS, unit="USD"),
    ColumnSchema("hours_per_week", CONTINUOUS, unit="hours"),
    ColumnSchema("fnlwgt", CONTINUOUS),
    ColumnSchema("income", CATEGORICAL, ("<=50K", ">50K")),
]

PARENTS: dict[str, tuple[str, ...]] = {
    "age": (),
    "sex": (),
    "race": (),
    "native_country": (),
    "education": ("sex", "race", "native_country"),
    "years_of_education": ("education", "age"),
    "occupation": ("education", "sex"),
    "work_class": ("education", "race"),
    "marital_status": ("age", "sex"),
    "relationship": ("marital_status",),
    "capital_gain": ("occupation",),
    "capital_loss": ("occupation",),
    "hours_per_week": ("occupation", "sex"),
    "fnlwgt": (),
    "income": (
        "sex", "race", "education", "years_of_education", "occupation",
        "work_class", "capital_gain", "capital_loss", "hours_per_week",
        "relationship", "marital_status", "fnlwgt",
    ),
}

RULES: dict[str, str] = {
    "age": "Uniform(18, 70)",
    "sex": "Categorical p=[0.67, 0.33]",
    "race": "Categorical p=[0.75, 0.25]",
    "native_country": "Categorical p=[0.75, 0.10, 0.05, 0.05, 0.05]",
    "education": "0 if sex==1 and race==1; 1 if native_country != 0; 2 if sex==0 and race==0; else 1",
    "years_of_education": "round(Normal(12 + 2*education + 0.05*age + 0.8*U, 1)) clipped to [1, 20]",
    "occupation": "2 if education < 1; 1 if sex==0 and education >= 2; 0 if education >= 3; else 3",
    "work_class": "0 if education > 2; 1 if race==0; 2 if education <= 1; else 4",
    "marital_status": "0 if age < 30; 1 if sex==0 and age >= 30; 2 if sex==1 and age >= 30; else 3",
    "relationship": "0 if marital_status==1; 1 if marital_status==3; 2 if marital_status==0; else 3",
    "capital_gain": "Normal(5000 + 1500*U, 2000) if occupation==1; 1000 + 500*U if occupation==0; else 0",
    "capital_loss": "Normal(1000, 500) if occupation==1; 300 if occupation==0; else 0",
    "hours_per_week": "Normal(45 + 2*U, 5) if sex==0; 40 + U if occupation==0; else 35",
    "fnlwgt": "Normal(180000, 20000)",
    "income": "1 if sex==0 and race==0 and capital_gain + 500*U > 4000 "
              "and years_of_education + 0.5*U >= 14 and hours_per_week + U > 40; else 0",
}

DESCRIPTIONS: dict[str, str] = {
    "age": "age of the person in years",
    "sex": "sex of the person (Male or Female)",
    "race": "racial group of the person (White or Non-white)",
    "native_country": "country the person was born in",
    "education": "highest education level attained",
    "years_of_education": "total years of schooling completed",
    "occupation": "occupation category of the person",
    "work_class": "employment sector (private, government, self-employed, ...)",
    "marital_status": "marital status of the person",
    "relationship": "household relationship role",
    "capital_gain": "yearly capital gains in USD",
    "capital_loss": "yearly capital losses in USD",
    "hours_per_week": "hours worked per week",
    "fnlwgt": "census sampling weight of the record",
    "income": "whether yearly income exceeds 50K USD",
}


@dataclass(frozen=True)
class NoiseConfig:
    alpha: float = 0.1
    gamma: float = 0.05
    latent_enabled: bool = True
    seed: int = 1

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ArgumentError("alpha must lie in [0, 1]")
        if not 0.0 <= self.gamma <= 1.0:
            raise ArgumentError("gamma must lie in [0, 1]")
        if self.seed < 0:
            raise ArgumentError("seed must be a non-negative integer")


@dataclass
class GeneratedBenchmark:
    data: TabularDataset
    truth: CausalGraph
    latent_u: np.ndarray


def truth_graph() -> CausalGraph:
    """The 15-node, 28-edge ground-truth DAG of the benchmark."""
    names = [c.name for c in COLUMNS]
    g = CausalGraph(names)
    for child, parents in PARENTS.items():
        for parent in parents:
            g.add_edge_unchecked(names.index(parent), names.index(child))
    return g


def _stream(seed: int, kind: int, idx: int) -> np.random.Generator:
    return np.random.default_rng([seed, kind, idx])


def add_gaussian_noise(column, alpha: float, rng: np.random.Generator) -> np.ndarray:
    """Additive N(0, (alpha*std)^2) noise; std taken from the clean column."""
    if not 0.0 <= alpha <= 1.0:
        raise ArgumentError("alpha must lie in [0, 1]")
    col = np.asarray(column, dtype=np.float64)
    sigma = alpha * col.std()
    if sigma == 0.0:
        return col.copy()
    return col + rng.standard_normal(col.shape[0]) * sigma


def flip_labels(column, level_count: int, gamma: float, rng: np.random.Generator) -> np.ndarray:
    """Symmetric label noise: with probability gamma, reassign uniformly
    to one of the other level_count - 1 levels."""
    if level_count < 2:
        raise ArgumentError("level_count must be >= 2")
    if not 0.0 <= gamma <= 1.0:
        raise ArgumentError("gamma must lie in [0, 1]")
    col = np.asarray(column, dtype=np.int64)
    n = col.shape[0]
    flip = rng.random(n) < gamma
    offsets = rng.integers(1, level_count, size=n)
    return np.where(flip, (col + offsets) % level_count, col)


def generate_noisy(n: int, config: NoiseConfig) -> GeneratedBenchmark:
    """Sample the benchmark under a noise configuration.

    Structural values (including latent-U terms) are computed first; the
    additive and label noise passes only touch the observed data, so the
    returned truth graph never changes.
    """
    if n < 1:
        raise ArgumentError("n must be >= 1")
    seed = config.seed

    if config.latent_enabled:
        u = _stream(seed, _STREAM_LATENT, 0).standard_normal(n)
    else:
        u = np.zeros(n)

    def rng(col: str) -> np.random.Generator:
        return _stream(seed, _STREAM_STRUCTURAL, _col_index(col))

    age = rng("age").uniform(18.0, 70.0, n)
    sex = rng("sex").choice(2, size=n, p=[0.67, 0.33])
    race = rng("race").choice(2, size=n, p=[0.75, 0.25])
    native = rng("native_country").choice(5, size=n, p=[0.75, 0.10, 0.05, 0.05, 0.05])

    education = np.select(
        [(sex == 1) & (race == 1), native != 0, (sex == 0) & (race == 0)],
        [0, 1, 2],
        default=1,
    )

    years = 12.0 + 2.0 * education + 0.05 * age + 0.8 * u \
        + rng("years_of_education").standard_normal(n)
    years = np.clip(np.round(years), 1.0, 20.0)

    occupation = np.select(
        [education < 1, (sex == 0) & (education >= 2), education >= 3],
        [2, 1, 0],
        default=3,
    )
    work_class = np.select(
        [education > 2, race == 0, education <= 1],
        [0, 1, 2],
        default=4,
    )
    marital = np.select(
        [age < 30, (sex == 0) & (age >= 30), (sex == 1) & (age >= 30)],
        [0, 1, 2],
        default=3,
    )
    relationship = np.select(
        [marital == 1, marital == 3, marital == 0],
        [0, 1, 2],
        default=3,
    )

    z_gain = rng("capital_gain").standard_normal(n)
    gain = np.select(
        [occupation == 1, occupation == 0],
        [5000.0 + 1500.0 * u + 2000.0 * z_gain, 1000.0 + 500.0 * u],
        default=0.0,
    )
    z_loss = rng("capital_loss").standard_normal(n)
    loss = np.select(
        [occupation == 1, occupation == 0],
        [1000.0 + 500.0 * z_loss, 300.0],
        default=0.0,
    )
    z_hours = rng("hours_per_week").standard_normal(n)
    hours = np.select(
        [sex == 0, occupation == 0],
        [45.0 + 2.0 * u + 5.0 * z_hours, 40.0 + u],
        default=35.0,
    )
    fnlwgt = 180000.0 + 20000.0 * rng("fnlwgt").standard_normal(n)

    income = (
        (sex == 0)
        & (race == 0)
        & (gain + 500.0 * u > 4000.0)
        & (years + 0.5 * u >= 14.0)
        & (hours + u > 40.0)
    ).astype(np.int64)

    values: dict[str, np.ndarray] = {
        "age": age,
        "sex": sex,
        "race": race,
        "native_country": native,
        "education": education,
        "years_of_education": years,
        "occupation": occupation,
        "work_class": work_class,
        "marital_status": marital,
        "relationship": relationship,
        "capital_gain": gain,
        "capital_loss": loss,
        "hours_per_week": hours,
        "fnlwgt": fnlwgt,
        "income": income,
    }

    if config.alpha > 0.0:
        for spec in COLUMNS:
            if spec.kind == CONTINUOUS:
                noise_rng = _stream(seed, _STREAM_ADDITIVE, _col_index(spec.name))
                values[spec.name] = add_gaussian_noise(values[spec.name], config.alpha, noise_rng)
    if config.gamma > 0.0:
        for spec in COLUMNS:
            if spec.is_categorical:
                flip_rng = _stream(seed, _STREAM_FLIP, _col_index(spec.name))
                values[spec.name] = flip_labels(
                    values[spec.name], len(spec.levels), config.gamma, flip_rng
                )

    data = TabularDataset(list(COLUMNS), [values[c.name] for c in COLUMNS])
    return GeneratedBenchmark(data=data, truth=truth_graph(), latent_u=u)


def generate_baseline(n: int, seed: int) -> GeneratedBenchmark:
    """Clean configuration: no additive noise, no label noise, no latent U."""
    return generate_noisy(n, NoiseConfig(alpha=0.0, gamma=0.0, latent_enabled=False, seed=seed))


def _col_index(name: str) -> int:
    for i, spec in enumerate(COLUMNS):
        if spec.name == name:
            return i
    raise ArgumentError(f"unknown benchmark column {name!r}")


# ---- benchmark spec file ----------------------------------------------------

@dataclass
class BenchmarkSpec:
    """Variable list with parents and metadata, decoupled from the generator.

    Externally supplied graphs (any node set) load through the same format,
    so discovery can run against corpora this package does not generate.
    """
    names: list[str]
    parents: dict[str, tuple[str, ...]]
    descriptions: dict[str, str]
    kinds: dict[str, str]
    levels: dict[str, tuple[str, ...]]
    rules: dict[str, str]

    def truth_graph(self) -> CausalGraph:
        g = CausalGraph(self.names)
        for child, ps in self.parents.items():
            for parent in ps:
                g.add_edge_unchecked(g.index_of(parent), g.index_of(child))
        return g


def adult_benchmark_spec() -> BenchmarkSpec:
    return BenchmarkSpec(
        names=[c.name for c in COLUMNS],
        parents=dict(PARENTS),
        descriptions=dict(DESCRIPTIONS),
        kinds={c.name: c.kind for c in COLUMNS},
        levels={c.name: c.levels for c in COLUMNS if c.is_categorical},
        rules=dict(RULES),
    )


def write_benchmark_spec(spec: BenchmarkSpec, path) -> None:
    payload = {
        "variables": [
            {
                "name": name,
                "kind": spec.kinds.get(name, CONTINUOUS),
                "levels": list(spec.levels.get(name, ())),
                "parents": list(spec.parents.get(name, ())),
                "rule": spec.rules.get(name, ""),
                "description": spec.descriptions.get(name, ""),
            }
            for name in spec.names
        ]
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_benchmark_spec(path) -> BenchmarkSpec:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    names, parents, descriptions, kinds, levels, rules = [], {}, {}, {}, {}, {}
    for entry in payload["variables"]:
        name = entry["name"]
        names.append(name)
        parents[name] = tuple(entry.get("parents", ()))
        descriptions[name] = entry.get("description", "")
        kinds[name] = entry.get("kind", CONTINUOUS)
        if entry.get("levels"):
            levels[name] = tuple(entry["levels"])
        rules[name] = entry.get("rule", "")
    return BenchmarkSpec(names, parents, descriptions, kinds, levels, rules)
