"""Command-line entry point.

Subcommands: gen, discover, eval, fairness, tune, report, plus pipeline
(gen -> discover -> eval -> fairness from one seed).  Every option can
also be supplied through a JSON config file (--config); explicit flags
win over the file, which wins over built-in defaults.  Each subcommand
writes a manifest recording its resolved configuration, input digests
and outputs; the pipeline's manifest is the canonical run-<seed>/
manifest.json, standalone commands use <command>.manifest.json so
chained invocations into one directory never clobber each other.

Exit codes: 0 ok, 2 argument error, 3 configuration error,
4 oracle unavailable, 5 internal error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .benchmark import (
    NoiseConfig,
    adult_benchmark_spec,
    generate_noisy,
    load_benchmark_spec,
    write_benchmark_spec,
)
from .dataset import TabularDataset
from .discovery import (
    DiscoveryConfig,
    ScoringWeights,
    run_active_discovery,
    run_bfs_baseline,
    run_pairwise_baseline,
)
from .errors import (
    ArgumentError,
    ConfigurationError,
    FairdagError,
    OracleUnavailableError,
)
from .fairness import FairnessSpec, fairness_report, write_fairness_report
from .graph import CausalGraph
from .metrics import compare
from .oracle import OracleConfig, build_oracle, write_query_log
from .stats import pair_stats, write_pair_stats_csv
from .tuning import PRESETS, SampledConfig, random_search, write_trials_csv

ENV_SEED = "CD_SEED"


# ---- shared plumbing ---------------------------------------------------------

def _default_seed() -> int:
    raw = os.environ.get(ENV_SEED, "1")
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{ENV_SEED} must be an integer, got {raw!r}")


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return "sha256:" + h.hexdigest()


def _write_manifest(out_dir: Path, name: str, command: str, config: dict,
                    inputs: list[Path], outputs: list[str], seed, wall: float) -> None:
    manifest = {
        "command": command,
        "config": {k: v for k, v in sorted(config.items())},
        "inputs": {str(p): _sha256(p) for p in inputs},
        "outputs": sorted(outputs),
        "seed": seed,
        "version": __version__,
        "wall_time_s": round(wall, 6),
        "created_unix": time.time(),
    }
    with open(out_dir / name, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _merge_options(defaults: dict, args: argparse.Namespace) -> dict:
    """defaults < JSON config file < explicit flags."""
    given = {k: v for k, v in vars(args).items() if k not in ("func", "config")}
    opts = dict(defaults)
    config_path = getattr(args, "config", None)
    if config_path:
        with open(config_path, encoding="utf-8") as fh:
            loaded = json.load(fh)
        unknown = set(loaded) - set(defaults)
        if unknown:
            raise ConfigurationError(f"unknown config keys: {sorted(unknown)}")
        opts.update(loaded)
    opts.update(given)
    if "seed" in opts and opts["seed"] is None:
        opts["seed"] = _default_seed()
    return opts


def _parse_weights(text) -> ScoringWeights:
    if isinstance(text, (list, tuple)):
        parts = [float(v) for v in text]
    else:
        parts = [float(v) for v in str(text).split(",")]
    if len(parts) != 3:
        raise ArgumentError("weights must be three comma-separated numbers")
    return ScoringWeights(*parts)


def _ensure_outdir(opts: dict) -> Path:
    out = Path(opts["out"])
    out.mkdir(parents=True, exist_ok=True)
    return out


# ---- gen ---------------------------------------------------------------------

GEN_DEFAULTS = {
    "n": 15000,
    "seed": None,
    "profile": "noisy",
    "alpha": 0.1,
    "gamma": 0.05,
    "latent": True,
    "emit_latent": False,
    "out": "run",
}


def cmd_gen(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    opts = _merge_options(GEN_DEFAULTS, args)
    out = _ensure_outdir(opts)
    if opts["profile"] == "baseline":
        config = NoiseConfig(alpha=0.0, gamma=0.0, latent_enabled=False, seed=opts["seed"])
    else:
        config = NoiseConfig(
            alpha=opts["alpha"], gamma=opts["gamma"],
            latent_enabled=opts["latent"], seed=opts["seed"],
        )
    bench = generate_noisy(opts["n"], config)

    bench.data.write_csv(out / "data.csv")
    bench.data.write_schema_json(out / "schema.json")
    bench.truth.write_adjacency_json(out / "truth.json")
    bench.truth.write_edge_list(out / "truth_edges.txt")
    write_benchmark_spec(adult_benchmark_spec(), out / "benchmark_spec.json")
    outputs = ["data.csv", "schema.json", "truth.json", "truth_edges.txt", "benchmark_spec.json"]
    if opts["emit_latent"]:
        with open(out / "latent_u.csv", "w", encoding="utf-8") as fh:
            fh.write("latent_u\n")
            fh.writelines(repr(float(v)) + "\n" for v in bench.latent_u)
        outputs.append("latent_u.csv")

    _write_manifest(out, "gen.manifest.json", "gen", opts, [], outputs,
                    opts["seed"], time.perf_counter() - t0)
    print(f"gen: wrote {len(outputs)} files to {out} "
          f"(n={opts['n']}, nodes={bench.truth.n_nodes}, edges={bench.truth.n_edges})")
    return 0


# ---- discover ------------------------------------------------------------------

DISCOVER_DEFAULTS = {
    "data": None,
    "schema": None,
    "mode": "active",
    "weights": "0.3,0.3,0.4",
    "threshold": 0.3,
    "max_iter": 100,
    "oracle": "sim",
    "sim_truth": None,
    "sim_flip": 0.1,
    "temperature": 0.0,
    "mi_normalization": "min-entropy",
    "mi_bins": 10,
    "bench_spec": None,
    "stats_csv": None,
    "seed": None,
    "out": "run",
}


def _build_discover_oracle(opts: dict, variables: list[str] | None):
    descriptions = None
    if opts["bench_spec"]:
        descriptions = load_benchmark_spec(opts["bench_spec"]).descriptions
    oracle_config = OracleConfig(
        kind="simulated" if opts["oracle"] == "sim" else "live",
        temperature=opts["temperature"],
        flip_probability=opts["sim_flip"],
        seed=opts["seed"],
    )
    truth = None
    if oracle_config.kind == "simulated":
        if not opts["sim_truth"]:
            raise ConfigurationError("simulated oracle requires --sim-truth")
        truth = CausalGraph.read_adjacency_json(opts["sim_truth"])
    return build_oracle(oracle_config, truth=truth, descriptions=descriptions), oracle_config


def cmd_discover(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    opts = _merge_options(DISCOVER_DEFAULTS, args)
    out = _ensure_outdir(opts)
    inputs = [Path(p) for p in (opts["data"], opts["schema"], opts["sim_truth"], opts["bench_spec"]) if p]

    dataset = None
    if opts["data"] and opts["schema"]:
        dataset = TabularDataset.read_csv(opts["data"], opts["schema"])

    if opts["mode"] == "active":
        if dataset is None:
            raise ConfigurationError("active mode requires --data and --schema")
        variables = dataset.names
    elif dataset is not None:
        variables = dataset.names
    elif opts["bench_spec"]:
        variables = load_benchmark_spec(opts["bench_spec"]).names
    elif opts["sim_truth"]:
        variables = CausalGraph.read_adjacency_json(opts["sim_truth"]).nodes
    else:
        raise ConfigurationError("need --data/--schema, --bench-spec, or --sim-truth for variables")

    oracle, oracle_config = _build_discover_oracle(opts, variables)
    if opts["mode"] == "active":
        config = DiscoveryConfig(
            weights=_parse_weights(opts["weights"]),
            score_threshold=opts["threshold"],
            max_iterations=opts["max_iter"],
            oracle=oracle_config,
            mi_bins=opts["mi_bins"],
            mi_normalization=opts["mi_normalization"],
        )
        stats = pair_stats(dataset, config.mi_bins, config.mi_normalization)
        if opts["stats_csv"]:
            write_pair_stats_csv(stats, opts["stats_csv"])
        result = run_active_discovery(dataset, config, oracle=oracle, stats=stats)
    elif opts["mode"] == "bfs":
        result = run_bfs_baseline(oracle, variables)
    elif opts["mode"] == "pairwise":
        result = run_pairwise_baseline(oracle, variables)
    else:
        raise ArgumentError(f"unknown mode {opts['mode']!r}")

    result.graph.write_adjacency_json(out / "pred.json")
    result.graph.write_edge_list(out / "pred_edges.txt")
    write_query_log(result.query_log, out / "query_log.jsonl")
    run_info = {
        "mode": opts["mode"],
        "stop_reason": result.stop_reason,
        "iterations_used": result.iterations_used,
        "oracle_calls": len(result.query_log),
        "pred_edges": result.graph.n_edges,
        "incomplete": result.incomplete,
    }
    opts_with_outcome = {**opts, **run_info}
    _write_manifest(out, "discover.manifest.json", "discover", opts_with_outcome, inputs,
                    ["pred.json", "pred_edges.txt", "query_log.jsonl"],
                    opts["seed"], time.perf_counter() - t0)
    print(f"discover[{opts['mode']}]: {result.graph.n_edges} edges, "
          f"{len(result.query_log)} oracle calls, stop={result.stop_reason}")
    return 0


# ---- eval ----------------------------------------------------------------------

EVAL_DEFAULTS = {"pred": None, "truth": None, "out": "metrics.json"}


def cmd_eval(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    opts = _merge_options(EVAL_DEFAULTS, args)
    if not opts["pred"] or not opts["truth"]:
        raise ArgumentError("eval requires --pred and --truth")
    pred = CausalGraph.read_adjacency_json(opts["pred"])
    truth = CausalGraph.read_adjacency_json(opts["truth"])
    report = compare(pred, truth)
    out_path = Path(opts["out"])
    out_path.parent.mkdir(parents=True, exist_ok=True)
    report.write_json(out_path)
    _write_manifest(out_path.parent, "eval.manifest.json", "eval", opts,
                    [Path(opts["pred"]), Path(opts["truth"])], [out_path.name],
                    None, time.perf_counter() - t0)
    print(f"eval: f1={report.f1:.4f} precision={report.precision:.4f} "
          f"recall={report.recall:.4f} nhd={report.nhd:.4f}")
    return 0


# ---- fairness --------------------------------------------------------------------

FAIRNESS_DEFAULTS = {
    "graph": None,
    "data": None,
    "schema": None,
    "sensitive": "sex,race,age",
    "outcome": "income",
    "out": "fairness.json",
}


def cmd_fairness(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    opts = _merge_options(FAIRNESS_DEFAULTS, args)
    if not opts["graph"]:
        raise ArgumentError("fairness requires --graph")
    graph = CausalGraph.read_adjacency_json(opts["graph"])
    dataset = None
    inputs = [Path(opts["graph"])]
    if opts["data"] and opts["schema"]:
        dataset = TabularDataset.read_csv(opts["data"], opts["schema"])
        inputs += [Path(opts["data"]), Path(opts["schema"])]
    spec = FairnessSpec(
        sensitive=tuple(s.strip() for s in opts["sensitive"].split(",") if s.strip()),
        outcome=opts["outcome"],
    )
    report = fairness_report(graph, dataset, spec)
    out_path = Path(opts["out"])
    out_path.parent.mkdir(parents=True, exist_ok=True)
    write_fairness_report(report, out_path)
    _write_manifest(out_path.parent, "fairness.manifest.json", "fairness", opts,
                    inputs, [out_path.name], None, time.perf_counter() - t0)
    print(f"fairness: direct={report['direct_paths']} indirect={report['indirect_paths']} "
          f"spurious={report['spurious_paths']} contribution={report['fairness_path_contribution']:.4f}")
    return 0


# ---- tune -----------------------------------------------------------------------

TUNE_DEFAULTS = {
    "preset": "adult",
    "trials": 200,
    "chunks": 4,
    "oracle": "sim",
    "sim_flip": 0.1,
    "seed": None,
    "n": 15000,
    "data": None,
    "schema": None,
    "truth": None,
    "out": "trials.csv",
}


def cmd_tune(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    opts = _merge_options(TUNE_DEFAULTS, args)
    if opts["oracle"] != "sim":
        raise ConfigurationError("tune currently drives the simulated oracle only")
    if opts["preset"] not in PRESETS:
        raise ArgumentError(f"unknown preset {opts['preset']!r}")
    space = PRESETS[opts["preset"]]

    inputs: list[Path] = []
    if opts["data"] and opts["schema"] and opts["truth"]:
        dataset = TabularDataset.read_csv(opts["data"], opts["schema"])
        truth = CausalGraph.read_adjacency_json(opts["truth"])
        inputs = [Path(opts["data"]), Path(opts["schema"]), Path(opts["truth"])]
    elif opts["preset"] == "adult":
        bench = generate_noisy(opts["n"], NoiseConfig(seed=opts["seed"]))
        dataset, truth = bench.data, bench.truth
    else:
        raise ConfigurationError("non-adult presets need --data, --schema and --truth")

    stats = pair_stats(dataset)

    def evaluator(config: SampledConfig):
        oracle_config = OracleConfig(
            kind="simulated",
            temperature=config.temperature,
            flip_probability=opts["sim_flip"],
            seed=config.seed,
        )
        disc = DiscoveryConfig(
            weights=ScoringWeights(*config.weights),
            score_threshold=config.score_threshold,
            max_iterations=config.max_iterations,
            oracle=oracle_config,
        )
        result = run_active_discovery(dataset, disc, stats=stats, truth=truth)
        return compare(result.graph, truth)

    best, records = random_search(space, opts["trials"], opts["chunks"], evaluator, opts["seed"])
    out_path = Path(opts["out"])
    out_path.parent.mkdir(parents=True, exist_ok=True)
    write_trials_csv(records, out_path)
    best_path = out_path.with_name(out_path.stem + "_best.json")
    with open(best_path, "w", encoding="utf-8") as fh:
        json.dump(
            {
                "weights": list(best.weights),
                "score_threshold": best.score_threshold,
                "temperature": best.temperature,
                "max_iterations": best.max_iterations,
                "f1": max(r.f1 for r in records),
            },
            fh, indent=2, sort_keys=True,
        )
        fh.write("\n")
    _write_manifest(out_path.parent, "tune.manifest.json", "tune", opts, inputs,
                    [out_path.name, best_path.name], opts["seed"], time.perf_counter() - t0)
    print(f"tune: {len(records)} trials, best f1={max(r.f1 for r in records):.4f}")
    return 0


# ---- report ---------------------------------------------------------------------

REPORT_DEFAULTS = {"runs": [], "out": "report.csv"}


def cmd_report(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    opts = _merge_options(REPORT_DEFAULTS, args)
    run_dirs = [Path(p) for p in opts["runs"]]
    if not run_dirs:
        raise ArgumentError("report needs at least one run directory")

    rows: list[dict] = []
    inputs: list[Path] = []
    for d in run_dirs:
        metrics_path = d / "metrics.json"
        if not metrics_path.exists():
            print(f"warning: {d} has no metrics.json, skipped", file=sys.stderr)
            continue
        with open(metrics_path, encoding="utf-8") as fh:
            row = json.load(fh)
        inputs.append(metrics_path)
        fairness_path = d / "fairness.json"
        if fairness_path.exists():
            with open(fairness_path, encoding="utf-8") as fh:
                fair = json.load(fh)
            row.update({k: v for k, v in fair.items() if isinstance(v, (int, float, bool))})
            inputs.append(fairness_path)
        rows.append(row)
    if not rows:
        raise ArgumentError("no readable metrics among the given run directories")

    keys = sorted({k for row in rows for k in row if isinstance(row[k], (int, float, bool))})
    table: list[tuple[str, float, float, int]] = []
    for key in keys:
        values = [float(row[key]) for row in rows if key in row]
        mean = float(np.mean(values))
        sd = float(np.std(values, ddof=1)) if len(values) > 1 else 0.0
        table.append((key, mean, sd, len(values)))

    out_path = Path(opts["out"])
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write("metric,mean,sd,count\n")
        for key, mean, sd, count in table:
            fh.write(f"{key},{mean!r},{sd!r},{count}\n")

    width = max(len(k) for k in keys)
    lines = [f"{'metric'.ljust(width)}  {'mean':>12}  {'sd':>12}  {'n':>4}"]
    for key, mean, sd, count in table:
        lines.append(f"{key.ljust(width)}  {mean:12.6g}  {sd:12.6g}  {count:4d}")
    print("\n".join(lines))

    _write_manifest(out_path.parent, "report.manifest.json", "report", opts, inputs,
                    [out_path.name], None, time.perf_counter() - t0)
    return 0


# ---- pipeline ----------------------------------------------------------------------

PIPELINE_DEFAULTS = {
    "seed": None,
    "n": 5000,
    "profile": "noisy",
    "alpha": 0.1,
    "gamma": 0.05,
    "latent": True,
    "mode": "active",
    "weights": "0.3,0.3,0.4",
    "threshold": 0.0,
    "max_iter": 210,
    "sim_flip": 0.0,
    "sensitive": "sex,race,age",
    "outcome": "income",
    "out": None,
}


def end_to_end(seed: int, out_dir, **overrides) -> dict:
    """gen -> discover -> eval -> fairness from one seed, with defaults.

    Returns the metrics mapping; the run directory ends up with the full
    fixed layout (data.csv .. manifest.json)."""
    opts = dict(PIPELINE_DEFAULTS)
    opts.update(overrides)
    opts["seed"] = seed
    opts["out"] = str(out_dir)
    t0 = time.perf_counter()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    stage = "gen"
    try:
        if opts["profile"] == "baseline":
            config = NoiseConfig(alpha=0.0, gamma=0.0, latent_enabled=False, seed=seed)
        else:
            config = NoiseConfig(alpha=opts["alpha"], gamma=opts["gamma"],
                                 latent_enabled=opts["latent"], seed=seed)
        bench = generate_noisy(opts["n"], config)
        bench.data.write_csv(out / "data.csv")
        bench.data.write_schema_json(out / "schema.json")
        bench.truth.write_adjacency_json(out / "truth.json")

        stage = "discover"
        oracle_config = OracleConfig(kind="simulated", flip_probability=opts["sim_flip"], seed=seed)
        oracle = build_oracle(oracle_config, truth=bench.truth)
        if opts["mode"] == "active":
            disc = DiscoveryConfig(
                weights=_parse_weights(opts["weights"]),
                score_threshold=opts["threshold"],
                max_iterations=opts["max_iter"],
                oracle=oracle_config,
            )
            result = run_active_discovery(bench.data, disc, oracle=oracle)
        elif opts["mode"] == "bfs":
            result = run_bfs_baseline(oracle, bench.data.names)
        else:
            result = run_pairwise_baseline(oracle, bench.data.names)
        result.graph.write_adjacency_json(out / "pred.json")
        write_query_log(result.query_log, out / "query_log.jsonl")

        stage = "eval"
        report = compare(result.graph, bench.truth)
        report.write_json(out / "metrics.json")

        stage = "fairness"
        spec = FairnessSpec(
            sensitive=tuple(s.strip() for s in opts["sensitive"].split(",")),
            outcome=opts["outcome"],
        )
        fair = fairness_report(result.graph, bench.data, spec)
        write_fairness_report(fair, out / "fairness.json")
    except FairdagError as exc:
        raise type(exc)(f"pipeline stage {stage!r} failed: {exc}") from exc

    _write_manifest(out, "manifest.json", "pipeline", opts, [],
                    ["data.csv", "schema.json", "truth.json", "pred.json",
                     "query_log.jsonl", "metrics.json", "fairness.json"],
                    seed, time.perf_counter() - t0)
    return report.to_dict()


def cmd_pipeline(args: argparse.Namespace) -> int:
    opts = _merge_options(PIPELINE_DEFAULTS, args)
    seed = opts["seed"]
    out_dir = opts["out"] or f"run-{seed}"
    metrics = end_to_end(seed, out_dir, **{k: v for k, v in opts.items()
                                           if k not in ("seed", "out")})
    print(f"pipeline: run dir {out_dir}, f1={metrics['f1']:.4f}")
    return 0


# ---- parser / main ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fairdag", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"fairdag {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    S = argparse.SUPPRESS

    p = sub.add_parser("gen", help="generate the semi-synthetic benchmark")
    p.add_argument("--config")
    p.add_argument("--n", type=int, default=S)
    p.add_argument("--seed", type=int, default=S)
    p.add_argument("--profile", choices=["noisy", "baseline"], default=S)
    p.add_argument("--alpha", type=float, default=S)
    p.add_argument("--gamma", type=float, default=S)
    p.add_argument("--latent", action=argparse.BooleanOptionalAction, default=S)
    p.add_argument("--emit-latent", dest="emit_latent", action="store_true", default=S)
    p.add_argument("--out", default=S)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("discover", help="run a discovery mode against an oracle")
    p.add_argument("--config")
    p.add_argument("--data", default=S)
    p.add_argument("--schema", default=S)
    p.add_argument("--mode", choices=["active", "bfs", "pairwise"], default=S)
    p.add_argument("--weights", default=S)
    p.add_argument("--threshold", type=float, default=S)
    p.add_argument("--max-iter", dest="max_iter", type=int, default=S)
    p.add_argument("--oracle", choices=["sim", "live"], default=S)
    p.add_argument("--sim-truth", dest="sim_truth", default=S)
    p.add_argument("--sim-flip", dest="sim_flip", type=float, default=S)
    p.add_argument("--temperature", type=float, default=S)
    p.add_argument("--mi-normalization", dest="mi_normalization",
                   choices=["min-entropy", "none"], default=S)
    p.add_argument("--mi-bins", dest="mi_bins", type=int, default=S)
    p.add_argument("--bench-spec", dest="bench_spec", default=S)
    p.add_argument("--stats-csv", dest="stats_csv", default=S)
    p.add_argument("--seed", type=int, default=S)
    p.add_argument("--out", default=S)
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("eval", help="compare predicted and truth graphs")
    p.add_argument("--config")
    p.add_argument("--pred", default=S)
    p.add_argument("--truth", default=S)
    p.add_argument("--out", default=S)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("fairness", help="pathway analysis of a graph")
    p.add_argument("--config")
    p.add_argument("--graph", default=S)
    p.add_argument("--data", default=S)
    p.add_argument("--schema", default=S)
    p.add_argument("--sensitive", default=S)
    p.add_argument("--outcome", default=S)
    p.add_argument("--out", default=S)
    p.set_defaults(func=cmd_fairness)

    p = sub.add_parser("tune", help="random search over a hyperparameter preset")
    p.add_argument("--config")
    p.add_argument("--preset", default=S)
    p.add_argument("--trials", type=int, default=S)
    p.add_argument("--chunks", type=int, default=S)
    p.add_argument("--oracle", choices=["sim", "live"], default=S)
    p.add_argument("--sim-flip", dest="sim_flip", type=float, default=S)
    p.add_argument("--seed", type=int, default=S)
    p.add_argument("--n", type=int, default=S)
    p.add_argument("--data", default=S)
    p.add_argument("--schema", default=S)
    p.add_argument("--truth", default=S)
    p.add_argument("--out", default=S)
    p.set_defaults(func=cmd_tune)

    p = sub.add_parser("report", help="aggregate metrics over run directories")
    p.add_argument("--config")
    p.add_argument("runs", nargs="*", default=S)
    p.add_argument("--out", default=S)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("pipeline", help="gen -> discover -> eval -> fairness from one seed")
    p.add_argument("--config")
    p.add_argument("--seed", type=int, default=S)
    p.add_argument("--n", type=int, default=S)
    p.add_argument("--profile", choices=["noisy", "baseline"], default=S)
    p.add_argument("--alpha", type=float, default=S)
    p.add_argument("--gamma", type=float, default=S)
    p.add_argument("--latent", action=argparse.BooleanOptionalAction, default=S)
    p.add_argument("--mode", choices=["active", "bfs", "pairwise"], default=S)
    p.add_argument("--weights", default=S)
    p.add_argument("--threshold", type=float, default=S)
    p.add_argument("--max-iter", dest="max_iter", type=int, default=S)
    p.add_argument("--sim-flip", dest="sim_flip", type=float, default=S)
    p.add_argument("--sensitive", default=S)
    p.add_argument("--outcome", default=S)
    p.add_argument("--out", default=S)
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ArgumentError as exc:
        print(f"error: argument-error: {exc}", file=sys.stderr)
        return 2
    except ConfigurationError as exc:
        print(f"error: configuration-error: {exc}", file=sys.stderr)
        return 3
    except OracleUnavailableError as exc:
        print(f"error: oracle-unavailable: {exc}", file=sys.stderr)
        return 4
    except Exception as exc:  # pragma: no cover - defensive
        print(f"error: internal-error: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
