"""Sweep orchestration over disaster radius / center distance, and CSV output.

Records at the same sweep value share a record seed across fleet entries
(common random numbers), which sharpens fleet-vs-fleet comparisons.  Record
evaluation fans out over a process pool; output assembly is index ordered, so
the CSV bytes do not depend on the worker count.
"""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .capacity import MetricEstimate
from .errors import ConfigError, UndefinedEstimateError
from .estimator import estimate_metrics
from .pointfields import GaussianTown, HomogeneousTown
from .rng import derive_seed
from .scenario import FleetSpec, ScenarioConfig, SweepPlan

CSV_COLUMNS = (
    "sweep_variable",
    "sweep_value_km",
    "platform",
    "n_a",
    "capacity_mode",
    "ergodic_capacity_bps",
    "ci95_low",
    "ci95_high",
    "coverage_probability",
    "iterations",
    "seed",
)


@dataclass(frozen=True)
class SweepRecord:
    sweep_variable: str
    sweep_value_km: float
    platform: str
    n_a: int
    estimate: MetricEstimate


@dataclass(frozen=True)
class SweepResult:
    swept_variable: str
    records: tuple[SweepRecord, ...]


def _scenario_at(base: ScenarioConfig, variable: str, value: float, fleet: FleetSpec):
    if variable == "disaster_radius":
        scen = base.with_disaster(radius_km=float(value))
    else:
        scen = base.with_disaster(center_distance_km=float(value))
    return replace(scen, fleet=fleet)


def _record_task(args) -> SweepRecord:
    base, variable, value, fleet, iterations, seed, = args
    scenario = _scenario_at(base, variable, value, fleet)
    try:
        est = estimate_metrics(scenario, iterations, seed)
    except UndefinedEstimateError:
        # conditional mode with zero covered iterations: emit an undefined
        # capacity instead of aborting the sweep
        est = MetricEstimate(
            ergodic_capacity_bps=float("nan"),
            coverage_probability=0.0,
            std_error_bps=float("nan"),
            ci95_low_bps=float("nan"),
            ci95_high_bps=float("nan"),
            iterations=iterations,
            seed=seed,
            capacity_mode=scenario.capacity_mode,
        )
    return SweepRecord(
        sweep_variable=variable,
        sweep_value_km=float(value),
        platform=fleet.platform,
        n_a=fleet.count,
        estimate=est,
    )


def _run_sweep(plan: SweepPlan, base: ScenarioConfig) -> SweepResult:
    plan.validate()
    base.validate()
    tasks = []
    for fleet in plan.fleets:
        for v_idx, value in enumerate(plan.values_km):
            seed = derive_seed(plan.master_seed, v_idx)  # shared across fleets: CRN
            tasks.append((base, plan.swept_variable, value, fleet, plan.iterations, seed))
    if plan.workers == 1 or len(tasks) == 1:
        records = [_record_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=plan.workers) as pool:
            records = list(pool.map(_record_task, tasks))
    return SweepResult(swept_variable=plan.swept_variable, records=tuple(records))


def run_radius_sweep(plan: SweepPlan, base: ScenarioConfig) -> SweepResult:
    """Sweep the disaster radius over a homogeneous town."""
    if not isinstance(base.town, HomogeneousTown):
        raise ConfigError("town", "radius sweep requires a homogeneous town model")
    if plan.swept_variable != "disaster_radius":
        raise ConfigError("sweep.swept_variable", "radius sweep must sweep 'disaster_radius'")
    return _run_sweep(plan, base)


def run_distance_sweep(plan: SweepPlan, base: ScenarioConfig) -> SweepResult:
    """Sweep the disaster-to-town-center distance over a Gaussian town (fixed radius)."""
    if not isinstance(base.town, GaussianTown):
        raise ConfigError("town", "distance sweep requires a Gaussian town model")
    if plan.swept_variable != "center_distance":
        raise ConfigError("sweep.swept_variable", "distance sweep must sweep 'center_distance'")
    return _run_sweep(plan, base)


def emit_csv(result: SweepResult, path) -> None:
    """Write a sweep result as CSV (full-precision decimals, deterministic bytes)."""
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for rec in result.records:
                est = rec.estimate
                writer.writerow(
                    [
                        rec.sweep_variable,
                        repr(rec.sweep_value_km),
                        rec.platform,
                        rec.n_a,
                        est.capacity_mode,
                        repr(est.ergodic_capacity_bps),
                        repr(est.ci95_low_bps),
                        repr(est.ci95_high_bps),
                        repr(est.coverage_probability),
                        est.iterations,
                        est.seed,
                    ]
                )
    except OSError as exc:
        raise OSError(f"cannot write sweep CSV to {path}: {exc}") from exc


def read_csv(path) -> SweepResult:
    """Parse a sweep CSV back into a SweepResult (exact float round-trip)."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != CSV_COLUMNS:
            raise ConfigError("csv", f"unexpected header {header!r}")
        records = []
        for row in reader:
            est = MetricEstimate(
                ergodic_capacity_bps=float(row[5]),
                coverage_probability=float(row[8]),
                std_error_bps=float("nan"),
                ci95_low_bps=float(row[6]),
                ci95_high_bps=float(row[7]),
                iterations=int(row[9]),
                seed=int(row[10]),
                capacity_mode=row[4],
            )
            records.append(
                SweepRecord(
                    sweep_variable=row[0],
                    sweep_value_km=float(row[1]),
                    platform=row[2],
                    n_a=int(row[3]),
                    estimate=est,
                )
            )
    variable = records[0].sweep_variable if records else ""
    return SweepResult(swept_variable=variable, records=tuple(records))
