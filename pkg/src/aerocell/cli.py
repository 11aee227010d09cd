"""Command-line entry points: sweep-radius, sweep-distance, advise, validate-config."""

from __future__ import annotations

import argparse
import dataclasses
import sys

import numpy as np

from .advisor import DEFAULT_BUDGETS, advise, recommendation_line, report_to_csv
from .errors import ConfigError, ParameterError
from .pointfields import DisasterSpec, GaussianTown, HomogeneousTown
from .scenario import (
    FleetSpec,
    ScenarioConfig,
    SweepPlan,
    load_config,
    scenario_from_dict,
)
from .sweeps import emit_csv, run_distance_sweep, run_radius_sweep

DEFAULT_RADIUS_RANGE = (0.1, 5.0)
DEFAULT_DISTANCE_RANGE = (0.0, 30.0)
DEFAULT_FLEETS = {
    "sweep-radius": (("drone", (0, 1, 5, 15, 30)),),
    "sweep-distance": (("drone", (0, 1, 5, 15)),),
}


def _parse_fleet_flags(flags) -> tuple[FleetSpec, ...]:
    fleets: list[FleetSpec] = []
    for flag in flags:
        try:
            platform, counts = flag.split(":", 1)
            for c in counts.split(","):
                fleets.append(FleetSpec(platform=platform.strip(), count=int(c)))
        except (ValueError, IndexError) as exc:
            raise ConfigError("--fleet", f"expected 'platform:n1,n2,...', got {flag!r}") from exc
    return tuple(fleets)


def _default_scenario(command: str) -> ScenarioConfig:
    if command == "sweep-distance":
        town = GaussianTown(variance_km2=10.0, mean_count_100km=1254.0)
        disaster = DisasterSpec(center_distance_km=0.0, radius_km=0.5)
    else:
        town = HomogeneousTown(density_per_km2=10.0, window_radius_km=10.0)
        disaster = DisasterSpec(center_distance_km=0.0, radius_km=0.5)
    return ScenarioConfig(town=town, disaster=disaster, fleet=FleetSpec("drone", 0))


def _build_scenario(args, command: str) -> tuple[ScenarioConfig, dict]:
    doc = {}
    if args.config:
        doc = load_config(args.config)
        scenario = scenario_from_dict(doc)
    else:
        scenario = _default_scenario(command)
    if args.mode:
        scenario = dataclasses.replace(scenario, capacity_mode=args.mode)
        scenario.validate()
    return scenario, doc.get("sweep", {})


def _build_plan(args, sweep_doc: dict, command: str) -> SweepPlan:
    variable = "disaster_radius" if command == "sweep-radius" else "center_distance"
    points = args.points or int(sweep_doc.get("points", 50))
    if command == "sweep-radius":
        lo, hi = sweep_doc.get("radius_range_km", DEFAULT_RADIUS_RANGE)
    else:
        lo, hi = sweep_doc.get("distance_range_km", DEFAULT_DISTANCE_RANGE)
    values = tuple(float(v) for v in np.linspace(float(lo), float(hi), points))
    if args.fleet:
        fleets = _parse_fleet_flags(args.fleet)
    elif "fleets" in sweep_doc:
        fleets = tuple(FleetSpec(str(p), int(n)) for p, n in sweep_doc["fleets"])
    else:
        fleets = tuple(
            FleetSpec(p, n) for p, counts in DEFAULT_FLEETS[command] for n in counts
        )
    iterations = args.iterations or int(sweep_doc.get("iterations", 10_000))
    seed = args.seed if args.seed is not None else int(sweep_doc.get("seed", 0))
    workers = args.workers or int(sweep_doc.get("workers", 1))
    return SweepPlan(
        swept_variable=variable,
        values_km=values,
        fleets=fleets,
        iterations=iterations,
        master_seed=seed,
        workers=workers,
    )


def _cmd_sweep(args, command: str) -> int:
    scenario, sweep_doc = _build_scenario(args, command)
    plan = _build_plan(args, sweep_doc, command)
    runner = run_radius_sweep if command == "sweep-radius" else run_distance_sweep
    result = runner(plan, scenario)
    emit_csv(result, args.out)
    print(f"wrote {len(result.records)} records to {args.out}")
    return 0


def _cmd_advise(args) -> int:
    scenario, sweep_doc = _build_scenario(args, "advise")
    if args.fleet:
        candidates = _parse_fleet_flags(args.fleet)
    elif "fleets" in sweep_doc:
        candidates = tuple(FleetSpec(str(p), int(n)) for p, n in sweep_doc["fleets"])
    else:
        candidates = tuple(FleetSpec("drone", n) for n in (1, 5, 15))
    budgets = sweep_doc.get("budgets", DEFAULT_BUDGETS)
    if args.iterations:
        budgets = tuple(list(budgets[:-1]) + [args.iterations])
    seed = args.seed if args.seed is not None else int(sweep_doc.get("seed", 0))
    report = advise(
        scenario, candidates, budgets=budgets, seed=seed, workers=args.workers or 1
    )
    if args.out:
        report_to_csv(report, args.out)
    print(recommendation_line(report))
    return 0


def _cmd_validate(args) -> int:
    doc = load_config(args.config)
    scenario = scenario_from_dict(doc)
    if "sweep" in doc and "fleets" in doc["sweep"]:
        for p, n in doc["sweep"]["fleets"]:
            scenario.with_fleet(str(p), int(n)).validate()
    print("config ok")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aerocell",
        description="Monte Carlo simulator for aerial base stations over a disaster-struck cellular network",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_out: bool):
        p.add_argument("--config", help="JSON config file")
        p.add_argument("--seed", type=int, default=None, help="master seed (u64)")
        p.add_argument("--iterations", type=int, default=None, help="Monte Carlo iterations")
        p.add_argument("--points", type=int, default=None, help="number of sweep points")
        p.add_argument("--mode", choices=("truncated", "conditional"), default=None)
        p.add_argument(
            "--fleet",
            action="append",
            default=None,
            metavar="PLATFORM:N1,N2,...",
            help="fleet grid entry, repeatable",
        )
        p.add_argument("--workers", type=int, default=None, help="worker processes")
        p.add_argument("--out", required=needs_out, help="output CSV path")

    add_common(sub.add_parser("sweep-radius", help="capacity vs disaster radius"), True)
    add_common(sub.add_parser("sweep-distance", help="capacity vs disaster-town distance"), True)
    add_common(sub.add_parser("advise", help="search for the best fleet"), False)
    v = sub.add_parser("validate-config", help="validate a JSON config file")
    v.add_argument("--config", required=True, help="JSON config file")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("sweep-radius", "sweep-distance"):
            return _cmd_sweep(args, args.command)
        if args.command == "advise":
            return _cmd_advise(args)
        if args.command == "validate-config":
            return _cmd_validate(args)
        parser.error(f"unknown command {args.command}")
    except (ConfigError, ParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
