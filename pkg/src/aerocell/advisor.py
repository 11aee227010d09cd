"""Fleet advisor: successive-halving search over (platform, fleet size) candidates."""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .capacity import MetricEstimate
from .errors import ParameterError
from .estimator import estimate_metrics
from .rng import derive_seed
from .scenario import FleetSpec, ScenarioConfig

DEFAULT_BUDGETS = (1_000, 4_000, 16_000)

REPORT_COLUMNS = (
    "platform",
    "n_a",
    "budget_iterations",
    "final_round",
    "ergodic_capacity_bps",
    "ci95_low",
    "ci95_high",
    "coverage_probability",
    "seed",
)


@dataclass(frozen=True)
class CandidateResult:
    fleet: FleetSpec
    estimate: MetricEstimate
    budget: int
    final_round: bool


@dataclass(frozen=True)
class AdvisorReport:
    best: FleetSpec
    table: tuple[CandidateResult, ...]
    margin_bps: float
    statistically_resolved: bool


def _evaluate(args):
    scenario, fleet, iterations, seed = args
    est = estimate_metrics(scenario.with_fleet(fleet.platform, fleet.count), iterations, seed)
    return CandidateResult(fleet=fleet, estimate=est, budget=iterations, final_round=False)


def advise(
    scenario: ScenarioConfig,
    candidates,
    budgets=DEFAULT_BUDGETS,
    seed: int = 0,
    workers: int = 1,
) -> AdvisorReport:
    """Search the candidate grid for the fleet with the best ergodic capacity.

    All candidates in a round share the round's random substream (common
    random numbers).  Each round keeps the top half (never fewer than two)
    and moves to the next, larger budget; the survivors are re-evaluated at
    the final budget and the report's best/margin come from that final table.
    Ties break toward earlier grid order.  Deterministic for a fixed seed.
    """
    fleets = [c if isinstance(c, FleetSpec) else FleetSpec(*c) for c in candidates]
    if len(fleets) < 2:
        raise ParameterError("advise needs at least 2 candidates")
    budgets = [int(b) for b in budgets]
    if len(budgets) < 1 or any(b < 1 for b in budgets):
        raise ParameterError("budgets must contain at least one positive iteration count")
    scenario.validate()
    for f in fleets:
        scenario.with_fleet(f.platform, f.count).validate()

    order = {f: i for i, f in enumerate(fleets)}
    results: dict[FleetSpec, CandidateResult] = {}
    alive = list(fleets)

    def run_round(round_idx: int, budget: int, pool_fleets) -> list[CandidateResult]:
        round_seed = derive_seed(seed, round_idx)
        tasks = [(scenario, f, budget, round_seed) for f in pool_fleets]
        if workers == 1 or len(tasks) == 1:
            return [_evaluate(t) for t in tasks]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_evaluate, tasks))

    for round_idx, budget in enumerate(budgets[:-1]):
        if len(alive) <= 2:
            break
        for res in run_round(round_idx, budget, alive):
            results[res.fleet] = res
        # stable sort: ties keep grid order, so earlier entries win ties
        alive.sort(
            key=lambda f: (-results[f].estimate.ergodic_capacity_bps, order[f])
        )
        keep = max(2, (len(alive) + 1) // 2)
        alive = alive[:keep]
        alive.sort(key=lambda f: order[f])

    final_budget = budgets[-1]
    for res in run_round(len(budgets) - 1, final_budget, alive):
        results[res.fleet] = CandidateResult(
            fleet=res.fleet, estimate=res.estimate, budget=res.budget, final_round=True
        )

    finalists = sorted(
        (results[f] for f in alive),
        key=lambda r: (-r.estimate.ergodic_capacity_bps, order[r.fleet]),
    )
    best, runner_up = finalists[0], finalists[1]
    margin = best.estimate.ergodic_capacity_bps - runner_up.estimate.ergodic_capacity_bps
    resolved = best.estimate.ci95_low_bps > runner_up.estimate.ci95_high_bps
    table = tuple(sorted(results.values(), key=lambda r: order[r.fleet]))
    return AdvisorReport(
        best=best.fleet,
        table=table,
        margin_bps=float(margin),
        statistically_resolved=bool(resolved),
    )


def report_to_csv(report: AdvisorReport, path) -> None:
    """Persist an advisor report as CSV."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        for res in report.table:
            est = res.estimate
            writer.writerow(
                [
                    res.fleet.platform,
                    res.fleet.count,
                    res.budget,
                    int(res.final_round),
                    repr(est.ergodic_capacity_bps),
                    repr(est.ci95_low_bps),
                    repr(est.ci95_high_bps),
                    repr(est.coverage_probability),
                    est.seed,
                ]
            )


def recommendation_line(report: AdvisorReport) -> str:
    flag = "resolved" if report.statistically_resolved else "unresolved"
    return (
        f"best fleet: {report.best.platform} x {report.best.count} "
        f"(margin {report.margin_bps:.6g} bit/s, {flag})"
    )
