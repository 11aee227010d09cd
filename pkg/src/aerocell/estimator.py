"""Monte Carlo estimation of ergodic capacity and coverage probability.

Each iteration draws a fresh world (town, failures, fleet, link states,
fading), associates the typical user by maximum average received power, and
scores the Shannon rate against the SINR threshold.

Sampled scenarios are evaluated in fixed spans of ``_SPAN`` iterations with
all random draws batched per span and the per-iteration reduction done with
segment arithmetic, which keeps the hot path free of Python-level work.  The
span boundaries and the substream keys depend only on (seed, iteration
index), so the estimate is bit-identical for a given (scenario, iterations,
seed) no matter how many workers execute it.  Pinned topologies
(``fixed_topology``) go through a plain per-iteration evaluator instead.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import rng as rngmod
from .capacity import MetricEstimate, summarize_rates
from .channel import LinkState, los_probability
from .errors import ParameterError
from .pointfields import DisasterSpec, GaussianTown, HomogeneousTown, deploy_fleet
from .scenario import ScenarioConfig

_SPAN = 256


def _pow_neg(base, alpha: float):
    """base ** (-alpha) with multiply fast paths for the common integer exponents."""
    if alpha == 3.0:
        return 1.0 / (base * base * base)
    if alpha == 2.0:
        return 1.0 / (base * base)
    if alpha == 4.0:
        sq = base * base
        return 1.0 / (sq * sq)
    return base ** (-alpha)


def _segment_reduce(powers: np.ndarray, received: np.ndarray, bounds: np.ndarray):
    """Per-segment (sum of received, max power, received at first argmax of power).

    Dead stations carry power 0, so an all-dead/empty segment reports a max
    power of 0 which the caller treats as "no candidate".
    """
    k = len(bounds) - 1
    sums = np.zeros(k)
    p_max = np.zeros(k)
    s_serving = np.zeros(k)
    for j in range(k):
        lo, hi = bounds[j], bounds[j + 1]
        if hi > lo:
            pw = powers[lo:hi]
            i0 = np.argmax(pw)
            if pw[i0] > 0.0:
                p_max[j] = pw[i0]
                s_serving[j] = received[lo + i0]
            sums[j] = received[lo:hi].sum()
    return sums, p_max, s_serving


class _World:
    """Scenario unpacked into plain floats/arrays for the hot loop."""

    def __init__(self, scenario: ScenarioConfig, seed: int):
        scenario.validate()
        self.scenario = scenario
        table = scenario.platform_table()
        self.tbs_profile = table["tbs"]
        self.abs_profile = table[scenario.fleet.platform]
        self.n_abs = scenario.fleet.count

        # typical user sits at the disaster center; homogeneous towns are
        # translation invariant so the hole is centered on the user/origin
        if isinstance(scenario.town, HomogeneousTown):
            self.disaster_center = np.zeros(2)
            self.deploy_disaster = DisasterSpec(
                center_distance_km=0.0, radius_km=scenario.disaster.radius_km
            )
        else:
            self.disaster_center = scenario.disaster.center_xy()
            self.deploy_disaster = scenario.disaster
        self.user = self.disaster_center
        self.rho = scenario.disaster.radius_km

        ref = scenario.reference_distance_m
        tp, ap = self.tbs_profile, self.abs_profile
        self.tbs_gain = tp.transmit_power_w * tp.excess_loss[LinkState.TERRESTRIAL]
        self.tbs_alpha = tp.alpha[LinkState.TERRESTRIAL]
        self.tbs_m = tp.nakagami_m[LinkState.TERRESTRIAL]
        if self.n_abs > 0:
            self.abs_alt = ap.altitude_km
            self.abs_gain_los = ap.transmit_power_w * ap.excess_loss[LinkState.AERIAL_LOS]
            self.abs_gain_nlos = ap.transmit_power_w * ap.excess_loss[LinkState.AERIAL_NLOS]
            self.abs_alpha_los = ap.alpha[LinkState.AERIAL_LOS]
            self.abs_alpha_nlos = ap.alpha[LinkState.AERIAL_NLOS]
            self.abs_m_los = ap.nakagami_m[LinkState.AERIAL_LOS]
            self.abs_m_nlos = ap.nakagami_m[LinkState.AERIAL_NLOS]
        self.km_to_ref = 1000.0 / ref
        self.min_d_km = scenario.min_distance_m / 1000.0
        self.noise = scenario.radio.noise_power_w
        self.tau = scenario.radio.sinr_threshold_linear
        self.bandwidth = scenario.radio.bandwidth_hz
        self.los_model = scenario.los_model
        self.fixed = scenario.fixed_topology
        self.det_fading = scenario.deterministic_fading

        self.frozen_fleet = None
        if self.fixed is None and self.n_abs > 0 and scenario.fleet_resample == "frozen":
            stream = rngmod.substream(seed, rngmod.FROZEN_FLEET, 0)
            self.frozen_fleet = deploy_fleet(self.deploy_disaster, self.n_abs, self.abs_alt, stream)

    # -- batched sampled-world evaluation -----------------------------------

    def _town_block(self, seed: int, start: int, k: int):
        """Sample k towns; returns per-iteration (sum, max power, serving received)."""
        town = self.scenario.town
        town_rng = rngmod.substream(seed, rngmod.TOWN, start)
        if isinstance(town, HomogeneousTown):
            mean = town.density_per_km2 * np.pi * town.window_radius_km**2
            counts = town_rng.poisson(mean, k)
            bounds = np.zeros(k + 1, dtype=np.int64)
            np.cumsum(counts, out=bounds[1:])
            total = int(bounds[-1])
            # the window is centered on the user and the field is isotropic,
            # so only radial distances matter; angles are never drawn
            r = town.window_radius_km * np.sqrt(town_rng.random(total))
            alive = None
            d_center = r
        else:
            inside_100 = -np.expm1(-(100.0**2) / (2.0 * town.variance_km2))
            mean = town.mean_count_100km / inside_100
            counts = town_rng.poisson(mean, k)
            bounds = np.zeros(k + 1, dtype=np.int64)
            np.cumsum(counts, out=bounds[1:])
            total = int(bounds[-1])
            sigma = np.sqrt(town.variance_km2)
            xy = town_rng.normal(0.0, sigma, size=(total, 2))
            px, py = xy[:, 0], xy[:, 1]
            alive = px * px + py * py <= town.truncation_radius_km**2
            dx = px - self.user[0]
            dy = py - self.user[1]
            d_center = np.sqrt(dx * dx + dy * dy)

        survives = d_center >= self.rho
        if alive is not None:
            survives &= alive
        d = np.maximum(d_center, self.min_d_km)
        powers = self.tbs_gain * _pow_neg(d * self.km_to_ref, self.tbs_alpha)
        powers = np.where(survives, powers, 0.0)

        if self.det_fading:
            received = powers
        else:
            fade_rng = rngmod.substream(seed, rngmod.TBS_FADING, start)
            # fading is drawn for every town point (pre-thinning) so the
            # stream stays aligned across fleet configurations
            fading = fade_rng.gamma(self.tbs_m, 1.0 / self.tbs_m, total)
            received = powers * fading

        return _segment_reduce(powers, received, bounds)

    def _abs_block(self, seed: int, start: int, k: int):
        """Fleet draws for k iterations; per-iteration (sum, max power, serving received)."""
        n = self.n_abs
        if self.frozen_fleet is not None:
            pts = self.frozen_fleet
            horiz2 = (pts[:, 0] - self.user[0]) ** 2 + (pts[:, 1] - self.user[1]) ** 2
            horiz2 = np.broadcast_to(horiz2, (k, n)).T
        else:
            fleet_rng = rngmod.substream(seed, rngmod.FLEET_POSITION, start)
            # candidate-major layout: candidate j's draws do not depend on n,
            # so fleets of different sizes share their common prefix
            rad2 = self.rho * self.rho * fleet_rng.random((n, k))
            horiz2 = rad2  # uniform disk: squared radius is uniform; angle irrelevant
        alt = self.abs_alt
        d = np.sqrt(horiz2 + alt * alt) * self.km_to_ref

        elev = np.degrees(np.arctan2(alt, np.sqrt(horiz2)))
        p_los = los_probability(elev, self.los_model)
        state_rng = rngmod.substream(seed, rngmod.LINK_STATE, start)
        los = state_rng.random((n, k)) < p_los

        powers = np.where(
            los,
            self.abs_gain_los * _pow_neg(d, self.abs_alpha_los),
            self.abs_gain_nlos * _pow_neg(d, self.abs_alpha_nlos),
        )
        if self.det_fading:
            received = powers
        else:
            fade_rng = rngmod.substream(seed, rngmod.ABS_FADING, start)
            g_los = fade_rng.gamma(self.abs_m_los, 1.0 / self.abs_m_los, (n, k))
            g_nlos = fade_rng.gamma(self.abs_m_nlos, 1.0 / self.abs_m_nlos, (n, k))
            received = powers * np.where(los, g_los, g_nlos)

        sums = received.sum(axis=0)
        order = np.argmax(powers, axis=0)
        cols = np.arange(k)
        return sums, powers[order, cols], received[order, cols]

    def evaluate_span(self, seed: int, start: int, k: int):
        """Rates/coverage/SINR for iterations [start, start+k) of a sampled scenario."""
        tbs_sum, tbs_pmax, tbs_s = self._town_block(seed, start, k)
        if self.n_abs > 0:
            abs_sum, abs_pmax, abs_s = self._abs_block(seed, start, k)
        else:
            abs_sum = abs_pmax = abs_s = np.zeros(k)

        # ties go to the terrestrial side = lower index in (tbs, abs) order
        tbs_serves = tbs_pmax >= abs_pmax
        signal = np.where(tbs_serves, tbs_s, abs_s)
        interference = tbs_sum + abs_sum - signal
        with np.errstate(invalid="ignore"):
            sinr = signal / (interference + self.noise)
        no_candidate = (tbs_pmax == 0.0) & (abs_pmax == 0.0)
        sinr = np.where(no_candidate, 0.0, sinr)
        covered = sinr >= self.tau
        rates = np.where(covered, self.bandwidth * np.log2(1.0 + sinr), 0.0)
        return rates, covered, sinr

    # -- pinned-topology evaluation (also the oracle-checked path) ----------

    def iteration_fixed(self, seed: int, i: int):
        """One realization of a pinned topology; returns (rate, covered, sinr)."""
        tbs = self.fixed.tbs_array()
        if len(tbs):
            # the hole still applies to pinned topologies
            cx, cy = self.disaster_center
            d = np.hypot(tbs[:, 0] - cx, tbs[:, 1] - cy)
            tbs = tbs[d >= self.rho]
        abs_pts = self.fixed.aerial_array()
        los = self.fixed.los_array()

        n_tbs, n_abs = len(tbs), len(abs_pts)
        if n_tbs + n_abs == 0:
            return 0.0, False, 0.0

        powers = np.empty(n_tbs + n_abs)
        if n_tbs:
            d = np.hypot(tbs[:, 0] - self.user[0], tbs[:, 1] - self.user[1])
            d = np.maximum(d, self.min_d_km)
            powers[:n_tbs] = self.tbs_gain * (d * self.km_to_ref) ** (-self.tbs_alpha)
        if n_abs:
            horiz = np.hypot(abs_pts[:, 0] - self.user[0], abs_pts[:, 1] - self.user[1])
            d3 = np.hypot(horiz, abs_pts[:, 2]) * self.km_to_ref
            powers[n_tbs:] = np.where(
                los,
                self.abs_gain_los * d3 ** (-self.abs_alpha_los),
                self.abs_gain_nlos * d3 ** (-self.abs_alpha_nlos),
            )

        if self.det_fading:
            fading = np.ones(n_tbs + n_abs)
        else:
            fading = np.empty(n_tbs + n_abs)
            if n_tbs:
                tf = rngmod.substream(seed, rngmod.TBS_FADING, i)
                fading[:n_tbs] = tf.gamma(self.tbs_m, 1.0 / self.tbs_m, n_tbs)
            if n_abs:
                m_los = self.abs_profile.nakagami_m[LinkState.AERIAL_LOS]
                m_nlos = self.abs_profile.nakagami_m[LinkState.AERIAL_NLOS]
                af = rngmod.substream(seed, rngmod.ABS_FADING, i)
                g_los = af.gamma(m_los, 1.0 / m_los, n_abs)
                g_nlos = af.gamma(m_nlos, 1.0 / m_nlos, n_abs)
                fading[n_tbs:] = np.where(los, g_los, g_nlos)

        received = powers * fading
        serving = int(np.argmax(powers))
        signal = received[serving]
        interference = np.sum(received) - signal
        sinr = signal / (interference + self.noise)
        covered = bool(sinr >= self.tau)
        rate = self.bandwidth * np.log2(1.0 + sinr) if covered else 0.0
        return float(rate), covered, float(sinr)


def _run_range(scenario: ScenarioConfig, seed: int, start: int, stop: int):
    world = _World(scenario, seed)
    n = stop - start
    rates = np.empty(n)
    covered = np.empty(n, dtype=bool)
    sinrs = np.empty(n)
    if world.fixed is not None:
        for k in range(n):
            rates[k], covered[k], sinrs[k] = world.iteration_fixed(seed, start + k)
    else:
        for s in range(start, stop, _SPAN):
            k = min(_SPAN, stop - s)
            lo, hi = s - start, s - start + k
            rates[lo:hi], covered[lo:hi], sinrs[lo:hi] = world.evaluate_span(seed, s, k)
    return rates, covered, sinrs


def _run_range_payload(payload):
    scenario, seed, start, stop = payload
    return _run_range(scenario, seed, start, stop)


def _simulate(scenario: ScenarioConfig, iterations: int, seed: int, n_jobs: int = 1):
    """Per-iteration truncated rates, coverage flags and SINRs, index ordered."""
    if iterations < 1:
        raise ParameterError("iterations must be >= 1")
    if n_jobs < 1:
        raise ParameterError("n_jobs must be >= 1")
    # span-aligned task boundaries keep the stream layout independent of n_jobs
    step = _SPAN * max(1, 4096 // _SPAN)
    bounds = list(range(0, iterations, step)) + [iterations]
    spans = [(bounds[j], bounds[j + 1]) for j in range(len(bounds) - 1)]
    rates = np.empty(iterations)
    covered = np.empty(iterations, dtype=bool)
    sinrs = np.empty(iterations)
    if n_jobs == 1 or len(spans) == 1:
        for start, stop in spans:
            rates[start:stop], covered[start:stop], sinrs[start:stop] = _run_range(
                scenario, seed, start, stop
            )
    else:
        payloads = [(scenario, seed, start, stop) for start, stop in spans]
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            for (start, stop), out in zip(spans, pool.map(_run_range_payload, payloads)):
                rates[start:stop], covered[start:stop], sinrs[start:stop] = out
    return rates, covered, sinrs


def estimate_metrics(
    scenario: ScenarioConfig,
    iterations: int,
    seed: int,
    mode: str | None = None,
    n_jobs: int = 1,
) -> MetricEstimate:
    """Monte Carlo MetricEstimate; deterministic in (scenario, iterations, seed).

    ``mode`` overrides the scenario's capacity mode.  Truncated mode counts
    outage iterations as zero rate; conditional mode averages covered
    iterations only and raises UndefinedEstimateError when none are covered.
    """
    mode = mode or scenario.capacity_mode
    rates, covered, _ = _simulate(scenario, iterations, seed, n_jobs)
    return summarize_rates(rates, covered, mode, seed)


def collect_sinr_samples(
    scenario: ScenarioConfig, iterations: int, seed: int, n_jobs: int = 1
) -> np.ndarray:
    """Raw per-iteration SINR samples (0.0 on candidate-free iterations)."""
    _, _, sinrs = _simulate(scenario, iterations, seed, n_jobs)
    return sinrs
