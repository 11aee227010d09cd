"""User association, instantaneous SINR, Shannon rate, and the metric container."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import LinkState, PlatformProfile, mean_received_power
from .errors import NoCoverageError, ParameterError

# normal-approximation 95% interval
Z95 = 1.959963984540054


@dataclass(frozen=True)
class RadioGlobals:
    """System-wide radio constants; the SINR threshold is stated in dB."""

    bandwidth_hz: float = 1e8
    sinr_threshold_db: float = -5.0
    noise_psd_w_hz: float = 1e-12

    def __post_init__(self):
        if self.bandwidth_hz <= 0:
            raise ParameterError("radio.bandwidth_hz must be > 0")
        if self.noise_psd_w_hz <= 0:
            raise ParameterError("radio.noise_psd_w_hz must be > 0")

    @property
    def noise_power_w(self) -> float:
        return self.noise_psd_w_hz * self.bandwidth_hz

    @property
    def sinr_threshold_linear(self) -> float:
        return 10.0 ** (self.sinr_threshold_db / 10.0)


@dataclass(frozen=True)
class Association:
    serving_index: int  # index into the concatenated (terrestrial, aerial) list
    serving_kind: str  # "tbs" | "abs"
    serving_mean_power_w: float


@dataclass(frozen=True)
class MetricEstimate:
    """Monte Carlo estimate of ergodic capacity and coverage probability."""

    ergodic_capacity_bps: float
    coverage_probability: float
    std_error_bps: float
    ci95_low_bps: float
    ci95_high_bps: float
    iterations: int
    seed: int
    capacity_mode: str


def candidate_mean_powers(
    user_xy,
    tbs_points,
    aerial_points,
    aerial_los,
    tbs_profile: PlatformProfile,
    aerial_profile: PlatformProfile | None,
    reference_m: float = 1.0,
    min_distance_m: float = 1.0,
) -> np.ndarray:
    """Average received power from every candidate, terrestrial stations first.

    Terrestrial distances are clamped at ``min_distance_m`` to remove the
    d -> 0 singularity; aerial links are bounded below by the altitude.
    """
    user = np.asarray(user_xy, dtype=float)
    tbs = np.asarray(tbs_points, dtype=float).reshape(-1, 2)
    aerial = np.asarray(aerial_points, dtype=float).reshape(-1, 3)
    los = np.asarray(aerial_los, dtype=bool).reshape(-1)
    if len(los) != len(aerial):
        raise ParameterError("aerial_los must have one state per aerial point")

    powers = np.empty(len(tbs) + len(aerial))
    if len(tbs):
        d = np.hypot(tbs[:, 0] - user[0], tbs[:, 1] - user[1])
        d = np.maximum(d, min_distance_m / 1000.0)
        powers[: len(tbs)] = mean_received_power(
            tbs_profile, LinkState.TERRESTRIAL, d, reference_m
        )
    if len(aerial):
        horiz = np.hypot(aerial[:, 0] - user[0], aerial[:, 1] - user[1])
        d3 = np.hypot(horiz, aerial[:, 2])
        out = np.empty(len(aerial))
        if los.any():
            out[los] = mean_received_power(
                aerial_profile, LinkState.AERIAL_LOS, d3[los], reference_m
            )
        if (~los).any():
            out[~los] = mean_received_power(
                aerial_profile, LinkState.AERIAL_NLOS, d3[~los], reference_m
            )
        powers[len(tbs) :] = out
    return powers


def associate(
    user_xy,
    tbs_points,
    aerial_points,
    aerial_los,
    tbs_profile: PlatformProfile,
    aerial_profile: PlatformProfile | None = None,
    reference_m: float = 1.0,
    min_distance_m: float = 1.0,
) -> Association:
    """Pick the candidate with the maximum average received power.

    Ties break toward the lowest index in (terrestrial, aerial) order.  An
    empty candidate set raises :class:`NoCoverageError`.
    """
    powers = candidate_mean_powers(
        user_xy,
        tbs_points,
        aerial_points,
        aerial_los,
        tbs_profile,
        aerial_profile,
        reference_m,
        min_distance_m,
    )
    if len(powers) == 0:
        raise NoCoverageError("no base station candidates")
    idx = int(np.argmax(powers))
    n_tbs = np.asarray(tbs_points, dtype=float).reshape(-1, 2).shape[0]
    kind = "tbs" if idx < n_tbs else "abs"
    return Association(serving_index=idx, serving_kind=kind, serving_mean_power_w=float(powers[idx]))


def instantaneous_sinr(
    mean_powers: np.ndarray,
    fading: np.ndarray,
    serving_index: int,
    noise_power_w: float,
) -> float:
    """SINR of the serving link; every non-serving station interferes."""
    mean_powers = np.asarray(mean_powers, dtype=float)
    fading = np.asarray(fading, dtype=float)
    if np.any(fading <= 0):
        raise ParameterError("fading gains must be positive")
    received = mean_powers * fading
    signal = received[serving_index]
    interference = np.sum(received) - signal
    return float(signal / (interference + noise_power_w))


def shannon_rate(bandwidth_hz: float, sinr: float):
    """Shannon rate B * log2(1 + sinr) in bit/s."""
    s = np.asarray(sinr, dtype=float)
    if np.any(s < 0):
        raise ParameterError("sinr must be >= 0")
    r = bandwidth_hz * np.log2(1.0 + s)
    return float(r) if np.isscalar(sinr) else r


def summarize_rates(
    rates_bps: np.ndarray,
    covered: np.ndarray,
    mode: str,
    seed: int,
) -> MetricEstimate:
    """Reduce per-iteration truncated rates + coverage flags to a MetricEstimate.

    ``rates_bps`` must already be zero on non-covered iterations.  Sums are
    taken with numpy's pairwise reduction over the full index-ordered arrays,
    so the result is identical no matter how iterations were scheduled.
    """
    from .errors import UndefinedEstimateError

    n = len(rates_bps)
    coverage = float(np.sum(covered)) / n
    if mode == "truncated":
        sample = rates_bps
    elif mode == "conditional":
        sample = rates_bps[covered]
        if len(sample) == 0:
            raise UndefinedEstimateError(
                "no covered iterations; conditional capacity undefined", coverage=0.0
            )
    else:
        raise ParameterError(f"unknown capacity_mode {mode!r}")
    mean = float(np.mean(sample))
    se = float(np.std(sample, ddof=1) / np.sqrt(len(sample))) if len(sample) > 1 else 0.0
    return MetricEstimate(
        ergodic_capacity_bps=mean,
        coverage_probability=coverage,
        std_error_bps=se,
        ci95_low_bps=mean - Z95 * se,
        ci95_high_bps=mean + Z95 * se,
        iterations=n,
        seed=int(seed),
        capacity_mode=mode,
    )
