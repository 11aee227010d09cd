"""Straightforward scalar reference evaluator, kept independent of the library's
vectorized path on purpose: plain Python floats, explicit loops, math.pow."""

from __future__ import annotations

import math


def received_power(
    p_t: float, eta: float, alpha: float, distance_km: float, reference_m: float = 1.0
) -> float:
    d_m = distance_km * 1000.0 / reference_m
    return p_t * eta * math.pow(d_m, -alpha)


def evaluate_fixed_topology(
    user_xy,
    tbs_xy,
    aerial_xyz,
    aerial_los,
    tbs_consts,  # (p_t, eta, alpha)
    aerial_consts_los,  # (p_t, eta, alpha)
    aerial_consts_nlos,  # (p_t, eta, alpha)
    noise_power_w: float,
    bandwidth_hz: float,
    tau_linear: float,
    fading=None,
    hole_center=None,
    hole_radius: float = 0.0,
    min_distance_m: float = 1.0,
):
    """Rate/coverage/SINR of the typical user for one explicit topology.

    ``fading`` is a list of per-candidate gains (terrestrial first), or None
    for all-ones.  Returns (rate_bps, covered, sinr).
    """
    ux, uy = user_xy
    powers = []
    for (x, y) in tbs_xy:
        if hole_center is not None:
            hx, hy = hole_center
            if math.hypot(x - hx, y - hy) < hole_radius:
                continue
        d = math.hypot(x - ux, y - uy)
        d = max(d, min_distance_m / 1000.0)
        pt, eta, alpha = tbs_consts
        powers.append(received_power(pt, eta, alpha, d))
    for (x, y, h), los in zip(aerial_xyz, aerial_los):
        d = math.sqrt((x - ux) ** 2 + (y - uy) ** 2 + h**2)
        pt, eta, alpha = aerial_consts_los if los else aerial_consts_nlos
        powers.append(received_power(pt, eta, alpha, d))

    if not powers:
        return 0.0, False, 0.0
    if fading is None:
        fading = [1.0] * len(powers)
    received = [p * f for p, f in zip(powers, fading)]

    serving = 0
    for i in range(1, len(powers)):
        if powers[i] > powers[serving]:
            serving = i
    signal = received[serving]
    interference = sum(received[i] for i in range(len(received)) if i != serving)
    sinr = signal / (interference + noise_power_w)
    covered = sinr >= tau_linear
    rate = bandwidth_hz * math.log2(1.0 + sinr) if covered else 0.0
    return rate, covered, sinr
