"""Estimate ergodic capacity and coverage for one scenario, plus the SINR law.

Uses the interference-limited radio profile (thermal noise floor); the
calibration default of 1e-12 W/Hz drowns terrestrial links beyond ~60 m.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import aerocell as ac

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

scenario = ac.ScenarioConfig(
    town=ac.HomogeneousTown(density_per_km2=10.0, window_radius_km=10.0),
    disaster=ac.DisasterSpec(center_distance_km=0.0, radius_km=0.5),
    fleet=ac.FleetSpec("drone", 5),
    radio=ac.RadioGlobals(noise_psd_w_hz=4e-21),
)

est = ac.estimate_metrics(scenario, iterations=20_000, seed=11)
print(f"ergodic capacity: {est.ergodic_capacity_bps/1e6:.2f} Mbit/s "
      f"(95% CI [{est.ci95_low_bps/1e6:.2f}, {est.ci95_high_bps/1e6:.2f}])")
print(f"coverage probability: {est.coverage_probability:.3f}")

cond = ac.estimate_metrics(scenario, iterations=20_000, seed=11, mode="conditional")
print(f"conditional capacity (covered iterations only): {cond.ergodic_capacity_bps/1e6:.2f} Mbit/s")

# SINR distribution across realizations, against the -5 dB threshold
sinr = ac.collect_sinr_samples(scenario, iterations=20_000, seed=11)
sinr_db = 10 * np.log10(np.maximum(sinr, 1e-12))
fig, ax = plt.subplots(figsize=(6, 4))
ax.hist(sinr_db, bins=100, density=True, color="tab:blue", alpha=0.7)
ax.axvline(-5.0, color="k", ls="--", label="threshold -5 dB")
ax.set(xlabel="SINR (dB)", ylabel="density", title="typical-user SINR, 5 drones over the hole")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "sinr_distribution.png", dpi=150)
print(f"wrote {OUT / 'sinr_distribution.png'}")
