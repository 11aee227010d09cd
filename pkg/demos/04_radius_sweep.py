"""Capacity vs disaster radius over a homogeneous town, one curve per fleet size.

Desk-scale version of the radius campaign: 15 points, 4000 iterations.  The
CSV it writes feeds the separate ``figgen`` package; the quick matplotlib
rendering below is just for eyeballing.

The same campaign is available from the command line:

    aerocell sweep-radius --config demos/config/paper_regime.json --out radius.csv
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import aerocell as ac

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

base = ac.ScenarioConfig(
    town=ac.HomogeneousTown(10.0, 10.0),
    disaster=ac.DisasterSpec(0.0, 0.5),
    fleet=ac.FleetSpec("drone", 0),
    radio=ac.RadioGlobals(noise_psd_w_hz=4e-21),
)
plan = ac.SweepPlan(
    swept_variable="disaster_radius",
    values_km=tuple(np.linspace(0.1, 2.0, 15)),
    fleets=tuple(ac.FleetSpec("drone", n) for n in (0, 1, 5, 15)),
    iterations=4_000,
    master_seed=42,
)
result = ac.run_radius_sweep(plan, base)
csv_path = OUT / "radius_sweep.csv"
ac.emit_csv(result, csv_path)
print(f"wrote {csv_path} ({len(result.records)} records)")

fig, ax = plt.subplots(figsize=(6.5, 4.5))
for n in (0, 1, 5, 15):
    rec = [r for r in result.records if r.n_a == n]
    x = [r.sweep_value_km for r in rec]
    y = [r.estimate.ergodic_capacity_bps for r in rec]
    ax.plot(x, y, marker="o", ms=3, color="k" if n == 0 else None, label=f"n_A={n}")
ax.set(xlabel="disaster radius (km)", ylabel="ergodic capacity (bit/s)",
       title="drones over a homogeneous town")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "radius_sweep.png", dpi=150)
print(f"wrote {OUT / 'radius_sweep.png'}")
