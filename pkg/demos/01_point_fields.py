"""Point fields: Poisson towns, a circular failure region, and a fleet overhead.

Samples both town models, knocks out the stations inside the disaster disk,
deploys a small drone fleet above it, and draws the resulting maps.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import aerocell as ac

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

rng = np.random.default_rng(7)

# -- homogeneous town: the disaster location is irrelevant, center it on the user
town = ac.sample_hppp(10.0, 3.0, rng)
disaster = ac.DisasterSpec(center_distance_km=0.0, radius_km=0.8)
survivors = ac.apply_disaster(town, disaster)
fleet = ac.deploy_fleet(disaster, 12, altitude_km=0.1, rng=rng)

fig, axes = plt.subplots(1, 2, figsize=(11, 5), sharey=True)
ax = axes[0]
ax.scatter(town[:, 0], town[:, 1], s=6, c="0.8", label="pre-disaster")
ax.scatter(survivors[:, 0], survivors[:, 1], s=6, c="tab:blue", label="survivors")
ax.scatter(fleet[:, 0], fleet[:, 1], marker="^", c="tab:red", label="aerial fleet")
ax.add_patch(plt.Circle((0, 0), disaster.radius_km, fill=False, ls="--", color="k"))
ax.set(title="homogeneous town, hole radius 0.8 km", xlabel="km", ylabel="km", aspect="equal")
ax.legend(loc="upper right", fontsize=8)

# -- Gaussian town: density decays away from the center, location matters
gtown = ac.sample_gaussian_ippp(10.0, 1254.0, rng)
gdisaster = ac.DisasterSpec(center_distance_km=6.0, radius_km=0.8)
gsurv = ac.apply_disaster(gtown, gdisaster)
ax = axes[1]
ax.scatter(gsurv[:, 0], gsurv[:, 1], s=4, c="tab:blue")
ax.add_patch(plt.Circle((6.0, 0.0), gdisaster.radius_km, fill=False, ls="--", color="k"))
ax.set(
    title="Gaussian town, disaster 6 km out",
    xlabel="km",
    xlim=(-12, 12),
    ylim=(-12, 12),
    aspect="equal",
)

fig.tight_layout()
fig.savefig(OUT / "point_fields.png", dpi=150)
print(f"town {len(town)} -> survivors {len(survivors)}; fleet {len(fleet)} drones")
print(f"Gaussian town {len(gtown)} points, {len(gtown) - len(gsurv)} lost to the hole")
print(f"wrote {OUT / 'point_fields.png'}")
