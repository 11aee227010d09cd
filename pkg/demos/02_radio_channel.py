"""Radio channel pieces: LoS probability, path loss per platform, fading laws."""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import aerocell as ac
from aerocell import LinkState

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

fig, axes = plt.subplots(1, 3, figsize=(14, 4))

# line-of-sight probability vs elevation for two environments
theta = np.linspace(0.0, 90.0, 200)
for model, label in [
    (ac.LosModel(), "dense urban (a=12.08, b=0.11)"),
    (ac.LosModel(a=4.88, b=0.43), "suburban (a=4.88, b=0.43)"),
]:
    axes[0].plot(theta, ac.los_probability(theta, model), label=label)
axes[0].set(xlabel="elevation angle (deg)", ylabel="P(line of sight)", title="air-to-ground LoS")
axes[0].legend(fontsize=8)

# mean received power vs horizontal distance for each platform
table = ac.default_platforms()
horiz = np.linspace(0.05, 5.0, 300)
axes[1].semilogy(
    horiz,
    ac.mean_received_power(table["tbs"], LinkState.TERRESTRIAL, horiz),
    label="tbs (ground)",
)
for name in ("drone", "tethered_balloon", "hap"):
    p = table[name]
    d3 = np.hypot(horiz, p.altitude_km)
    axes[1].semilogy(
        horiz, ac.mean_received_power(p, LinkState.AERIAL_LOS, d3), label=f"{name} (LoS)"
    )
axes[1].set(xlabel="horizontal distance (km)", ylabel="mean received power (W)", title="power law")
axes[1].legend(fontsize=8)

# unit-mean Nakagami power fading: heavier shape = less variance
rng = np.random.default_rng(3)
for m in (1.0, 2.0):
    g = ac.draw_fading(m, rng, size=200_000)
    axes[2].hist(g, bins=120, range=(0, 4), density=True, histtype="step", label=f"m={m:g}")
axes[2].set(xlabel="power gain", ylabel="density", title="fading (mean 1, var 1/m)")
axes[2].legend(fontsize=8)

fig.tight_layout()
fig.savefig(OUT / "radio_channel.png", dpi=150)
print("drone LoS power overhead at 100 m:",
      ac.mean_received_power(table["drone"], LinkState.AERIAL_LOS, 0.1), "W")
print(f"wrote {OUT / 'radio_channel.png'}")
