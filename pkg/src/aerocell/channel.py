"""Radio channel: platform constants, link states, path loss, fading draws.

Unit conventions (important):

* Distances travel through the geometry code in km, but the power law is
  evaluated with the distance expressed in meters, i.e. the reference
  distance is 1 m.  ``mean_received_power`` returns transmit_power *
  excess_loss * (d_m / reference_m)^-alpha watts.
* ``excess_loss`` (eta) is a linear multiplier in (0, 1], not dB.
* Fading is a unit-mean Gamma power gain with shape m and scale 1/m, so
  m = 1 is Rayleigh power fading.
"""

from __future__ import annotations

import configparser
import enum
from dataclasses import dataclass, field
from importlib import resources
from typing import Mapping

import numpy as np

from .errors import ParameterError


class LinkState(enum.Enum):
    TERRESTRIAL = "terrestrial"
    AERIAL_LOS = "aerial_los"
    AERIAL_NLOS = "aerial_nlos"


@dataclass(frozen=True)
class PlatformProfile:
    """Radio constants for one platform type.

    ``alpha``, ``nakagami_m`` and ``excess_loss`` map each link state the
    platform can realize to its path-loss exponent, fading shape and linear
    excess-loss multiplier.
    """

    name: str
    kind: str  # "terrestrial" | "aerial"
    transmit_power_w: float
    altitude_km: float
    alpha: Mapping[LinkState, float] = field(default_factory=dict)
    nakagami_m: Mapping[LinkState, float] = field(default_factory=dict)
    excess_loss: Mapping[LinkState, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("terrestrial", "aerial"):
            raise ParameterError(f"platform {self.name}: kind must be terrestrial or aerial")
        if self.transmit_power_w <= 0:
            raise ParameterError(f"platform {self.name}: transmit_power_w must be > 0")
        if self.kind == "aerial" and self.altitude_km <= 0:
            raise ParameterError(f"platform {self.name}: aerial altitude_km must be > 0")
        if self.kind == "terrestrial" and self.altitude_km != 0:
            raise ParameterError(f"platform {self.name}: terrestrial altitude_km must be 0")
        expected = (
            {LinkState.TERRESTRIAL}
            if self.kind == "terrestrial"
            else {LinkState.AERIAL_LOS, LinkState.AERIAL_NLOS}
        )
        for mapping, label in (
            (self.alpha, "alpha"),
            (self.nakagami_m, "nakagami_m"),
            (self.excess_loss, "excess_loss"),
        ):
            if set(mapping) != expected:
                raise ParameterError(
                    f"platform {self.name}: {label} must define exactly {sorted(s.value for s in expected)}"
                )
        for state in expected:
            if self.alpha[state] < 2:
                raise ParameterError(f"platform {self.name}: alpha[{state.value}] must be >= 2")
            m = self.nakagami_m[state]
            if m < 0.5 or abs(2 * m - round(2 * m)) > 1e-12:
                raise ParameterError(
                    f"platform {self.name}: nakagami_m[{state.value}] must be an integer or half-integer >= 0.5"
                )
            eta = self.excess_loss[state]
            if not (0 < eta <= 1):
                raise ParameterError(
                    f"platform {self.name}: excess_loss[{state.value}] must be in (0, 1]"
                )

    def states(self) -> tuple[LinkState, ...]:
        if self.kind == "terrestrial":
            return (LinkState.TERRESTRIAL,)
        return (LinkState.AERIAL_LOS, LinkState.AERIAL_NLOS)


@dataclass(frozen=True)
class LosModel:
    """Line-of-sight probability vs elevation angle.

    Sigmoid form p(theta) = 1 / (1 + a * exp(-b * (theta_deg - a))); the
    defaults are the usual dense-urban air-to-ground constants.  Setting
    ``constant`` bypasses the sigmoid with a fixed probability (handy in
    tests).
    """

    a: float = 12.08
    b: float = 0.11
    constant: float | None = None

    def __post_init__(self):
        if self.constant is not None:
            if not (0.0 <= self.constant <= 1.0):
                raise ParameterError("los_model.constant must be in [0, 1]")
            return
        if self.a <= 0 or self.b <= 0:
            raise ParameterError("los_model.a and los_model.b must be > 0")


def los_probability(elevation_deg, model: LosModel):
    """LoS probability at the given elevation angle(s) in degrees, in [0, 1]."""
    theta = np.asarray(elevation_deg, dtype=float)
    if np.any(theta < 0) or np.any(theta > 90):
        raise ParameterError("elevation_deg must lie in [0, 90]")
    if model.constant is not None:
        p = np.full_like(theta, model.constant)
    else:
        # clip the exponent so very steep models saturate instead of overflowing
        z = np.clip(-model.b * (theta - model.a), -700.0, 700.0)
        p = 1.0 / (1.0 + model.a * np.exp(z))
    p = np.clip(p, 0.0, 1.0)
    return float(p) if np.isscalar(elevation_deg) else p


def elevation_angle_deg(user_xy, aerial_points) -> np.ndarray:
    """Elevation angle from a ground user to each aerial point, in degrees."""
    pts = np.asarray(aerial_points, dtype=float).reshape(-1, 3)
    user = np.asarray(user_xy, dtype=float)
    horiz = np.hypot(pts[:, 0] - user[0], pts[:, 1] - user[1])
    return np.degrees(np.arctan2(pts[:, 2], horiz))


def draw_link_states(
    user_xy, aerial_points, model: LosModel, rng: np.random.Generator
) -> np.ndarray:
    """Independent Bernoulli LoS/NLoS state per aerial station; True means LoS."""
    pts = np.asarray(aerial_points, dtype=float).reshape(-1, 3)
    if len(pts) == 0:
        return np.zeros(0, dtype=bool)
    if np.any(pts[:, 2] <= 0):
        raise ParameterError("aerial points must have altitude > 0")
    p = los_probability(elevation_angle_deg(user_xy, pts), model)
    return rng.random(len(pts)) < p


def draw_link_state(user_xy, aerial_point, model: LosModel, rng: np.random.Generator) -> LinkState:
    """Single-link version of :func:`draw_link_states`."""
    los = draw_link_states(user_xy, np.asarray(aerial_point, dtype=float).reshape(1, 3), model, rng)
    return LinkState.AERIAL_LOS if bool(los[0]) else LinkState.AERIAL_NLOS


def mean_received_power(
    profile: PlatformProfile,
    state: LinkState,
    distance_km,
    reference_m: float = 1.0,
) -> float | np.ndarray:
    """Average received power in watts over the power-law channel.

    ``distance_km`` is converted to meters before exponentiation; the result
    is transmit_power * excess_loss * (d_m / reference_m)^-alpha.
    """
    d = np.asarray(distance_km, dtype=float)
    if np.any(d <= 0):
        raise ParameterError("distance_km must be > 0")
    if state not in profile.alpha:
        raise ParameterError(f"platform {profile.name} has no link state {state.value}")
    d_m = d * 1000.0 / reference_m
    p = profile.transmit_power_w * profile.excess_loss[state] * d_m ** (-profile.alpha[state])
    return float(p) if np.isscalar(distance_km) else p


def draw_fading(m: float, rng: np.random.Generator, size=None):
    """Unit-mean Gamma(m, 1/m) power gain; m = 1 reduces to exponential."""
    if m < 0.5:
        raise ParameterError("nakagami m must be >= 0.5")
    return rng.gamma(m, 1.0 / m, size=size)


# -- platform table ----------------------------------------------------------

_SHARED_KEYS = ("kind", "transmit_power_w", "altitude_km")


def _profile_from_section(name: str, sec: Mapping[str, str]) -> PlatformProfile:
    kind = sec.get("kind", "")
    power = float(sec["transmit_power_w"])
    alt = float(sec["altitude_km"])
    if kind == "terrestrial":
        return PlatformProfile(
            name=name,
            kind=kind,
            transmit_power_w=power,
            altitude_km=alt,
            alpha={LinkState.TERRESTRIAL: float(sec["alpha"])},
            nakagami_m={LinkState.TERRESTRIAL: float(sec["nakagami_m"])},
            excess_loss={LinkState.TERRESTRIAL: float(sec["excess_loss"])},
        )
    return PlatformProfile(
        name=name,
        kind=kind,
        transmit_power_w=power,
        altitude_km=alt,
        alpha={
            LinkState.AERIAL_LOS: float(sec["alpha_los"]),
            LinkState.AERIAL_NLOS: float(sec["alpha_nlos"]),
        },
        nakagami_m={
            LinkState.AERIAL_LOS: float(sec["nakagami_m_los"]),
            LinkState.AERIAL_NLOS: float(sec["nakagami_m_nlos"]),
        },
        excess_loss={
            LinkState.AERIAL_LOS: float(sec["excess_loss_los"]),
            LinkState.AERIAL_NLOS: float(sec["excess_loss_nlos"]),
        },
    )


def load_platform_table(path=None) -> dict[str, PlatformProfile]:
    """Load platform profiles from an INI table; ``path=None`` loads the bundled defaults."""
    parser = configparser.ConfigParser()
    if path is None:
        text = resources.files("aerocell.data").joinpath("platforms.ini").read_text()
        parser.read_string(text)
    else:
        read = parser.read(path)
        if not read:
            raise ParameterError(f"platform table not found: {path}")
    if "table" not in parser or "version" not in parser["table"]:
        raise ParameterError("platform table must carry a [table] section with a version key")
    profiles: dict[str, PlatformProfile] = {}
    for name in parser.sections():
        if name == "table":
            continue
        sec = parser[name]
        missing = [k for k in _SHARED_KEYS if k not in sec]
        if missing:
            raise ParameterError(f"platform {name}: missing keys {missing}")
        profiles[name] = _profile_from_section(name, sec)
    if not profiles:
        raise ParameterError("platform table defines no platforms")
    return profiles


def default_platforms() -> dict[str, PlatformProfile]:
    return load_platform_table(None)
