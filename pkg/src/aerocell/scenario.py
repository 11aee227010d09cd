"""Scenario and sweep configuration, JSON loading, and validation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .capacity import RadioGlobals
from .channel import LosModel, PlatformProfile, default_platforms, load_platform_table
from .errors import ConfigError, ParameterError
from .pointfields import DisasterSpec, GaussianTown, HomogeneousTown, TownModel

CAPACITY_MODES = ("truncated", "conditional")
FLEET_RESAMPLE_MODES = ("per-iteration", "frozen")


@dataclass(frozen=True)
class FleetSpec:
    platform: str
    count: int


@dataclass(frozen=True)
class FixedTopology:
    """Pinned topology for deterministic harnesses: no sampling is performed.

    ``aerial_los`` holds one boolean (True = line of sight) per aerial point.
    """

    tbs_points: tuple[tuple[float, float], ...] = ()
    aerial_points: tuple[tuple[float, float, float], ...] = ()
    aerial_los: tuple[bool, ...] = ()

    def tbs_array(self) -> np.ndarray:
        return np.asarray(self.tbs_points, dtype=float).reshape(-1, 2)

    def aerial_array(self) -> np.ndarray:
        return np.asarray(self.aerial_points, dtype=float).reshape(-1, 3)

    def los_array(self) -> np.ndarray:
        return np.asarray(self.aerial_los, dtype=bool).reshape(-1)


@dataclass(frozen=True)
class ScenarioConfig:
    """One fully specified simulation scenario.

    The typical user sits at the disaster center.  For a homogeneous town the
    field is translation invariant, so the disaster's center distance is
    ignored and the window is centered on the user.

    ``fixed_topology`` and ``deterministic_fading`` are debug/test harness
    knobs: they pin the world and force all fading gains to exactly 1.
    """

    town: TownModel
    disaster: DisasterSpec
    fleet: FleetSpec
    radio: RadioGlobals = field(default_factory=RadioGlobals)
    los_model: LosModel = field(default_factory=LosModel)
    capacity_mode: str = "truncated"
    fleet_resample: str = "per-iteration"
    reference_distance_m: float = 1.0
    min_distance_m: float = 1.0
    platforms_file: str | None = None
    fixed_topology: FixedTopology | None = None
    deterministic_fading: bool = False

    def platform_table(self) -> dict[str, PlatformProfile]:
        if self.platforms_file is None:
            return default_platforms()
        return load_platform_table(self.platforms_file)

    def validate(self) -> None:
        if self.capacity_mode not in CAPACITY_MODES:
            raise ConfigError("capacity_mode", f"must be one of {CAPACITY_MODES}")
        if self.fleet_resample not in FLEET_RESAMPLE_MODES:
            raise ConfigError("fleet_resample", f"must be one of {FLEET_RESAMPLE_MODES}")
        if self.reference_distance_m <= 0:
            raise ConfigError("reference_distance_m", "must be > 0")
        if self.min_distance_m <= 0:
            raise ConfigError("min_distance_m", "must be > 0")
        if self.fleet.count < 0:
            raise ConfigError("fleet.count", "must be >= 0")
        table = self.platform_table()
        if self.fleet.platform not in table:
            raise ConfigError(
                "fleet.platform",
                f"{self.fleet.platform!r} not in platform table {sorted(table)}",
            )
        profile = table[self.fleet.platform]
        if self.fleet.count > 0 and profile.kind != "aerial":
            raise ConfigError("fleet.platform", "fleet platform must be an aerial kind")
        if "tbs" not in table:
            raise ConfigError("platforms_file", "platform table must define a 'tbs' profile")

    def with_fleet(self, platform: str, count: int) -> "ScenarioConfig":
        return replace(self, fleet=FleetSpec(platform=platform, count=count))

    def with_disaster(self, **kwargs) -> "ScenarioConfig":
        return replace(self, disaster=replace(self.disaster, **kwargs))


@dataclass(frozen=True)
class SweepPlan:
    """One sweep campaign: a swept variable, its values, and a fleet grid."""

    swept_variable: str  # "disaster_radius" | "center_distance"
    values_km: tuple[float, ...]
    fleets: tuple[FleetSpec, ...]
    iterations: int
    master_seed: int
    workers: int = 1

    def validate(self) -> None:
        if self.swept_variable not in ("disaster_radius", "center_distance"):
            raise ConfigError(
                "sweep.swept_variable", "must be 'disaster_radius' or 'center_distance'"
            )
        vals = np.asarray(self.values_km, dtype=float)
        if len(vals) < 1:
            raise ConfigError("sweep.values_km", "needs at least one value")
        if len(vals) > 1 and not np.all(np.diff(vals) > 0):
            raise ConfigError("sweep.values_km", "values must be strictly increasing")
        if self.swept_variable == "disaster_radius" and np.any(vals <= 0):
            raise ConfigError("sweep.values_km", "disaster radii must be > 0")
        if self.swept_variable == "center_distance" and np.any(vals < 0):
            raise ConfigError("sweep.values_km", "center distances must be >= 0")
        if len(self.fleets) < 1:
            raise ConfigError("sweep.fleets", "needs at least one fleet entry")
        if self.iterations < 1:
            raise ConfigError("sweep.iterations", "must be >= 1")
        if self.master_seed < 0:
            raise ConfigError("sweep.master_seed", "must be >= 0")
        if self.workers < 1:
            raise ConfigError("sweep.workers", "must be >= 1")


# -- JSON config -------------------------------------------------------------


def _town_from_dict(d: dict) -> TownModel:
    model = d.get("model")
    try:
        if model == "hppp":
            return HomogeneousTown(
                density_per_km2=float(d["density_per_km2"]),
                window_radius_km=float(d.get("window_radius_km", 10.0)),
            )
        if model == "gaussian_ippp":
            return GaussianTown(
                variance_km2=float(d["variance_km2"]),
                mean_count_100km=float(d["mean_count_100km"]),
                truncation_radius_km=float(d.get("truncation_radius_km", 100.0)),
            )
    except KeyError as exc:
        raise ConfigError(f"town.{exc.args[0]}", "missing required key") from exc
    except ParameterError as exc:
        raise ConfigError("town", str(exc)) from exc
    raise ConfigError("town.model", "must be 'hppp' or 'gaussian_ippp'")


def scenario_from_dict(d: dict) -> ScenarioConfig:
    """Build a ScenarioConfig from a parsed JSON document (raises ConfigError)."""
    try:
        town = _town_from_dict(d["town"])
        dis = d["disaster"]
        disaster = DisasterSpec(
            center_distance_km=float(dis.get("center_distance_km", 0.0)),
            radius_km=float(dis["radius_km"]),
        )
        fl = d.get("fleet", {"platform": "drone", "count": 0})
        fleet = FleetSpec(platform=str(fl["platform"]), count=int(fl["count"]))
        ra = d.get("radio", {})
        radio = RadioGlobals(
            bandwidth_hz=float(ra.get("bandwidth_hz", 1e8)),
            sinr_threshold_db=float(ra.get("sinr_threshold_db", -5.0)),
            noise_psd_w_hz=float(ra.get("noise_psd_w_hz", 1e-12)),
        )
        lm = d.get("los_model", {})
        if "constant" in lm and lm["constant"] is not None:
            los = LosModel(constant=float(lm["constant"]))
        else:
            los = LosModel(a=float(lm.get("a", 12.08)), b=float(lm.get("b", 0.11)))
        scenario = ScenarioConfig(
            town=town,
            disaster=disaster,
            fleet=fleet,
            radio=radio,
            los_model=los,
            capacity_mode=str(d.get("capacity_mode", "truncated")),
            fleet_resample=str(d.get("fleet_resample", "per-iteration")),
            reference_distance_m=float(d.get("reference_distance_m", 1.0)),
            min_distance_m=float(d.get("min_distance_m", 1.0)),
            platforms_file=d.get("platforms_file"),
        )
    except ConfigError:
        raise
    except KeyError as exc:
        raise ConfigError(str(exc.args[0]), "missing required key") from exc
    except ParameterError as exc:
        raise ConfigError("scenario", str(exc)) from exc
    scenario.validate()
    return scenario


def load_config(path) -> dict:
    """Read a JSON config file into a plain dict (scenario + optional sweep section)."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError("config", f"invalid JSON in {path}: {exc}") from exc


def validate_config_dict(d: dict) -> ScenarioConfig:
    """Validate the scenario portion of a config document, returning the scenario."""
    return scenario_from_dict(d)
