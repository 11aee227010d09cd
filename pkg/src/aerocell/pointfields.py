"""Point fields: Poisson towns of ground stations, disaster thinning, fleet placement.

Ground points are float64 arrays of shape (N, 2) holding x/y in km; aerial
points are (N, 3) with a third altitude column, also in km.  All samplers take
an explicit ``numpy.random.Generator`` so realizations are pure functions of
(parameters, stream).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError


@dataclass(frozen=True)
class DisasterSpec:
    """Circular failure region: radius rho_d, centered center_distance from the town center.

    The center sits at (center_distance_km, 0); an isotropic town makes the
    angular placement irrelevant.
    """

    center_distance_km: float
    radius_km: float

    def __post_init__(self):
        if not np.isfinite(self.center_distance_km) or self.center_distance_km < 0:
            raise ParameterError("disaster.center_distance_km must be >= 0 and finite")
        if not np.isfinite(self.radius_km) or self.radius_km <= 0:
            raise ParameterError("disaster.radius_km must be > 0 and finite")

    def center_xy(self) -> np.ndarray:
        return np.array([self.center_distance_km, 0.0])


@dataclass(frozen=True)
class HomogeneousTown:
    """Spatially homogeneous Poisson field of ground stations on a disk window."""

    density_per_km2: float
    window_radius_km: float = 10.0

    def __post_init__(self):
        if self.density_per_km2 <= 0:
            raise ParameterError("town.density_per_km2 must be > 0")
        if self.window_radius_km <= 0:
            raise ParameterError("town.window_radius_km must be > 0")


@dataclass(frozen=True)
class GaussianTown:
    """Inhomogeneous Poisson field whose intensity is an isotropic Gaussian bump.

    The total rate is calibrated so the expected number of points within
    100 km of the town center equals ``mean_count_100km``.
    """

    variance_km2: float
    mean_count_100km: float
    truncation_radius_km: float = 100.0

    def __post_init__(self):
        if self.variance_km2 <= 0:
            raise ParameterError("town.variance_km2 must be > 0")
        if self.mean_count_100km <= 0:
            raise ParameterError("town.mean_count_100km must be > 0")
        if self.truncation_radius_km < 10.0 * np.sqrt(self.variance_km2):
            raise ParameterError(
                "town.truncation_radius_km must be >= 10 * sqrt(variance_km2)"
            )


TownModel = HomogeneousTown | GaussianTown


def sample_hppp(
    density_per_km2: float,
    window_radius_km: float,
    rng: np.random.Generator,
    center_xy=(0.0, 0.0),
) -> np.ndarray:
    """Sample a homogeneous Poisson point process on a disk.

    The count is Poisson with mean density * pi * R^2 and points are i.i.d.
    uniform on the disk.
    """
    if density_per_km2 <= 0:
        raise ParameterError("density_per_km2 must be > 0")
    if window_radius_km <= 0:
        raise ParameterError("window_radius_km must be > 0")
    mean = density_per_km2 * np.pi * window_radius_km**2
    n = int(rng.poisson(mean))
    r = window_radius_km * np.sqrt(rng.random(n))
    theta = 2.0 * np.pi * rng.random(n)
    pts = np.column_stack((r * np.cos(theta), r * np.sin(theta)))
    pts += np.asarray(center_xy, dtype=float)
    return pts


def sample_gaussian_ippp(
    variance_km2: float,
    mean_count_100km: float,
    rng: np.random.Generator,
    truncation_radius_km: float = 100.0,
) -> np.ndarray:
    """Sample the Gaussian-intensity inhomogeneous Poisson field around the origin.

    Locations are i.i.d. zero-mean bivariate normal with per-axis variance
    ``variance_km2``; draws beyond the truncation radius are discarded.  The
    Poisson total is scaled by 1/(1 - exp(-100^2 / (2 var))) so the expected
    count inside 100 km matches ``mean_count_100km`` exactly.
    """
    if variance_km2 <= 0:
        raise ParameterError("variance_km2 must be > 0")
    if mean_count_100km <= 0:
        raise ParameterError("mean_count_100km must be > 0")
    inside_100 = -np.expm1(-(100.0**2) / (2.0 * variance_km2))
    total_mean = mean_count_100km / inside_100
    n = int(rng.poisson(total_mean))
    pts = rng.normal(0.0, np.sqrt(variance_km2), size=(n, 2))
    keep = np.hypot(pts[:, 0], pts[:, 1]) <= truncation_radius_km
    return pts[keep]


def sample_town(town: TownModel, rng: np.random.Generator) -> np.ndarray:
    """Sample ground-station positions for either town model (town center at origin)."""
    if isinstance(town, HomogeneousTown):
        return sample_hppp(town.density_per_km2, town.window_radius_km, rng)
    if isinstance(town, GaussianTown):
        return sample_gaussian_ippp(
            town.variance_km2, town.mean_count_100km, rng, town.truncation_radius_km
        )
    raise ParameterError(f"unknown town model {type(town).__name__}")


def apply_disaster(points: np.ndarray, disaster: DisasterSpec) -> np.ndarray:
    """Remove every ground station strictly inside the failure disk.

    Survivors keep their order and coordinates; a point exactly on the rim
    survives (fixed so the measure-zero tie is deterministic).
    """
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(points) == 0:
        return points
    cx, cy = disaster.center_xy()
    d = np.hypot(points[:, 0] - cx, points[:, 1] - cy)
    return points[d >= disaster.radius_km]


def deploy_fleet(
    disaster: DisasterSpec,
    count: int,
    altitude_km: float,
    rng: np.random.Generator,
) -> np.ndarray:
    """Place ``count`` aerial stations uniformly over the failure disk at a fixed altitude."""
    if count < 0:
        raise ParameterError("fleet count must be >= 0")
    if count > 0 and altitude_km <= 0:
        raise ParameterError("altitude_km must be > 0 for an airborne platform")
    if count == 0:
        return np.empty((0, 3))
    cx, cy = disaster.center_xy()
    r = disaster.radius_km * np.sqrt(rng.random(count))
    theta = 2.0 * np.pi * rng.random(count)
    return np.column_stack(
        (cx + r * np.cos(theta), cy + r * np.sin(theta), np.full(count, float(altitude_km)))
    )
