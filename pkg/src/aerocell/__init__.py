"""aerocell: stochastic-geometry Monte Carlo for aerial-assisted post-disaster cellular.

Terrestrial base stations form a (in)homogeneous Poisson field; a circular
disaster wipes out every station inside it; a fleet of identical aerial base
stations is deployed uniformly above the hole.  The package estimates the
typical user's ergodic capacity and coverage probability by Monte Carlo,
sweeps them against the disaster radius or the disaster-town distance, and
searches fleet grids for the best deployment.
"""

from .advisor import AdvisorReport, CandidateResult, advise
from .capacity import (
    Association,
    MetricEstimate,
    RadioGlobals,
    associate,
    candidate_mean_powers,
    instantaneous_sinr,
    shannon_rate,
)
from .channel import (
    LinkState,
    LosModel,
    PlatformProfile,
    default_platforms,
    draw_fading,
    draw_link_state,
    draw_link_states,
    elevation_angle_deg,
    load_platform_table,
    los_probability,
    mean_received_power,
)
from .errors import (
    ConfigError,
    NoCoverageError,
    ParameterError,
    UndefinedEstimateError,
)
from .estimator import collect_sinr_samples, estimate_metrics
from .pointfields import (
    DisasterSpec,
    GaussianTown,
    HomogeneousTown,
    apply_disaster,
    deploy_fleet,
    sample_gaussian_ippp,
    sample_hppp,
    sample_town,
)
from .scenario import (
    FixedTopology,
    FleetSpec,
    ScenarioConfig,
    SweepPlan,
    load_config,
    scenario_from_dict,
)
from .sweeps import (
    CSV_COLUMNS,
    SweepRecord,
    SweepResult,
    emit_csv,
    read_csv,
    run_distance_sweep,
    run_radius_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AdvisorReport",
    "Association",
    "CandidateResult",
    "ConfigError",
    "CSV_COLUMNS",
    "DisasterSpec",
    "FixedTopology",
    "FleetSpec",
    "GaussianTown",
    "HomogeneousTown",
    "LinkState",
    "LosModel",
    "MetricEstimate",
    "NoCoverageError",
    "ParameterError",
    "PlatformProfile",
    "RadioGlobals",
    "ScenarioConfig",
    "SweepPlan",
    "SweepRecord",
    "SweepResult",
    "UndefinedEstimateError",
    "advise",
    "apply_disaster",
    "associate",
    "candidate_mean_powers",
    "collect_sinr_samples",
    "default_platforms",
    "deploy_fleet",
    "draw_fading",
    "draw_link_state",
    "draw_link_states",
    "elevation_angle_deg",
    "emit_csv",
    "estimate_metrics",
    "instantaneous_sinr",
    "load_config",
    "load_platform_table",
    "los_probability",
    "mean_received_power",
    "read_csv",
    "run_distance_sweep",
    "run_radius_sweep",
    "sample_gaussian_ippp",
    "sample_hppp",
    "sample_town",
    "scenario_from_dict",
    "shannon_rate",
]
