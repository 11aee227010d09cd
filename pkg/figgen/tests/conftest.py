import json
import subprocess
import sys

import pytest

CONFIG = {
    "town": {"model": "hppp", "density_per_km2": 5.0, "window_radius_km": 2.0},
    "disaster": {"center_distance_km": 0.0, "radius_km": 0.3},
    "fleet": {"platform": "drone", "count": 0},
    "radio": {"noise_psd_w_hz": 4e-21},
    "sweep": {"points": 6, "radius_range_km": [0.2, 1.2], "iterations": 50, "seed": 3},
}

GAUSS_CONFIG = {
    "town": {"model": "gaussian_ippp", "variance_km2": 10.0, "mean_count_100km": 80.0},
    "disaster": {"center_distance_km": 0.0, "radius_km": 0.5},
    "fleet": {"platform": "drone", "count": 0},
    "radio": {"noise_psd_w_hz": 4e-21},
    "sweep": {"points": 6, "distance_range_km": [0.0, 20.0], "iterations": 50, "seed": 4},
}


def _run_simulator(args):
    proc = subprocess.run(
        [sys.executable, "-m", "aerocell.cli", *args],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="session")
def radius_csv(tmp_path_factory):
    """Five-fleet radius sweep produced through the simulator's own CLI."""
    root = tmp_path_factory.mktemp("harness")
    cfg = root / "radius.json"
    cfg.write_text(json.dumps(CONFIG))
    out = root / "radius.csv"
    _run_simulator(
        [
            "sweep-radius",
            "--config",
            str(cfg),
            "--fleet",
            "drone:0,1,5,15,30",
            "--out",
            str(out),
        ]
    )
    return out


@pytest.fixture(scope="session")
def distance_csv(tmp_path_factory):
    """Four-fleet distance sweep produced through the simulator's own CLI."""
    root = tmp_path_factory.mktemp("harness")
    cfg = root / "distance.json"
    cfg.write_text(json.dumps(GAUSS_CONFIG))
    out = root / "distance.csv"
    _run_simulator(
        [
            "sweep-distance",
            "--config",
            str(cfg),
            "--fleet",
            "drone:0,1,5,15",
            "--out",
            str(out),
        ]
    )
    return out
