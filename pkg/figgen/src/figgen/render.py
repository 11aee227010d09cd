"""Render sweep CSVs into capacity-vs-sweep-variable panels.

Input is the sweep CSV schema produced by the simulator CLI (header below);
this package never imports the simulator, the file format is the contract.
Each (platform, n_a) group becomes one curve with a shaded 95% confidence
band; the no-fleet baseline (n_a = 0) is drawn in black.  Output bytes are
deterministic for identical inputs (fixed style, no timestamps).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

EXPECTED_COLUMNS = (
    "sweep_variable",
    "sweep_value_km",
    "platform",
    "n_a",
    "capacity_mode",
    "ergodic_capacity_bps",
    "ci95_low",
    "ci95_high",
    "coverage_probability",
    "iterations",
    "seed",
)

X_VARIABLES = {
    "rho_d": ("disaster_radius", "disaster radius (km)"),
    "r_c": ("center_distance", "disaster-town distance (km)"),
}


class SchemaError(ValueError):
    """The CSV does not conform to the sweep schema; message names the column."""


@dataclass(frozen=True)
class FigureSpec:
    csv_paths: tuple[str, ...]
    x_variable: str  # "rho_d" | "r_c"
    out_path: str
    title: str | None = None
    y_label: str = "ergodic capacity (bit/s)"
    figsize: tuple[float, float] = (6.5, 4.5)

    def __post_init__(self):
        if self.x_variable not in X_VARIABLES:
            raise SchemaError(f"x_variable must be one of {sorted(X_VARIABLES)}")
        if not self.csv_paths:
            raise SchemaError("at least one CSV path is required")
        suffix = Path(self.out_path).suffix.lower()
        if suffix not in (".svg", ".png"):
            raise SchemaError("out_path must end in .svg or .png")


@dataclass
class Curve:
    platform: str
    n_a: int
    x: list = field(default_factory=list)
    y: list = field(default_factory=list)
    lo: list = field(default_factory=list)
    hi: list = field(default_factory=list)


def load_curves(csv_paths, expected_variable: str) -> list[Curve]:
    """Parse CSVs into per-(platform, n_a) curves, validating the schema."""
    curves: dict[tuple[str, int], Curve] = {}
    for path in csv_paths:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise SchemaError(f"{path}: empty file, no header") from None
            if tuple(header) != EXPECTED_COLUMNS:
                missing = [c for c in EXPECTED_COLUMNS if c not in header]
                extra = [c for c in header if c not in EXPECTED_COLUMNS]
                raise SchemaError(
                    f"{path}: header mismatch (missing columns {missing}, unexpected {extra})"
                )
            rows = 0
            for row in reader:
                rows += 1
                variable = row[0]
                if variable != expected_variable:
                    raise SchemaError(
                        f"{path}: sweep_variable {variable!r} does not match the "
                        f"requested x axis ({expected_variable!r})"
                    )
                key = (row[2], int(row[3]))
                curve = curves.setdefault(key, Curve(platform=key[0], n_a=key[1]))
                curve.x.append(float(row[1]))
                curve.y.append(float(row[5]))
                curve.lo.append(float(row[6]))
                curve.hi.append(float(row[7]))
            if rows == 0:
                raise SchemaError(f"{path}: no data rows")
    out = list(curves.values())
    supports = {tuple(c.x) for c in out}
    if len(supports) > 1:
        raise SchemaError("grouped curves have differing sweep-value support")
    return out


def build_figure(spec: FigureSpec):
    """Build the matplotlib Figure for a spec; returns (figure, axes)."""
    variable, x_label = X_VARIABLES[spec.x_variable]
    curves = load_curves(spec.csv_paths, variable)

    fig, ax = plt.subplots(figsize=spec.figsize)
    for curve in sorted(curves, key=lambda c: (c.platform, c.n_a)):
        x = np.asarray(curve.x)
        order = np.argsort(x)
        x, y = x[order], np.asarray(curve.y)[order]
        lo, hi = np.asarray(curve.lo)[order], np.asarray(curve.hi)[order]
        color = "black" if curve.n_a == 0 else None
        label = f"{curve.platform}, n_A={curve.n_a}"
        (line,) = ax.plot(x, y, marker="o", markersize=3, color=color, label=label)
        ax.fill_between(x, lo, hi, color=line.get_color(), alpha=0.2, linewidth=0)
    ax.set_xlabel(x_label)
    ax.set_ylabel(spec.y_label)
    if spec.title:
        ax.set_title(spec.title)
    ax.legend(fontsize=8)
    ax.margins(x=0.02)
    fig.tight_layout()
    return fig, ax


def render(spec: FigureSpec) -> str:
    """Render a spec to its output file; returns the path written.

    SVG ids are salted with a fixed string and the date metadata is dropped,
    so identical inputs produce identical bytes.
    """
    with plt.rc_context({"svg.hashsalt": "figgen"}):
        fig, _ = build_figure(spec)
        try:
            if spec.out_path.lower().endswith(".svg"):
                fig.savefig(spec.out_path, format="svg", metadata={"Date": None})
            else:
                fig.savefig(spec.out_path, format="png", dpi=150)
        finally:
            plt.close(fig)
    return spec.out_path
