"""figgen: publication-style figures from capacity-sweep CSVs."""

from .render import EXPECTED_COLUMNS, Curve, FigureSpec, SchemaError, build_figure, load_curves, render

__version__ = "0.1.0"

__all__ = [
    "Curve",
    "EXPECTED_COLUMNS",
    "FigureSpec",
    "SchemaError",
    "build_figure",
    "load_curves",
    "render",
]
