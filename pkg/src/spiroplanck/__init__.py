"""Curve-guided coverage planning with radiance diagnostics and a Monte Carlo oracle."""

__version__ = "0.1.0"

from .coverage import (
    CoverageDistribution,
    DensityState,
    FieldSpec,
    coverage_binomial,
    coverage_poisson,
    density,
    isolation_probability,
    le_cam_bound,
    p_r,
    tv_distance,
)
from .curve import (
    CurvePoint,
    QuantizedKey,
    SpirographParams,
    generate_curve,
    quantize,
    select_next,
    spirograph_point,
)
from .oracle import (
    ComparisonReport,
    TrialConfig,
    TrialStats,
    compare_to_formula,
    simulate,
    trial_seed,
)
from .planner import IterationRecord, PlannerConfig, PlanResult, run, trace_to_rows
from .radiometry import (
    DEFAULT_CONSTANTS,
    PRECISE_CONSTANTS,
    PhysicalConstants,
    SpectralParams,
    spectral_curve,
    spectral_radiance,
    wavelength_grid,
    wien_peak,
)

__all__ = [
    "__version__",
    "ComparisonReport",
    "CoverageDistribution",
    "CurvePoint",
    "DEFAULT_CONSTANTS",
    "DensityState",
    "FieldSpec",
    "IterationRecord",
    "PRECISE_CONSTANTS",
    "PhysicalConstants",
    "PlanResult",
    "PlannerConfig",
    "QuantizedKey",
    "SpectralParams",
    "SpirographParams",
    "TrialConfig",
    "TrialStats",
    "compare_to_formula",
    "coverage_binomial",
    "coverage_poisson",
    "density",
    "generate_curve",
    "isolation_probability",
    "le_cam_bound",
    "p_r",
    "quantize",
    "run",
    "select_next",
    "simulate",
    "spectral_curve",
    "spectral_radiance",
    "spirograph_point",
    "trace_to_rows",
    "trial_seed",
    "tv_distance",
    "wavelength_grid",
    "wien_peak",
]
