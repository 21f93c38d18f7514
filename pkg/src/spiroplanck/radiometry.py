"""Black-body spectral radiance with guards that keep whole-grid sweeps finite.

Two prefactor conventions are supported: "radiance" uses 2*pi*h*c^2
(spectral exitance, W per m^2 per m of wavelength) and "energy-density"
uses 8*pi*h*c (spectral energy density, J per m^3 per m of wavelength).
Both share the 1 / (lambda^5 * (exp(h*c / (lambda*k*T)) - 1)) core.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

RADIANCE = "radiance"
ENERGY_DENSITY = "energy-density"
_FORMS = (RADIANCE, ENERGY_DENSITY)

# exp(700) is the edge of double range; past it the radiance is written off as 0
_EXP_OVERFLOW = 700.0
# below this exponent, exp(x) - 1 loses digits; switch to the series x * (1 + x/2)
_SMALL_EXPONENT = 1e-4


@dataclass(frozen=True)
class PhysicalConstants:
    """Planck constant h (J s), light speed c (m/s), Boltzmann constant k (J/K)."""

    h: float
    c: float
    k: float

    def __post_init__(self) -> None:
        for name in ("h", "c", "k"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be positive and finite")


# coarse textbook values; fine for plotting and threshold work
DEFAULT_CONSTANTS = PhysicalConstants(h=6.626e-34, c=3.0e8, k=1.38e-23)
# four-digit values for when the extra digits matter
PRECISE_CONSTANTS = PhysicalConstants(h=6.6261e-34, c=2.9979e8, k=1.3807e-23)


def spectral_radiance(
    wavelength_m: float,
    temperature_k: float,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    form: str = RADIANCE,
) -> float:
    """Spectral radiance at one wavelength and temperature.

    The exponent x = h*c / (lambda*k*T) is guarded at both ends: x > 700
    returns exactly 0.0 (the true value underflows doubles anyway), and
    x < 1e-4 replaces exp(x) - 1 with x * (1 + x/2) to dodge cancellation
    in the deep Rayleigh-Jeans regime.
    """
    if not (math.isfinite(wavelength_m) and wavelength_m > 0):
        raise ValueError("wavelength_m must be positive and finite")
    if not (math.isfinite(temperature_k) and temperature_k > 0):
        raise ValueError("temperature_k must be positive and finite")
    if form not in _FORMS:
        raise ValueError(f"unknown form: {form!r}")
    x = constants.h * constants.c / (wavelength_m * constants.k * temperature_k)
    if x > _EXP_OVERFLOW:
        return 0.0
    if x < _SMALL_EXPONENT:
        denom_exp = x * (1.0 + x / 2.0)
    else:
        denom_exp = math.exp(x) - 1.0
    if form == RADIANCE:
        numerator = 2.0 * math.pi * constants.h * constants.c**2
    else:
        numerator = 8.0 * math.pi * constants.h * constants.c
    return numerator / (wavelength_m**5 * denom_exp)


def wavelength_grid(start_m: float, stop_m: float, step_m: float) -> tuple[float, ...]:
    """Inclusive arithmetic grid start, start+step, ... up to stop.

    Values are computed as start + k*step rather than accumulated, so the
    grid is exactly reproducible.
    """
    if not (math.isfinite(start_m) and start_m > 0):
        raise ValueError("start_m must be positive and finite")
    if not (math.isfinite(step_m) and step_m > 0):
        raise ValueError("step_m must be > 0")
    if stop_m < start_m:
        raise ValueError("stop_m must be >= start_m")
    count = math.floor((stop_m - start_m) / step_m) + 1
    return tuple(start_m + k * step_m for k in range(count))


# visible-and-beyond sweep: 1 nm to 2991 nm in 10 nm steps, 300 samples
DEFAULT_GRID_START_M = 1e-9
DEFAULT_GRID_STOP_M = 3000e-9
DEFAULT_GRID_STEP_M = 10e-9


def default_wavelength_grid() -> tuple[float, ...]:
    return wavelength_grid(DEFAULT_GRID_START_M, DEFAULT_GRID_STOP_M, DEFAULT_GRID_STEP_M)


@dataclass(frozen=True)
class SpectralParams:
    """A temperature, a wavelength grid, and the evaluation conventions."""

    temperature_k: float
    grid_m: tuple[float, ...]
    constants: PhysicalConstants = DEFAULT_CONSTANTS
    form: str = RADIANCE

    def __post_init__(self) -> None:
        if not (math.isfinite(self.temperature_k) and self.temperature_k > 0):
            raise ValueError("temperature_k must be positive and finite")
        object.__setattr__(self, "grid_m", tuple(self.grid_m))
        if not self.grid_m:
            raise ValueError("grid_m must be non-empty")
        for value in self.grid_m:
            if not (math.isfinite(value) and value > 0):
                raise ValueError("grid wavelengths must be positive and finite")
        if any(b <= a for a, b in zip(self.grid_m, self.grid_m[1:])):
            raise ValueError("grid wavelengths must be strictly increasing")
        if self.form not in _FORMS:
            raise ValueError(f"unknown form: {self.form!r}")


def spectral_curve(params: SpectralParams) -> list[tuple[float, float]]:
    """(wavelength, radiance) pairs over the grid."""
    return [
        (lam, spectral_radiance(lam, params.temperature_k, params.constants, params.form))
        for lam in params.grid_m
    ]


def _peak_exponent_root() -> float:
    # root of (x - 5) * e^x + 5 = 0 in (4, 5), bisected to 1e-12
    lo, hi = 4.0, 5.0
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if (mid - 5.0) * math.exp(mid) + 5.0 < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


PEAK_EXPONENT_ROOT = _peak_exponent_root()


def wien_peak(temperature_k: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Wavelength of maximum radiance: h*c / (k*T*x) with x the transcendental root."""
    if not (math.isfinite(temperature_k) and temperature_k > 0):
        raise ValueError("temperature_k must be positive and finite")
    return constants.h * constants.c / (constants.k * temperature_k * PEAK_EXPONENT_ROOT)
