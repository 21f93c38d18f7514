"""Spectral radiance values, guards, grids, and the Wien peak."""

from __future__ import annotations

import math

import pytest

from spiroplanck.radiometry import (
    DEFAULT_CONSTANTS,
    ENERGY_DENSITY,
    PEAK_EXPONENT_ROOT,
    PRECISE_CONSTANTS,
    PhysicalConstants,
    RADIANCE,
    SpectralParams,
    default_wavelength_grid,
    spectral_curve,
    spectral_radiance,
    wavelength_grid,
    wien_peak,
)


def test_point_value_default_constants() -> None:
    # 2*pi*h*c^2 / (lam^5 (e^x - 1)) at 500 nm, 6000 K, 40-digit recomputation
    value = spectral_radiance(500e-9, 6000.0)
    assert value == pytest.approx(9.934924365849798e13, rel=1e-12)


def test_point_value_precise_constants() -> None:
    value = spectral_radiance(500e-9, 6000.0, constants=PRECISE_CONSTANTS)
    assert value == pytest.approx(9.978568313541422e13, rel=1e-12)


def test_energy_density_form_is_4_over_c_times_radiance() -> None:
    radiance = spectral_radiance(500e-9, 6000.0, form=RADIANCE)
    energy = spectral_radiance(500e-9, 6000.0, form=ENERGY_DENSITY)
    assert energy == pytest.approx(radiance * 4.0 / DEFAULT_CONSTANTS.c, rel=1e-15)


def test_overflow_guard_returns_exact_zero() -> None:
    # x = hc/(lam k T) is about 3200 here, far past the exp range
    assert spectral_radiance(1e-9, 4500.0) == 0.0
    assert spectral_radiance(2e-9, 4500.0) == 0.0


def test_guard_boundary_is_continuous_enough() -> None:
    # just below x=700 the true value is ~1e-250; the guard cuts to 0 only past it
    k = DEFAULT_CONSTANTS
    lam_at_700 = k.h * k.c / (k.k * 6000.0 * 700.0)
    assert spectral_radiance(lam_at_700 * 1.01, 6000.0) > 0.0
    assert spectral_radiance(lam_at_700 * 0.99, 6000.0) == 0.0


def test_small_exponent_series_branch() -> None:
    # x = 2.4e-5 at 0.1 m: series branch, against a 40-digit reference
    assert spectral_radiance(0.1, 6000.0) == pytest.approx(1.5607244958047397e-06, rel=1e-9)
    # x = 2.4e-6 at 1 m
    assert spectral_radiance(1.0, 6000.0) == pytest.approx(1.560741356846796e-10, rel=1e-9)


def test_exact_branch_just_above_series_switch() -> None:
    # x = 2.4e-4 at 0.01 m: exp branch, against a 40-digit reference
    assert spectral_radiance(0.01, 6000.0) == pytest.approx(0.015605558920631972, rel=1e-9)


def test_series_branch_matches_rayleigh_jeans_limit() -> None:
    k = DEFAULT_CONSTANTS
    lam = 1.0
    rayleigh_jeans = 2.0 * math.pi * k.c * k.k * 6000.0 / lam**4
    assert spectral_radiance(lam, 6000.0) == pytest.approx(rayleigh_jeans, rel=1e-5)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"wavelength_m": 0.0, "temperature_k": 6000.0},
        {"wavelength_m": -1e-9, "temperature_k": 6000.0},
        {"wavelength_m": math.inf, "temperature_k": 6000.0},
        {"wavelength_m": 500e-9, "temperature_k": 0.0},
        {"wavelength_m": 500e-9, "temperature_k": -100.0},
        {"wavelength_m": 500e-9, "temperature_k": math.nan},
    ],
)
def test_spectral_radiance_validation(kwargs: dict) -> None:
    with pytest.raises(ValueError):
        spectral_radiance(**kwargs)


def test_spectral_radiance_rejects_unknown_form() -> None:
    with pytest.raises(ValueError):
        spectral_radiance(500e-9, 6000.0, form="luminance")


@pytest.mark.parametrize("name", ["h", "c", "k"])
def test_constants_validation(name: str) -> None:
    values = {"h": 6.626e-34, "c": 3.0e8, "k": 1.38e-23}
    values[name] = 0.0
    with pytest.raises(ValueError):
        PhysicalConstants(**values)


def test_default_grid_shape() -> None:
    grid = default_wavelength_grid()
    assert len(grid) == 300
    assert grid[0] == 1e-9
    assert grid[1] == pytest.approx(11e-9, rel=1e-12)
    assert grid[-1] == pytest.approx(2991e-9, rel=1e-12)
    assert all(b > a for a, b in zip(grid, grid[1:]))


def test_grid_is_computed_not_accumulated() -> None:
    grid = wavelength_grid(1e-9, 3000e-9, 10e-9)
    assert grid[200] == 1e-9 + 200 * 10e-9


def test_grid_endpoint_inclusive() -> None:
    assert wavelength_grid(1.0, 2.0, 0.5) == (1.0, 1.5, 2.0)
    assert len(wavelength_grid(1.0, 1.0, 0.5)) == 1


@pytest.mark.parametrize(
    "start,stop,step",
    [(0.0, 1.0, 0.1), (-1.0, 1.0, 0.1), (1.0, 0.5, 0.1), (1.0, 2.0, 0.0), (1.0, 2.0, -0.1)],
)
def test_grid_validation(start: float, stop: float, step: float) -> None:
    with pytest.raises(ValueError):
        wavelength_grid(start, stop, step)


def test_spectral_params_validation() -> None:
    grid = default_wavelength_grid()
    with pytest.raises(ValueError):
        SpectralParams(temperature_k=0.0, grid_m=grid)
    with pytest.raises(ValueError):
        SpectralParams(temperature_k=6000.0, grid_m=())
    with pytest.raises(ValueError):
        SpectralParams(temperature_k=6000.0, grid_m=(2e-9, 1e-9))
    with pytest.raises(ValueError):
        SpectralParams(temperature_k=6000.0, grid_m=grid, form="bogus")


def test_spectral_curve_pairs_wavelengths_with_values() -> None:
    params = SpectralParams(temperature_k=6000.0, grid_m=(400e-9, 500e-9, 600e-9))
    curve = spectral_curve(params)
    assert [lam for lam, _ in curve] == [400e-9, 500e-9, 600e-9]
    assert curve[1][1] == spectral_radiance(500e-9, 6000.0)


def test_curve_unimodal_and_argmax_near_wien() -> None:
    grid = default_wavelength_grid()
    values = [spectral_radiance(lam, 6000.0) for lam in grid]
    argmax = values.index(max(values))
    assert grid[argmax] == pytest.approx(481e-9, rel=1e-12)
    assert abs(grid[argmax] - wien_peak(6000.0)) <= 10e-9
    diffs = [b - a for a, b in zip(values, values[1:])]
    assert all(d > 0 for d in diffs[:argmax])
    assert all(d < 0 for d in diffs[argmax:])


def test_curves_pointwise_monotone_in_temperature() -> None:
    grid = default_wavelength_grid()
    cold = [spectral_radiance(lam, 4500.0) for lam in grid]
    warm = [spectral_radiance(lam, 6000.0) for lam in grid]
    hot = [spectral_radiance(lam, 7500.0) for lam in grid]
    assert all(w >= c for c, w in zip(cold, warm))
    assert all(h >= w for w, h in zip(warm, hot))


def test_peak_exponent_root() -> None:
    # root of (x-5)e^x + 5, value from a 40-digit solver
    assert PEAK_EXPONENT_ROOT == pytest.approx(4.965114231744276, abs=1e-11)
    residual = (PEAK_EXPONENT_ROOT - 5.0) * math.exp(PEAK_EXPONENT_ROOT) + 5.0
    assert abs(residual) < 1e-9


def test_wien_peak_at_6000() -> None:
    assert wien_peak(6000.0) == pytest.approx(4.835185104770026e-07, rel=1e-12)
    assert wien_peak(6000.0) == pytest.approx(483.5e-9, abs=0.1e-9)


def test_wien_peak_scales_inversely_with_temperature() -> None:
    b = wien_peak(6000.0) * 6000.0
    assert wien_peak(4500.0) * 4500.0 == pytest.approx(b, rel=1e-12)
    assert wien_peak(7500.0) * 7500.0 == pytest.approx(b, rel=1e-12)


def test_wien_peak_validation() -> None:
    with pytest.raises(ValueError):
        wien_peak(0.0)
