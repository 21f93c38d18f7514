"""Monte Carlo oracle: seeding, kernels, statistics, formula comparison."""

from __future__ import annotations

import math

import numpy as np
import pytest

from spiroplanck import _mc_python
from spiroplanck.coverage import FieldSpec, density, p_r
from spiroplanck.oracle import (
    BOUNDED,
    HAS_COMPILED,
    TORUS,
    TrialConfig,
    compare_to_formula,
    resolve_kernel,
    simulate,
    trial_seed,
)

SMALL_FIELD = FieldSpec(side_m=50.0, range_m=6.5)


def _reference_trial(seed: int, n: int, side: float, radius: float, wrap: bool):
    """Independently coded trial: same draw order, scalar loops, no numpy math."""
    gen = np.random.Generator(np.random.PCG64(seed))
    points = [(gen.random() * side, gen.random() * side) for _ in range(n)]
    probe = (gen.random() * side, gen.random() * side)

    def dist2(a, b):
        dx = abs(a[0] - b[0])
        dy = abs(a[1] - b[1])
        if wrap:
            dx = min(dx, side - dx)
            dy = min(dy, side - dy)
        return dx * dx + dy * dy

    r2 = radius * radius
    isolated = sum(
        1
        for i, a in enumerate(points)
        if all(dist2(a, b) > r2 for j, b in enumerate(points) if j != i)
    )
    covered = sum(1 for a in points if dist2(a, probe) <= r2)
    return isolated, covered


def test_trial_seed_values() -> None:
    assert trial_seed(1729, 0) == 1729
    assert trial_seed(0, 1) == 0x9E3779B97F4A7C15
    assert trial_seed(0, 2) == 0x3C6EF372FE94F82A  # stride doubled, top bit dropped
    assert trial_seed(2**64 - 1, 0) == 2**64 - 1
    assert 0 <= trial_seed(1729, 10**9) < 2**64


def test_trial_seeds_are_distinct_for_many_indices() -> None:
    seeds = {trial_seed(1729, i) for i in range(10_000)}
    assert len(seeds) == 10_000


@pytest.mark.parametrize("wrap", [True, False])
def test_python_kernel_matches_independent_reference(wrap: bool) -> None:
    for i in range(20):
        seed = trial_seed(424242, i)
        expected = _reference_trial(seed, 37, 50.0, 6.5, wrap)
        got = _mc_python.run_trial(np.random.PCG64(seed), 37, 50.0, 6.5, wrap)
        assert got == expected


@pytest.mark.skipif(not HAS_COMPILED, reason="compiled kernel not built")
@pytest.mark.parametrize("wrap", [True, False])
def test_compiled_kernel_matches_independent_reference(wrap: bool) -> None:
    kernel = resolve_kernel("compiled")
    for i in range(20):
        seed = trial_seed(424242, i)
        expected = _reference_trial(seed, 37, 50.0, 6.5, wrap)
        got = kernel.run_trial(np.random.PCG64(seed), 37, 50.0, 6.5, wrap)
        assert got == expected


@pytest.mark.skipif(not HAS_COMPILED, reason="compiled kernel not built")
@pytest.mark.parametrize("topology", [TORUS, BOUNDED])
def test_backends_bit_identical(topology: str) -> None:
    config = TrialConfig(field=SMALL_FIELD, n_nodes=40, trials=150, seed=7, topology=topology)
    fast = simulate(config, backend="compiled")
    slow = simulate(config, backend="python")
    assert fast.p_no_isolated == slow.p_no_isolated
    assert fast.mean_isolated_count == slow.mean_isolated_count
    assert np.array_equal(fast.coverage_histogram, slow.coverage_histogram)
    assert np.array_equal(fast.coverage_stderr, slow.coverage_stderr)


def test_simulate_is_deterministic() -> None:
    config = TrialConfig(field=SMALL_FIELD, n_nodes=30, trials=100, seed=5)
    a = simulate(config)
    b = simulate(config)
    assert a.p_no_isolated == b.p_no_isolated
    assert np.array_equal(a.coverage_histogram, b.coverage_histogram)


def test_torus_translation_invariance() -> None:
    # wrap-around distances are translation invariant; counts must not move
    gen = np.random.Generator(np.random.PCG64(99))
    side, radius = 50.0, 6.5
    xs = gen.random(40) * side
    ys = gen.random(40) * side
    probe_x, probe_y = gen.random() * side, gen.random() * side
    base_iso = _mc_python.isolated_count(xs, ys, side, radius, wrap=True)
    base_cov = _mc_python.covered_count(xs, ys, probe_x, probe_y, side, radius, wrap=True)
    for shift_x, shift_y in [(13.7, 0.0), (0.0, 31.2), (25.0, 49.9)]:
        moved_xs = (xs + shift_x) % side
        moved_ys = (ys + shift_y) % side
        assert _mc_python.isolated_count(moved_xs, moved_ys, side, radius, wrap=True) == base_iso
        moved_probe = ((probe_x + shift_x) % side, (probe_y + shift_y) % side)
        assert (
            _mc_python.covered_count(
                moved_xs, moved_ys, moved_probe[0], moved_probe[1], side, radius, wrap=True
            )
            == base_cov
        )


def test_bounded_field_separates_edge_pair_that_torus_joins() -> None:
    xs = [0.5, 99.5]
    ys = [50.0, 50.0]
    assert _mc_python.isolated_count(xs, ys, 100.0, 7.0, wrap=True) == 0
    assert _mc_python.isolated_count(xs, ys, 100.0, 7.0, wrap=False) == 2


def test_isolated_count_hand_cases() -> None:
    # triangle inside range: nobody isolated; spread line: everybody isolated
    assert _mc_python.isolated_count([10, 12, 11], [10, 10, 12], 100.0, 7.0, wrap=False) == 0
    assert _mc_python.isolated_count([10, 30, 50], [10, 10, 10], 100.0, 7.0, wrap=False) == 3
    # pair plus loner
    assert _mc_python.isolated_count([10, 12, 50], [10, 10, 50], 100.0, 7.0, wrap=False) == 1


def test_covered_count_includes_exact_range_boundary() -> None:
    assert _mc_python.covered_count([7.0], [0.0], 0.0, 0.0, 100.0, 7.0, wrap=False) == 1
    assert _mc_python.covered_count([7.0000001], [0.0], 0.0, 0.0, 100.0, 7.0, wrap=False) == 0


def test_simulate_histogram_is_a_distribution() -> None:
    config = TrialConfig(field=SMALL_FIELD, n_nodes=25, trials=300, seed=3)
    stats = simulate(config)
    assert stats.coverage_histogram.shape == (26,)
    assert stats.coverage_histogram.sum() == pytest.approx(1.0, abs=1e-12)
    assert 0.0 <= stats.p_no_isolated <= 1.0
    assert stats.mean_isolated_count >= 0.0


def test_single_trial_has_nan_stderr() -> None:
    config = TrialConfig(field=SMALL_FIELD, n_nodes=10, trials=1, seed=3)
    stats = simulate(config)
    assert math.isnan(stats.p_no_isolated_stderr)
    assert math.isnan(stats.mean_isolated_stderr)
    assert np.isnan(stats.coverage_stderr).all()
    assert stats.coverage_histogram.sum() == 1.0


def test_stderr_shrinks_like_inverse_sqrt_trials() -> None:
    small = simulate(TrialConfig(field=SMALL_FIELD, n_nodes=60, trials=400, seed=21))
    large = simulate(TrialConfig(field=SMALL_FIELD, n_nodes=60, trials=1600, seed=22))
    ratio = small.p_no_isolated_stderr / large.p_no_isolated_stderr
    assert 1.5 < ratio < 2.5
    ratio = small.mean_isolated_stderr / large.mean_isolated_stderr
    assert 1.5 < ratio < 2.5


def test_torus_mean_isolated_matches_exact_value() -> None:
    # on the torus each node is isolated with probability (1 - pi R^2/L^2)^(N-1)
    field = FieldSpec(side_m=100.0, range_m=7.0)
    n = 100
    exact_mean = n * (1.0 - p_r(field)) ** (n - 1)
    stats = simulate(TrialConfig(field=field, n_nodes=n, trials=2000, seed=12345))
    assert stats.mean_isolated_stderr < 0.2
    assert abs(stats.mean_isolated_count - exact_mean) < 5.0 * stats.mean_isolated_stderr


def test_compare_to_formula_report() -> None:
    field = FieldSpec(side_m=100.0, range_m=7.0)
    n = 100
    stats = simulate(TrialConfig(field=field, n_nodes=n, trials=1500, seed=77))
    dens = density(field, n)
    report = compare_to_formula(stats, dens, n)
    assert report.n_nodes == n
    assert report.predicted_mean_isolated == pytest.approx(n * math.exp(-dens), rel=1e-15)
    assert report.p_no_isolated_gap == stats.p_no_isolated - report.predicted_p_no_isolated
    assert report.mean_isolated_gap == stats.mean_isolated_count - report.predicted_mean_isolated
    assert not report.degenerate_single_node
    # at 1500 seeded trials the empirical histogram sits close to the exact law
    assert report.tv_vs_binomial < 0.1
    assert report.tv_vs_poisson < 0.15


def test_compare_to_formula_flags_single_node() -> None:
    field = FieldSpec(side_m=100.0, range_m=7.0)
    stats = simulate(TrialConfig(field=field, n_nodes=1, trials=50, seed=5))
    report = compare_to_formula(stats, density(field, 1), 1)
    assert report.degenerate_single_node
    assert stats.mean_isolated_count == 1.0  # a lone node is always isolated
    assert report.predicted_p_no_isolated > 0.0  # the closed form stays positive


def test_compare_to_formula_rejects_mismatched_histogram() -> None:
    field = FieldSpec(side_m=100.0, range_m=7.0)
    stats = simulate(TrialConfig(field=field, n_nodes=10, trials=20, seed=5))
    with pytest.raises(ValueError):
        compare_to_formula(stats, density(field, 12), 12)


def test_resolve_kernel_names() -> None:
    assert resolve_kernel("python") is _mc_python
    with pytest.raises(ValueError):
        resolve_kernel("fortran")
    if HAS_COMPILED:
        assert resolve_kernel("compiled").BACKEND == "compiled"
        assert resolve_kernel("auto").BACKEND == "compiled"
    else:
        assert resolve_kernel("auto") is _mc_python
        with pytest.raises(RuntimeError):
            resolve_kernel("compiled")


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n_nodes": 0},
        {"trials": 0},
        {"seed": -1},
        {"seed": 2**64},
        {"topology": "moebius"},
    ],
)
def test_trial_config_validation(kwargs: dict) -> None:
    base = {"field": SMALL_FIELD, "n_nodes": 10, "trials": 10, "seed": 1}
    base.update(kwargs)
    with pytest.raises(ValueError):
        TrialConfig(**base)
