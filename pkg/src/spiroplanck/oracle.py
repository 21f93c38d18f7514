"""Seeded Monte Carlo deployments validating the closed-form coverage math.

Trials are mutually independent: trial i runs on its own PCG64 seeded with
master_seed XOR (i * golden-ratio stride) mod 2^64, so results do not
depend on evaluation order, batching, or which kernel backend ran them.
The compiled kernel is used when present; the numpy kernel is the fallback
and both are held to bit-identical per-trial counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _mc_python
from .coverage import (
    FieldSpec,
    binomial_mass,
    coverage_poisson,
    isolation_probability,
    tv_distance,
)

try:
    from . import _mc_kernel as _fast_kernel
except ImportError:  # extension not built; numpy path is exact but slower
    _fast_kernel = None

HAS_COMPILED = _fast_kernel is not None
DEFAULT_BACKEND = "compiled" if HAS_COMPILED else "python"

TORUS = "torus"
BOUNDED = "bounded"
_TOPOLOGIES = (TORUS, BOUNDED)

_SEED_MASK = (1 << 64) - 1
# golden-ratio stride (SplitMix64 increment); decorrelates consecutive sub-seeds
_SEED_STRIDE = 0x9E3779B97F4A7C15


def trial_seed(master_seed: int, index: int) -> int:
    """Sub-seed for one trial: master XOR (index * stride), mod 2^64."""
    return (master_seed ^ ((index * _SEED_STRIDE) & _SEED_MASK)) & _SEED_MASK


def resolve_kernel(backend: str = "auto"):
    """Map a backend name to a kernel module; "auto" prefers the compiled one."""
    if backend == "auto":
        return _fast_kernel if HAS_COMPILED else _mc_python
    if backend == "compiled":
        if not HAS_COMPILED:
            raise RuntimeError("compiled kernel is not available in this installation")
        return _fast_kernel
    if backend == "python":
        return _mc_python
    raise ValueError(f"unknown backend: {backend!r}")


@dataclass(frozen=True)
class TrialConfig:
    field: FieldSpec
    n_nodes: int
    trials: int
    seed: int = 1729
    topology: str = TORUS

    def __post_init__(self) -> None:
        if self.n_nodes < 1:
            raise ValueError("n_nodes must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 <= self.seed < (1 << 64):
            raise ValueError("seed must lie in [0, 2^64)")
        if self.topology not in _TOPOLOGIES:
            raise ValueError(f"unknown topology: {self.topology!r}")


@dataclass(frozen=True, eq=False)
class TrialStats:
    """Aggregates over all trials.

    coverage_histogram[n] is the fraction of trials whose probe point was
    covered by exactly n nodes; stderr entries are NaN when trials < 2.
    """

    trials: int
    p_no_isolated: float
    p_no_isolated_stderr: float
    mean_isolated_count: float
    mean_isolated_stderr: float
    coverage_histogram: np.ndarray
    coverage_stderr: np.ndarray


def simulate(config: TrialConfig, backend: str = "auto") -> TrialStats:
    """Run the seeded trials and aggregate isolation and coverage statistics."""
    kernel = resolve_kernel(backend)
    wrap = config.topology == TORUS
    n = config.n_nodes
    cover_counts = np.zeros(n + 1, dtype=np.int64)
    no_isolated = 0
    isolated_sum = 0
    isolated_sq_sum = 0
    for i in range(config.trials):
        bitgen = np.random.PCG64(trial_seed(config.seed, i))
        isolated, covered = kernel.run_trial(
            bitgen, n, config.field.side_m, config.field.range_m, wrap
        )
        if isolated == 0:
            no_isolated += 1
        isolated_sum += isolated
        isolated_sq_sum += isolated * isolated
        cover_counts[covered] += 1
    t = config.trials
    p_hat = no_isolated / t
    mean_iso = isolated_sum / t
    hist = cover_counts / t
    if t >= 2:
        p_err = math.sqrt(p_hat * (1.0 - p_hat) / t)
        # unbiased sample variance from the exact integer sums
        var = (isolated_sq_sum - t * mean_iso * mean_iso) / (t - 1)
        mean_err = math.sqrt(max(var, 0.0) / t)
        hist_err = np.sqrt(hist * (1.0 - hist) / t)
    else:
        p_err = math.nan
        mean_err = math.nan
        hist_err = np.full(n + 1, math.nan)
    return TrialStats(
        trials=t,
        p_no_isolated=p_hat,
        p_no_isolated_stderr=p_err,
        mean_isolated_count=mean_iso,
        mean_isolated_stderr=mean_err,
        coverage_histogram=hist,
        coverage_stderr=hist_err,
    )


@dataclass(frozen=True)
class ComparisonReport:
    """Simulated statistics next to their closed-form predictions."""

    n_nodes: int
    density: float
    predicted_p_no_isolated: float
    observed_p_no_isolated: float
    p_no_isolated_gap: float
    p_no_isolated_stderr: float
    predicted_mean_isolated: float
    observed_mean_isolated: float
    mean_isolated_gap: float
    mean_isolated_stderr: float
    tv_vs_binomial: float
    tv_vs_poisson: float
    degenerate_single_node: bool


def compare_to_formula(stats: TrialStats, density: float, n_nodes: int) -> ComparisonReport:
    """Gap report between simulation and the closed forms.

    The per-point coverage probability pi*R^2/L^2 is recovered as
    density / n_nodes, so the binomial reference is Binomial(n_nodes - 1,
    density / n_nodes) and the Poisson reference uses the density itself
    as its mean.  n_nodes == 1 is flagged degenerate: the single node is
    always isolated while the closed form still reports a positive value.
    """
    if n_nodes < 1:
        raise ValueError("n_nodes must be >= 1")
    if density < 0:
        raise ValueError("density must be >= 0")
    if len(stats.coverage_histogram) != n_nodes + 1:
        raise ValueError("stats histogram does not match n_nodes")
    predicted_p = isolation_probability(density, n_nodes)
    predicted_mean = n_nodes * math.exp(-density)
    # rounding in density = n * p_cover can push the quotient an ulp past 1
    p_cover = min(density / n_nodes, 1.0)
    binom = binomial_mass(n_nodes - 1, p_cover)
    pois = coverage_poisson(density)
    return ComparisonReport(
        n_nodes=n_nodes,
        density=density,
        predicted_p_no_isolated=predicted_p,
        observed_p_no_isolated=stats.p_no_isolated,
        p_no_isolated_gap=stats.p_no_isolated - predicted_p,
        p_no_isolated_stderr=stats.p_no_isolated_stderr,
        predicted_mean_isolated=predicted_mean,
        observed_mean_isolated=stats.mean_isolated_count,
        mean_isolated_gap=stats.mean_isolated_count - predicted_mean,
        mean_isolated_stderr=stats.mean_isolated_stderr,
        tv_vs_binomial=tv_distance(stats.coverage_histogram, binom),
        tv_vs_poisson=tv_distance(stats.coverage_histogram, pois.mass),
        degenerate_single_node=n_nodes == 1,
    )
