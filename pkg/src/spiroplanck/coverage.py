"""Analytic coverage math for nodes deployed uniformly on a square field.

Density here is the expected number of neighbors per node,
n_nodes * pi * range^2 / area.  The isolation probability is the closed
form (1 - exp(-density)) ** n_nodes; in the usual random-geometric-graph
reading this approximates the chance that *no* node is isolated, which is
the event the Monte Carlo harness in `oracle` measures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

BINOMIAL = "binomial"
POISSON = "poisson"

# pi*R^2/L^2 may exceed 1.0 by an ulp when the disk exactly tiles the field
_UNIT_SLACK = 1e-12

# Poisson tail cutoff: mass beyond mean + 12*sqrt(mean) + 20 is negligible
_POISSON_TAIL_SIGMA = 12.0
_POISSON_TAIL_PAD = 20
_POISSON_CUM_TARGET = 1.0 - 1e-9


@dataclass(frozen=True)
class FieldSpec:
    """Square deployment field with a common per-node sensing range, in meters."""

    side_m: float
    range_m: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.side_m) and self.side_m > 0):
            raise ValueError("side_m must be positive and finite")
        if not (math.isfinite(self.range_m) and self.range_m > 0):
            raise ValueError("range_m must be positive and finite")
        if self.range_m >= self.side_m:
            raise ValueError("range_m must be smaller than side_m")

    @property
    def area_m2(self) -> float:
        return self.side_m * self.side_m


def density(field: FieldSpec, n_nodes: int) -> float:
    """Expected neighbor count per node for n_nodes uniform nodes on the field."""
    if n_nodes < 0:
        raise ValueError("n_nodes must be >= 0")
    return n_nodes * math.pi * field.range_m**2 / field.area_m2


def isolation_probability(density: float, n_nodes: int) -> float:
    """Closed-form (1 - exp(-density)) ** n_nodes for n_nodes >= 1."""
    if n_nodes < 1:
        raise ValueError("n_nodes must be >= 1")
    if density < 0:
        raise ValueError("density must be >= 0")
    return (1.0 - math.exp(-density)) ** n_nodes


@dataclass(frozen=True)
class DensityState:
    """Node count bundled with its derived density and isolation probability."""

    n_nodes: int
    density: float
    p_isolated: float

    @classmethod
    def for_count(cls, field: FieldSpec, n_nodes: int) -> "DensityState":
        dens = density(field, n_nodes)
        return cls(n_nodes=n_nodes, density=dens, p_isolated=isolation_probability(dens, n_nodes))


def p_r(field: FieldSpec) -> float:
    """Probability that one uniform node covers a fixed point: pi*R^2/L^2."""
    value = math.pi * field.range_m**2 / field.area_m2
    if value > 1.0 + _UNIT_SLACK:
        raise ValueError(f"sensing range too large: pi*R^2/L^2 = {value!r} exceeds 1")
    return min(value, 1.0)


def binomial_mass(trials: int, p: float) -> np.ndarray:
    """Binomial pmf over 0..trials, each term exponentiated from log space.

    Accumulating log-gamma terms instead of multiplying factorials keeps the
    tails finite for trial counts far beyond where math.comb overflows floats.
    """
    if trials < 0:
        raise ValueError("trials must be >= 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    mass = np.zeros(trials + 1)
    if p == 0.0:
        mass[0] = 1.0
        return mass
    if p == 1.0:
        mass[trials] = 1.0
        return mass
    log_p = math.log(p)
    log_q = math.log1p(-p)
    lg_n = math.lgamma(trials + 1)
    for n in range(trials + 1):
        log_term = (
            lg_n
            - math.lgamma(n + 1)
            - math.lgamma(trials - n + 1)
            + n * log_p
            + (trials - n) * log_q
        )
        mass[n] = math.exp(log_term)
    return mass


@dataclass(frozen=True, eq=False)
class CoverageDistribution:
    """Distribution of how many nodes cover a fixed probe point."""

    kind: str
    mass: np.ndarray

    def __post_init__(self) -> None:
        if self.kind not in (BINOMIAL, POISSON):
            raise ValueError(f"unknown distribution kind: {self.kind!r}")
        if len(self.mass) == 0:
            raise ValueError("mass must be non-empty")

    @property
    def support(self) -> range:
        return range(len(self.mass))


def coverage_binomial(field: FieldSpec, n_nodes: int) -> CoverageDistribution:
    """Exact coverage law: Binomial(n_nodes - 1, p_r) over the other nodes."""
    if n_nodes < 1:
        raise ValueError("n_nodes must be >= 1")
    return CoverageDistribution(kind=BINOMIAL, mass=binomial_mass(n_nodes - 1, p_r(field)))


def coverage_poisson(mean: float, n_max: int | None = None) -> CoverageDistribution:
    """Poisson coverage limit, built by the multiplicative recurrence.

    mass[n] = mass[n-1] * mean / n starting from exp(-mean); no factorials,
    so large means stay in range.  Without n_max the support extends until
    the cumulative mass passes 1 - 1e-9, bounded by a generous tail cutoff.
    """
    if mean < 0:
        raise ValueError("mean must be >= 0")
    if n_max is not None and n_max < 0:
        raise ValueError("n_max must be >= 0")
    cap = n_max
    if cap is None:
        cap = int(math.ceil(mean + _POISSON_TAIL_SIGMA * math.sqrt(mean))) + _POISSON_TAIL_PAD
    terms = [math.exp(-mean)]
    cumulative = terms[0]
    n = 0
    while n < cap:
        n += 1
        terms.append(terms[-1] * mean / n)
        cumulative += terms[-1]
        if n_max is None and cumulative >= _POISSON_CUM_TARGET:
            break
    return CoverageDistribution(kind=POISSON, mass=np.array(terms))


def tv_distance(mass_a, mass_b) -> float:
    """Total variation distance between two pmfs, padding the shorter with zeros."""
    a = np.asarray(mass_a, dtype=float)
    b = np.asarray(mass_b, dtype=float)
    width = max(len(a), len(b))
    a = np.pad(a, (0, width - len(a)))
    b = np.pad(b, (0, width - len(b)))
    return 0.5 * float(np.abs(a - b).sum())


def le_cam_bound(trials: int, p: float) -> float:
    """Le Cam upper bound trials * p^2 on TV(Binomial(trials, p), Poisson(trials * p))."""
    if trials < 0:
        raise ValueError("trials must be >= 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    return trials * p * p
