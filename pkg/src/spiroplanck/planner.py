"""Sequential curve-guided placement driven by the isolation-probability threshold.

The planner walks the pen trace one candidate point per pass.  A candidate
whose quantized position is new gets occupied and the density and isolation
probability are recomputed for the grown population; a revisited position
changes nothing.  Either way the pass logs a trace record including the
radiance diagnostic evaluated at wavelength = density * wavelength_scale.
The walk stops as soon as the isolation probability reaches the threshold,
or when the curve runs out of fresh points, or at the iteration cap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .coverage import FieldSpec, density, isolation_probability
from .curve import (
    CurvePoint,
    QuantizedKey,
    SpirographParams,
    generate_curve,
    quantize,
    select_next,
)
from .radiometry import PhysicalConstants, DEFAULT_CONSTANTS, spectral_radiance

CONVERGED = "converged"
CURVE_EXHAUSTED = "curve-exhausted"
ITERATION_CAPPED = "iteration-capped"

SEQUENTIAL = "sequential"
RANDOM = "random"
_POLICIES = (SEQUENTIAL, RANDOM)

DEFAULT_THRESHOLD = 0.1
DEFAULT_DEDUP_QUANTUM = 1e-6
DEFAULT_TEMPERATURE_K = 6000.0
# meters of diagnostic wavelength per unit of density
DEFAULT_WAVELENGTH_SCALE = 1e-6
# default iteration cap: this many passes per curve point
_CAP_FACTOR = 10

TRACE_COLUMNS = ("iteration", "n_nodes", "density", "p_isolated", "radiance", "accepted")


@dataclass(frozen=True)
class PlannerConfig:
    field: FieldSpec
    curve_params: SpirographParams = SpirographParams()
    threshold: float = DEFAULT_THRESHOLD
    dedup_quantum: float = DEFAULT_DEDUP_QUANTUM
    temperature_k: float = DEFAULT_TEMPERATURE_K
    wavelength_scale: float = DEFAULT_WAVELENGTH_SCALE
    constants: PhysicalConstants = DEFAULT_CONSTANTS
    max_iterations: int | None = None
    select_policy: str = SEQUENTIAL
    select_seed: int | None = None

    def __post_init__(self) -> None:
        if not 0.0 < self.threshold < 1.0:
            raise ValueError("threshold must lie strictly between 0 and 1")
        if self.dedup_quantum <= 0:
            raise ValueError("dedup_quantum must be > 0")
        if self.temperature_k <= 0:
            raise ValueError("temperature_k must be > 0")
        if self.wavelength_scale <= 0:
            raise ValueError("wavelength_scale must be > 0")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.select_policy not in _POLICIES:
            raise ValueError(f"unknown select_policy: {self.select_policy!r}")
        if self.select_policy == RANDOM and self.select_seed is None:
            raise ValueError("random selection requires select_seed")


@dataclass(frozen=True)
class IterationRecord:
    """One loop pass; iteration is 1-based."""

    iteration: int
    n_nodes: int
    density: float
    p_isolated: float
    radiance: float
    accepted: bool


@dataclass(frozen=True)
class PlanResult:
    placed: tuple[CurvePoint, ...]
    n_final: int
    density_final: float
    p_final: float
    trace: tuple[IterationRecord, ...]
    outcome: str


def resolve_max_iterations(config: PlannerConfig, curve_length: int) -> int:
    """The iteration cap actually in force: explicit, or _CAP_FACTOR per point."""
    if config.max_iterations is not None:
        return config.max_iterations
    return _CAP_FACTOR * curve_length


def _make_selector(config: PlannerConfig, curve: list[CurvePoint]) -> Callable[[], CurvePoint | None]:
    if config.select_policy == RANDOM:
        rng = random.Random(config.select_seed)

        def pick_random() -> CurvePoint | None:
            return curve[rng.randrange(len(curve))]

        return pick_random

    cursor = 0

    def pick_sequential() -> CurvePoint | None:
        nonlocal cursor
        point, cursor = select_next(curve, cursor)
        return point

    return pick_sequential


def run(config: PlannerConfig) -> PlanResult:
    """Execute the placement loop; see the module docstring for semantics.

    The population count starts at 1 (the first node needs no coverage
    justification), so the first accepted point brings n_nodes to 2.
    """
    curve = generate_curve(config.curve_params)
    cap = resolve_max_iterations(config, len(curve))
    pick = _make_selector(config, curve)

    occupied: set[QuantizedKey] = set()
    placed: list[CurvePoint] = []
    n_nodes = 1
    dens = density(config.field, n_nodes)
    p = isolation_probability(dens, n_nodes)
    trace: list[IterationRecord] = []
    outcome = CONVERGED
    while p < config.threshold:
        if len(trace) >= cap:
            outcome = ITERATION_CAPPED
            break
        point = pick()
        if point is None:
            outcome = CURVE_EXHAUSTED
            break
        key = quantize(point, config.dedup_quantum)
        accepted = key not in occupied
        if accepted:
            occupied.add(key)
            placed.append(point)
            n_nodes += 1
            dens = density(config.field, n_nodes)
            p = isolation_probability(dens, n_nodes)
        radiance = spectral_radiance(
            dens * config.wavelength_scale, config.temperature_k, config.constants
        )
        trace.append(
            IterationRecord(
                iteration=len(trace) + 1,
                n_nodes=n_nodes,
                density=dens,
                p_isolated=p,
                radiance=radiance,
                accepted=accepted,
            )
        )
    return PlanResult(
        placed=tuple(placed),
        n_final=n_nodes,
        density_final=dens,
        p_final=p,
        trace=tuple(trace),
        outcome=outcome,
    )


def trace_to_rows(result: PlanResult) -> list[tuple[int, int, float, float, float, bool]]:
    """Trace records as plain tuples in TRACE_COLUMNS order."""
    return [
        (r.iteration, r.n_nodes, r.density, r.p_isolated, r.radiance, r.accepted)
        for r in result.trace
    ]
