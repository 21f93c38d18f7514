"""Two-circle pen-trace curve generation and the planner's point feed.

The trace follows the sum-form parametrization

    x(t) = (r1 + r2) * cos(t) - (r2 + a) * cos(((r1 + r2) / r2) * t)
    y(t) = (r1 + r2) * sin(t) - (r2 + a) * sin(((r1 + r2) / r2) * t)

where r1 is the fixed outer radius, r2 the rolling radius and a the pen
offset from the rolling center.  When (r1 + r2) / r2 reduces to p/q the
curve closes after a parameter sweep of 2*pi*q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

DEFAULT_T_STEP = 0.01

# fallback sweep for irrational-ish ratios whose closure period is impractical
_MAX_DEFAULT_SWEEP = 64.0 * math.pi


class CurvePoint(NamedTuple):
    x: float
    y: float
    t: float


class QuantizedKey(NamedTuple):
    """Grid cell of a point at a given quantum; equal keys mean "same site"."""

    qx: int
    qy: int


def closure_sweep(outer_radius: float, rolling_radius: float) -> float:
    """Parameter sweep after which the trace repeats: 2*pi*q for ratio p/q reduced."""
    if rolling_radius == 0:
        raise ValueError("rolling_radius must be nonzero")
    ratio = Fraction(outer_radius + rolling_radius) / Fraction(rolling_radius)
    return 2.0 * math.pi * ratio.denominator


@dataclass(frozen=True)
class SpirographParams:
    """Geometry and sampling controls for the pen trace.

    t_max defaults to one full closure of the curve, clamped to 64*pi so a
    ratio with a huge reduced denominator cannot produce an absurd sweep.
    """

    outer_radius: float = 180.0
    rolling_radius: float = 40.0
    pen_offset: float = 15.0
    t_step: float = DEFAULT_T_STEP
    t_max: float | None = None

    def __post_init__(self) -> None:
        for name in ("outer_radius", "rolling_radius", "pen_offset", "t_step"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.outer_radius <= 0:
            raise ValueError("outer_radius must be > 0")
        if self.rolling_radius == 0:
            raise ValueError("rolling_radius must be nonzero")
        if self.t_step <= 0:
            raise ValueError("t_step must be > 0")
        if self.t_max is None:
            resolved = min(closure_sweep(self.outer_radius, self.rolling_radius), _MAX_DEFAULT_SWEEP)
            object.__setattr__(self, "t_max", resolved)
        elif not (math.isfinite(self.t_max) and self.t_max > 0):
            raise ValueError("t_max must be positive and finite")

    @property
    def max_extent(self) -> float:
        """Bound on |x| and |y| over the whole trace: |r1 + r2| + |r2 + a|."""
        return abs(self.outer_radius + self.rolling_radius) + abs(self.rolling_radius + self.pen_offset)


def spirograph_point(params: SpirographParams, t: float) -> CurvePoint:
    """Evaluate the trace at parameter t."""
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    arm = params.outer_radius + params.rolling_radius
    pen = params.rolling_radius + params.pen_offset
    ratio = arm / params.rolling_radius
    x = arm * math.cos(t) - pen * math.cos(ratio * t)
    y = arm * math.sin(t) - pen * math.sin(ratio * t)
    return CurvePoint(x=x, y=y, t=t)


def generate_curve(params: SpirographParams) -> list[CurvePoint]:
    """Sample the trace at t = 0, t_step, 2*t_step, ... up to and including t_max.

    Each t is computed as i * t_step, not by accumulation, so the grid does
    not drift for long sweeps.
    """
    count = math.floor(params.t_max / params.t_step) + 1
    return [spirograph_point(params, i * params.t_step) for i in range(count)]


def select_next(curve: Sequence[CurvePoint], cursor: int) -> tuple[CurvePoint | None, int]:
    """Sequential selection: the point at cursor and the advanced cursor.

    Returns (None, cursor) once the curve is exhausted, which callers treat
    as the stop signal rather than an error.
    """
    if cursor < 0:
        raise ValueError("cursor must be >= 0")
    if cursor >= len(curve):
        return None, cursor
    return curve[cursor], cursor + 1


def quantize(point: CurvePoint, quantum: float) -> QuantizedKey:
    """Snap a point to its dedup grid cell."""
    if not (math.isfinite(quantum) and quantum > 0):
        raise ValueError("quantum must be positive and finite")
    return QuantizedKey(qx=round(point.x / quantum), qy=round(point.y / quantum))
