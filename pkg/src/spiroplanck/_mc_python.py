"""Numpy trial kernel, used when the compiled extension is unavailable.

The draw order (x0, y0, x1, y1, ..., probe_x, probe_y, each scaled by the
field side) and the per-pair arithmetic mirror the compiled kernel exactly,
so both backends return identical counts for the same bit generator seed.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def run_trial(bit_generator, n_nodes: int, side: float, radius: float, wrap: bool):
    """One uniform deployment plus one probe point.

    Returns (isolated, covered): the number of nodes with no neighbor
    within radius, and the number of nodes within radius of the probe.
    """
    rng = np.random.Generator(bit_generator)
    points = rng.random((n_nodes, 2)) * side
    probe = rng.random(2) * side
    xs = points[:, 0]
    ys = points[:, 1]
    dx = np.abs(xs[:, None] - xs[None, :])
    dy = np.abs(ys[:, None] - ys[None, :])
    if wrap:
        dx = np.minimum(dx, side - dx)
        dy = np.minimum(dy, side - dy)
    dist2 = dx * dx + dy * dy
    np.fill_diagonal(dist2, np.inf)
    r2 = radius * radius
    isolated = int(np.count_nonzero(np.all(dist2 > r2, axis=1)))
    px = np.abs(xs - probe[0])
    py = np.abs(ys - probe[1])
    if wrap:
        px = np.minimum(px, side - px)
        py = np.minimum(py, side - py)
    covered = int(np.count_nonzero(px * px + py * py <= r2))
    return isolated, covered


def isolated_count(xs, ys, side: float, radius: float, wrap: bool) -> int:
    """Isolated-node count for explicit positions (exposed for direct testing)."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    dx = np.abs(xs[:, None] - xs[None, :])
    dy = np.abs(ys[:, None] - ys[None, :])
    if wrap:
        dx = np.minimum(dx, side - dx)
        dy = np.minimum(dy, side - dy)
    dist2 = dx * dx + dy * dy
    np.fill_diagonal(dist2, np.inf)
    return int(np.count_nonzero(np.all(dist2 > radius * radius, axis=1)))


def covered_count(xs, ys, probe_x: float, probe_y: float, side: float, radius: float, wrap: bool) -> int:
    """Nodes within radius of the probe for explicit positions."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    px = np.abs(xs - probe_x)
    py = np.abs(ys - probe_y)
    if wrap:
        px = np.minimum(px, side - px)
        py = np.minimum(py, side - py)
    return int(np.count_nonzero(px * px + py * py <= radius * radius))
