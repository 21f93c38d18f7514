"""Hand-rolled SVG emitters.

Every figure the package writes comes from these helpers rather than a
plotting library so that identical inputs produce byte-identical files:
no timestamps, no generated ids, fixed float formatting throughout.
"""

from __future__ import annotations

from typing import Sequence

_SVG_OPEN = '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">'
_HEADER = '<?xml version="1.0" encoding="UTF-8"?>'

PALETTE = ("#1f6feb", "#d73a49", "#2da44e", "#b08800", "#8250df", "#bf3989")

_AXIS_COLOR = "#57606a"
_GRID_COLOR = "#d0d7de"
_TEXT_STYLE = 'font-family="Helvetica, Arial, sans-serif" font-size="12" fill="#24292f"'

# draw per-point markers only on sparse series
_MARKER_LIMIT = 32


def _px(value: float) -> str:
    return f"{value:.2f}"


def _tick(value: float) -> str:
    return f"{value:.6g}"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _polyline(coords: Sequence[tuple[float, float]], stroke: str, width: float, opacity: float = 1.0) -> str:
    points = " ".join(f"{_px(x)},{_px(y)}" for x, y in coords)
    return (
        f'<polyline points="{points}" fill="none" stroke="{stroke}" '
        f'stroke-width="{width}" stroke-opacity="{opacity}" stroke-linejoin="round"/>'
    )


def curve_svg(points: Sequence[tuple[float, float]], size: int = 640) -> str:
    """Standalone plot of a closed pen trace, centered with a 5% margin."""
    if not points:
        raise ValueError("points must be non-empty")
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y)
    if span <= 0:
        span = 1.0
    usable = 0.9 * size
    scale = usable / span
    cx = 0.5 * (min_x + max_x)
    cy = 0.5 * (min_y + max_y)
    half = size / 2.0

    def to_px(x: float, y: float) -> tuple[float, float]:
        # y axis flips: data y up, screen y down
        return (x - cx) * scale + half, half - (y - cy) * scale

    lines = [
        _HEADER,
        _SVG_OPEN.format(w=size, h=size),
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="#ffffff"/>',
        _polyline([to_px(x, y) for x, y in points], PALETTE[0], 1.2),
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def plan_svg(
    side_m: float,
    range_m: float,
    placements: Sequence[tuple[float, float]],
    curve_points: Sequence[tuple[float, float]],
    size: int = 640,
) -> str:
    """Deployment picture: field square, guiding curve, nodes, coverage disks.

    placements and curve_points are in field coordinates (meters, origin at
    the field's lower-left corner).
    """
    if side_m <= 0:
        raise ValueError("side_m must be > 0")
    pad = 20.0
    ppm = (size - 2.0 * pad) / side_m

    def to_px(x: float, y: float) -> tuple[float, float]:
        return pad + x * ppm, pad + (side_m - y) * ppm

    lines = [
        _HEADER,
        _SVG_OPEN.format(w=size, h=size),
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="#ffffff"/>',
        f'<rect x="{_px(pad)}" y="{_px(pad)}" width="{_px(side_m * ppm)}" height="{_px(side_m * ppm)}" '
        f'fill="none" stroke="{_AXIS_COLOR}" stroke-width="1"/>',
    ]
    if curve_points:
        lines.append(_polyline([to_px(x, y) for x, y in curve_points], PALETTE[1], 1.0, opacity=0.7))
    disk_r = range_m * ppm
    for x, y in placements:
        px, py = to_px(x, y)
        lines.append(
            f'<circle cx="{_px(px)}" cy="{_px(py)}" r="{_px(disk_r)}" '
            f'fill="{PALETTE[0]}" fill-opacity="0.06" stroke="{PALETTE[0]}" '
            f'stroke-opacity="0.35" stroke-width="0.75"/>'
        )
    for x, y in placements:
        px, py = to_px(x, y)
        lines.append(f'<circle cx="{_px(px)}" cy="{_px(py)}" r="2.5" fill="#0a3069"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def line_chart_svg(
    series: Sequence[tuple[str, Sequence[float], Sequence[float]]],
    x_label: str,
    y_label: str,
    width: int = 720,
    height: int = 480,
) -> str:
    """Multi-series line chart with shared linear axes and a legend.

    series is a list of (label, xs, ys) with xs and ys of equal length.
    """
    if not series:
        raise ValueError("series must be non-empty")
    for label, xs, ys in series:
        if len(xs) != len(ys):
            raise ValueError(f"series {label!r}: xs and ys lengths differ")
        if not xs:
            raise ValueError(f"series {label!r} is empty")

    all_x = [x for _, xs, _ in series for x in xs]
    all_y = [y for _, _, ys in series for y in ys]
    x_lo, x_hi = min(all_x), max(all_x)
    y_lo = min(0.0, min(all_y))
    y_hi = max(all_y)
    if x_hi <= x_lo:
        x_hi = x_lo + 1.0
    if y_hi <= y_lo:
        y_hi = y_lo + 1.0
    y_hi += 0.05 * (y_hi - y_lo)

    margin_left, margin_right, margin_top, margin_bottom = 80.0, 24.0, 24.0, 56.0
    plot_w = width - margin_left - margin_right
    plot_h = height - margin_top - margin_bottom

    def to_px(x: float, y: float) -> tuple[float, float]:
        fx = (x - x_lo) / (x_hi - x_lo)
        fy = (y - y_lo) / (y_hi - y_lo)
        return margin_left + fx * plot_w, margin_top + (1.0 - fy) * plot_h

    lines = [
        _HEADER,
        _SVG_OPEN.format(w=width, h=height),
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    ticks = 5
    for i in range(ticks):
        frac = i / (ticks - 1)
        gx = margin_left + frac * plot_w
        gy = margin_top + frac * plot_h
        lines.append(
            f'<line x1="{_px(gx)}" y1="{_px(margin_top)}" x2="{_px(gx)}" '
            f'y2="{_px(margin_top + plot_h)}" stroke="{_GRID_COLOR}" stroke-width="0.5"/>'
        )
        lines.append(
            f'<line x1="{_px(margin_left)}" y1="{_px(gy)}" x2="{_px(margin_left + plot_w)}" '
            f'y2="{_px(gy)}" stroke="{_GRID_COLOR}" stroke-width="0.5"/>'
        )
        x_value = x_lo + frac * (x_hi - x_lo)
        y_value = y_hi - frac * (y_hi - y_lo)
        lines.append(
            f'<text x="{_px(gx)}" y="{_px(margin_top + plot_h + 18.0)}" {_TEXT_STYLE} '
            f'text-anchor="middle">{_escape(_tick(x_value))}</text>'
        )
        lines.append(
            f'<text x="{_px(margin_left - 8.0)}" y="{_px(gy + 4.0)}" {_TEXT_STYLE} '
            f'text-anchor="end">{_escape(_tick(y_value))}</text>'
        )
    lines.append(
        f'<rect x="{_px(margin_left)}" y="{_px(margin_top)}" width="{_px(plot_w)}" '
        f'height="{_px(plot_h)}" fill="none" stroke="{_AXIS_COLOR}" stroke-width="1"/>'
    )
    for index, (label, xs, ys) in enumerate(series):
        color = PALETTE[index % len(PALETTE)]
        coords = [to_px(x, y) for x, y in zip(xs, ys)]
        if len(coords) > 1:
            lines.append(_polyline(coords, color, 1.5))
        if len(coords) <= _MARKER_LIMIT:
            for px, py in coords:
                lines.append(f'<circle cx="{_px(px)}" cy="{_px(py)}" r="3" fill="{color}"/>')
    legend_x = margin_left + plot_w - 150.0
    legend_y = margin_top + 14.0
    for index, (label, _, _) in enumerate(series):
        color = PALETTE[index % len(PALETTE)]
        ly = legend_y + 18.0 * index
        lines.append(
            f'<line x1="{_px(legend_x)}" y1="{_px(ly - 4.0)}" x2="{_px(legend_x + 24.0)}" '
            f'y2="{_px(ly - 4.0)}" stroke="{color}" stroke-width="2"/>'
        )
        lines.append(
            f'<text x="{_px(legend_x + 30.0)}" y="{_px(ly)}" {_TEXT_STYLE}>{_escape(label)}</text>'
        )
    lines.append(
        f'<text x="{_px(margin_left + plot_w / 2.0)}" y="{_px(height - 12.0)}" {_TEXT_STYLE} '
        f'text-anchor="middle">{_escape(x_label)}</text>'
    )
    lines.append(
        f'<text x="16" y="{_px(margin_top + plot_h / 2.0)}" {_TEXT_STYLE} text-anchor="middle" '
        f'transform="rotate(-90 16 {_px(margin_top + plot_h / 2.0)})">{_escape(y_label)}</text>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
