"""Command-line front end.

Six subcommands: spirograph, plan, planck, coverage, montecarlo, bench.
Each writes fixed-name artifacts into --outdir plus a key=value manifest;
running the same subcommand with --from-manifest pointing at that manifest
reproduces every artifact byte for byte.

Option precedence, highest first: command-line flag, manifest entry (when
replaying), [section] entry in the --config TOML file, built-in default.

Exit codes: 0 success, 1 usage or config errors, 2 I/O errors, 3 planner
did not converge under --strict.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from importlib import resources
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import __version__, manifest, svgplot
from .coverage import (
    FieldSpec,
    coverage_binomial,
    coverage_poisson,
    density,
    p_r,
    tv_distance,
)
from .curve import SpirographParams, generate_curve
from .oracle import TrialConfig, compare_to_formula, simulate
from .planner import (
    DEFAULT_DEDUP_QUANTUM,
    DEFAULT_TEMPERATURE_K,
    DEFAULT_THRESHOLD,
    DEFAULT_WAVELENGTH_SCALE,
    CONVERGED,
    PlannerConfig,
    RANDOM,
    SEQUENTIAL,
    TRACE_COLUMNS,
    resolve_max_iterations,
    run,
    trace_to_rows,
)
from .radiometry import (
    DEFAULT_CONSTANTS,
    DEFAULT_GRID_START_M,
    DEFAULT_GRID_STEP_M,
    DEFAULT_GRID_STOP_M,
    ENERGY_DENSITY,
    PRECISE_CONSTANTS,
    RADIANCE,
    SpectralParams,
    spectral_curve,
    wavelength_grid,
    wien_peak,
)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_NOT_CONVERGED = 3

DEFAULT_SIDE_M = 100.0
DEFAULT_RANGE_M = 7.0
DEFAULT_NODES = 321
DEFAULT_TRIALS = 10_000
DEFAULT_SEED = 1729
DEFAULT_TEMPERATURES = (4500.0, 6000.0, 7500.0)

_REFERENCE_HEADER = "nodes,pt_mpt_sim,pt_mpt_emu,spiroplanck"
_BUNDLED_DATA = "bundled"

_CONSTANT_SETS = {"default": DEFAULT_CONSTANTS, "precise": PRECISE_CONSTANTS}

_CONFIG_SCHEMA = {
    "field": {"side", "range"},
    "curve": {"outer_radius", "rolling_radius", "pen_offset", "t_step", "t_max"},
    "planner": {
        "threshold",
        "dedup_quantum",
        "temperature",
        "wavelength_scale",
        "max_iterations",
        "select_policy",
        "select_seed",
    },
    "planck": {"temperatures", "grid_start", "grid_stop", "grid_step", "form", "constants"},
    "montecarlo": {"nodes", "trials", "seed", "topology"},
}


class ConfigError(Exception):
    """Bad flag values, malformed config files, malformed data."""


class OutputError(Exception):
    """Unreadable inputs or unwritable outputs."""


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1, leaving 2 free for I/O failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _read_text(path: Path, what: str) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot read {what} {path}: {exc}") from exc


def _write_text(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="")
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    text = _read_text(Path(path), "config file")
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML in {path}: {exc}") from exc
    for section, table in data.items():
        if section not in _CONFIG_SCHEMA:
            raise ConfigError(f"unknown config section [{section}] in {path}")
        if not isinstance(table, dict):
            raise ConfigError(f"config section [{section}] must be a table")
        for key in table:
            if key not in _CONFIG_SCHEMA[section]:
                raise ConfigError(f"unknown config key {section}.{key} in {path}")
    return data


def _load_replay(path: str | None, expected_command: str) -> dict[str, str] | None:
    if path is None:
        return None
    text = _read_text(Path(path), "manifest")
    try:
        entries = manifest.parse(text)
    except manifest.ManifestError as exc:
        raise ConfigError(str(exc)) from exc
    command = entries.get("command")
    if command != expected_command:
        raise ConfigError(
            f"manifest {path} was written by {command!r}, not {expected_command!r}"
        )
    return entries


def _parse_str(text: str, kind: str, name: str):
    try:
        if kind == "float":
            return float(text)
        if kind == "int":
            return int(text)
        if kind == "bool":
            if text in ("true", "false"):
                return text == "true"
            raise ValueError(text)
        if kind == "float_list":
            return [float(item) for item in text.split(",")]
        return text
    except ValueError as exc:
        raise ConfigError(f"manifest value for {name} is not a valid {kind}: {text!r}") from exc


def _coerce_toml(value, kind: str, name: str):
    if kind == "float" and isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if kind == "int" and isinstance(value, int) and not isinstance(value, bool):
        return value
    if kind == "bool" and isinstance(value, bool):
        return value
    if kind == "str" and isinstance(value, str):
        return value
    if kind == "float_list" and isinstance(value, list) and all(
        isinstance(item, (int, float)) and not isinstance(item, bool) for item in value
    ):
        return [float(item) for item in value]
    raise ConfigError(f"config key {name} must be a {kind}")


class _Resolver:
    """flag > manifest > config file > default, for one subcommand run."""

    def __init__(self, args: argparse.Namespace, file_cfg: dict, replay: dict[str, str] | None):
        self.args = args
        self.file_cfg = file_cfg
        self.replay = replay

    def value(self, dest: str, section: str, key: str, default, kind: str = "float"):
        flag = getattr(self.args, dest, None)
        if flag is not None:
            return flag
        dotted = f"{section}.{key}"
        if self.replay is not None and dotted in self.replay:
            return _parse_str(self.replay[dotted], kind, dotted)
        table = self.file_cfg.get(section, {})
        if key in table:
            return _coerce_toml(table[key], kind, dotted)
        return default


def _field_from(res: _Resolver) -> FieldSpec:
    side = res.value("side", "field", "side", DEFAULT_SIDE_M)
    range_m = res.value("range", "field", "range", DEFAULT_RANGE_M)
    try:
        return FieldSpec(side_m=side, range_m=range_m)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _curve_from(res: _Resolver) -> SpirographParams:
    try:
        return SpirographParams(
            outer_radius=res.value("outer_radius", "curve", "outer_radius", 180.0),
            rolling_radius=res.value("rolling_radius", "curve", "rolling_radius", 40.0),
            pen_offset=res.value("pen_offset", "curve", "pen_offset", 15.0),
            t_step=res.value("t_step", "curve", "t_step", 0.01),
            t_max=res.value("t_max", "curve", "t_max", None),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _curve_entries(params: SpirographParams) -> dict[str, object]:
    return {
        "curve.outer_radius": params.outer_radius,
        "curve.rolling_radius": params.rolling_radius,
        "curve.pen_offset": params.pen_offset,
        "curve.t_step": params.t_step,
        "curve.t_max": params.t_max,
    }


def _field_entries(field: FieldSpec) -> dict[str, object]:
    return {"field.side": field.side_m, "field.range": field.range_m}


def _format_bool(value: bool) -> str:
    return "true" if value else "false"


def _write_manifest(outdir: Path, name: str, entries: dict[str, object]) -> None:
    try:
        text = manifest.render(entries)
    except manifest.ManifestError as exc:
        raise ConfigError(str(exc)) from exc
    _write_text(outdir / name, text)


# ---------------------------------------------------------------- spirograph


def cmd_spirograph(args: argparse.Namespace) -> int:
    file_cfg = _load_config(args.config)
    replay = _load_replay(args.from_manifest, "spirograph")
    res = _Resolver(args, file_cfg, replay)
    params = _curve_from(res)
    points = generate_curve(params)

    outdir = Path(args.outdir)
    rows = ["t,x,y"]
    rows.extend(f"{p.t:.9g},{p.x:.9g},{p.y:.9g}" for p in points)
    _write_text(outdir / "spirograph.csv", "\n".join(rows) + "\n")
    _write_text(outdir / "spirograph.svg", svgplot.curve_svg([(p.x, p.y) for p in points]))

    entries: dict[str, object] = {"command": "spirograph", "version": __version__}
    entries.update(_curve_entries(params))
    entries["output.csv"] = "spirograph.csv"
    entries["output.svg"] = "spirograph.svg"
    _write_manifest(outdir, "spirograph.manifest", entries)
    print(f"spirograph: {len(points)} points, t_max={params.t_max!r}, outputs in {outdir}")
    return EXIT_OK


# ---------------------------------------------------------------------- plan


def _field_mapping(curve_points, side_m: float):
    """Affine map from curve coordinates onto the field, 5% margin, aspect kept."""
    xs = [p.x for p in curve_points]
    ys = [p.y for p in curve_points]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y)
    scale = 0.9 * side_m / span if span > 0 else 1.0
    cx = 0.5 * (min_x + max_x)
    cy = 0.5 * (min_y + max_y)
    half = side_m / 2.0

    def to_field(x: float, y: float) -> tuple[float, float]:
        return (x - cx) * scale + half, (y - cy) * scale + half

    return to_field


def cmd_plan(args: argparse.Namespace) -> int:
    file_cfg = _load_config(args.config)
    replay = _load_replay(args.from_manifest, "plan")
    res = _Resolver(args, file_cfg, replay)
    field = _field_from(res)
    params = _curve_from(res)
    policy = res.value("select_policy", "planner", "select_policy", SEQUENTIAL, kind="str")
    if policy not in (SEQUENTIAL, RANDOM):
        raise ConfigError(f"unknown select policy: {policy!r}")
    try:
        config = PlannerConfig(
            field=field,
            curve_params=params,
            threshold=res.value("threshold", "planner", "threshold", DEFAULT_THRESHOLD),
            dedup_quantum=res.value(
                "dedup_quantum", "planner", "dedup_quantum", DEFAULT_DEDUP_QUANTUM
            ),
            temperature_k=res.value(
                "temperature", "planner", "temperature", DEFAULT_TEMPERATURE_K
            ),
            wavelength_scale=res.value(
                "wavelength_scale", "planner", "wavelength_scale", DEFAULT_WAVELENGTH_SCALE
            ),
            max_iterations=res.value(
                "max_iterations", "planner", "max_iterations", None, kind="int"
            ),
            select_policy=policy,
            select_seed=res.value("select_seed", "planner", "select_seed", None, kind="int"),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    curve_points = generate_curve(params)
    cap = resolve_max_iterations(config, len(curve_points))
    result = run(config)

    to_field = _field_mapping(curve_points, field.side_m)
    outdir = Path(args.outdir)

    rows = ["index,t,x,y,field_x,field_y"]
    for index, point in enumerate(result.placed):
        fx, fy = to_field(point.x, point.y)
        rows.append(f"{index},{point.t!r},{point.x!r},{point.y!r},{fx!r},{fy!r}")
    _write_text(outdir / "placement.csv", "\n".join(rows) + "\n")

    rows = [",".join(TRACE_COLUMNS)]
    for iteration, n_nodes, dens, p_iso, rad, accepted in trace_to_rows(result):
        rows.append(
            f"{iteration},{n_nodes},{dens!r},{p_iso!r},{rad!r},{_format_bool(accepted)}"
        )
    _write_text(outdir / "trace.csv", "\n".join(rows) + "\n")

    placements_field = [to_field(p.x, p.y) for p in result.placed]
    curve_field = [to_field(p.x, p.y) for p in curve_points]
    _write_text(
        outdir / "placement.svg",
        svgplot.plan_svg(field.side_m, field.range_m, placements_field, curve_field),
    )

    entries: dict[str, object] = {"command": "plan", "version": __version__}
    entries.update(_field_entries(field))
    entries.update(_curve_entries(params))
    entries["planner.threshold"] = config.threshold
    entries["planner.dedup_quantum"] = config.dedup_quantum
    entries["planner.temperature"] = config.temperature_k
    entries["planner.wavelength_scale"] = config.wavelength_scale
    entries["planner.max_iterations"] = cap
    entries["planner.select_policy"] = config.select_policy
    if config.select_seed is not None:
        entries["planner.select_seed"] = config.select_seed
    entries["result.outcome"] = result.outcome
    entries["result.n_final"] = result.n_final
    entries["result.density_final"] = result.density_final
    entries["result.p_final"] = result.p_final
    entries["result.iterations"] = len(result.trace)
    entries["output.placement_csv"] = "placement.csv"
    entries["output.trace_csv"] = "trace.csv"
    entries["output.svg"] = "placement.svg"
    _write_manifest(outdir, "plan.manifest", entries)

    print(
        f"plan: outcome={result.outcome} n_final={result.n_final} "
        f"density={result.density_final!r} p={result.p_final!r} "
        f"iterations={len(result.trace)}"
    )
    if result.outcome != CONVERGED:
        print(f"warning: planner stopped early: {result.outcome}", file=sys.stderr)
        if args.strict:
            return EXIT_NOT_CONVERGED
    return EXIT_OK


# -------------------------------------------------------------------- planck


def cmd_planck(args: argparse.Namespace) -> int:
    file_cfg = _load_config(args.config)
    replay = _load_replay(args.from_manifest, "planck")
    res = _Resolver(args, file_cfg, replay)

    temperatures = res.value(
        "temperatures", "planck", "temperatures", list(DEFAULT_TEMPERATURES), kind="float_list"
    )
    if not temperatures:
        raise ConfigError("at least one temperature is required")
    if any(t <= 0 for t in temperatures):
        raise ConfigError("temperatures must be positive")
    labels = [f"T{t:g}" for t in temperatures]
    if len(set(labels)) != len(labels):
        raise ConfigError("duplicate temperatures")

    start = res.value("grid_start", "planck", "grid_start", DEFAULT_GRID_START_M)
    stop = res.value("grid_stop", "planck", "grid_stop", DEFAULT_GRID_STOP_M)
    step = res.value("grid_step", "planck", "grid_step", DEFAULT_GRID_STEP_M)
    form = res.value("form", "planck", "form", RADIANCE, kind="str")
    if form not in (RADIANCE, ENERGY_DENSITY):
        raise ConfigError(f"unknown form: {form!r}")
    constants_name = res.value("constants", "planck", "constants", "default", kind="str")
    if constants_name not in _CONSTANT_SETS:
        raise ConfigError(f"unknown constants set: {constants_name!r}")
    constants = _CONSTANT_SETS[constants_name]

    try:
        grid = wavelength_grid(start, stop, step)
        curves = [
            spectral_curve(SpectralParams(t, grid, constants, form)) for t in temperatures
        ]
        peaks = [wien_peak(t, constants) for t in temperatures]
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    outdir = Path(args.outdir)
    rows = ["wavelength_m," + ",".join(labels)]
    for i, lam in enumerate(grid):
        cells = [repr(lam)] + [repr(curve[i][1]) for curve in curves]
        rows.append(",".join(cells))
    _write_text(outdir / "planck.csv", "\n".join(rows) + "\n")

    y_label = (
        "spectral radiance (W m^-3)" if form == RADIANCE else "spectral energy density (J m^-4)"
    )
    series = [
        (f"T = {t:g} K", list(grid), [value for _, value in curve])
        for t, curve in zip(temperatures, curves)
    ]
    _write_text(
        outdir / "planck.svg", svgplot.line_chart_svg(series, "wavelength (m)", y_label)
    )

    entries: dict[str, object] = {"command": "planck", "version": __version__}
    entries["planck.temperatures"] = temperatures
    entries["planck.grid_start"] = start
    entries["planck.grid_stop"] = stop
    entries["planck.grid_step"] = step
    entries["planck.form"] = form
    entries["planck.constants"] = constants_name
    for label, peak in zip(labels, peaks):
        entries[f"result.peak_m.{label}"] = peak
    entries["output.csv"] = "planck.csv"
    entries["output.svg"] = "planck.svg"
    _write_manifest(outdir, "planck.manifest", entries)

    peak_text = " ".join(f"{label}={peak!r}" for label, peak in zip(labels, peaks))
    print(f"planck: {len(grid)} wavelengths, peaks [m]: {peak_text}")
    return EXIT_OK


# ------------------------------------------------------------------ coverage


def cmd_coverage(args: argparse.Namespace) -> int:
    file_cfg = _load_config(args.config)
    replay = _load_replay(args.from_manifest, "coverage")
    res = _Resolver(args, file_cfg, replay)
    field = _field_from(res)
    nodes = res.value("nodes", "montecarlo", "nodes", DEFAULT_NODES, kind="int")
    if nodes < 1:
        raise ConfigError("nodes must be >= 1")

    dens = density(field, nodes)
    binom = coverage_binomial(field, nodes)
    pois = coverage_poisson(dens)
    tv = tv_distance(binom.mass, pois.mass)

    outdir = Path(args.outdir)
    width = max(len(binom.mass), len(pois.mass))
    rows = ["n,binomial,poisson"]
    for n in range(width):
        b = binom.mass[n] if n < len(binom.mass) else 0.0
        p = pois.mass[n] if n < len(pois.mass) else 0.0
        rows.append(f"{n},{b!r},{p!r}")
    rows.append(f"# tv_distance={tv!r}")
    _write_text(outdir / "coverage.csv", "\n".join(rows) + "\n")

    entries: dict[str, object] = {"command": "coverage", "version": __version__}
    entries.update(_field_entries(field))
    entries["montecarlo.nodes"] = nodes
    entries["result.density"] = dens
    entries["result.p_r"] = p_r(field)
    entries["result.tv_distance"] = tv
    entries["output.csv"] = "coverage.csv"
    _write_manifest(outdir, "coverage.manifest", entries)

    print(f"coverage: nodes={nodes} p_r={p_r(field)!r} tv_distance={tv!r}")
    return EXIT_OK


# ---------------------------------------------------------------- montecarlo


def cmd_montecarlo(args: argparse.Namespace) -> int:
    file_cfg = _load_config(args.config)
    replay = _load_replay(args.from_manifest, "montecarlo")
    res = _Resolver(args, file_cfg, replay)
    field = _field_from(res)
    nodes = res.value("nodes", "montecarlo", "nodes", DEFAULT_NODES, kind="int")
    trials = res.value("trials", "montecarlo", "trials", DEFAULT_TRIALS, kind="int")
    seed = res.value("seed", "montecarlo", "seed", DEFAULT_SEED, kind="int")
    topology = res.value("topology", "montecarlo", "topology", "torus", kind="str")
    try:
        config = TrialConfig(
            field=field, n_nodes=nodes, trials=trials, seed=seed, topology=topology
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    try:
        stats = simulate(config, backend=args.backend)
    except (RuntimeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    dens = density(field, nodes)
    report = compare_to_formula(stats, dens, nodes)

    outdir = Path(args.outdir)
    rows = [
        "metric,value,stderr",
        f"p_no_isolated,{stats.p_no_isolated!r},{stats.p_no_isolated_stderr!r}",
        f"mean_isolated_count,{stats.mean_isolated_count!r},{stats.mean_isolated_stderr!r}",
    ]
    _write_text(outdir / "montecarlo_stats.csv", "\n".join(rows) + "\n")

    binom = coverage_binomial(field, nodes)
    pois = coverage_poisson(dens)
    width = max(len(stats.coverage_histogram), len(binom.mass), len(pois.mass))
    rows = ["n,observed,stderr,binomial,poisson"]
    for n in range(width):
        observed = stats.coverage_histogram[n] if n < len(stats.coverage_histogram) else 0.0
        err = stats.coverage_stderr[n] if n < len(stats.coverage_stderr) else 0.0
        b = binom.mass[n] if n < len(binom.mass) else 0.0
        p = pois.mass[n] if n < len(pois.mass) else 0.0
        rows.append(f"{n},{observed!r},{err!r},{b!r},{p!r}")
    _write_text(outdir / "montecarlo_histogram.csv", "\n".join(rows) + "\n")

    stderr_reliable = trials >= 2
    lines = [
        f"trials={trials}",
        f"topology={topology}",
        f"n_nodes={nodes}",
        f"density={dens!r}",
        f"predicted_p_no_isolated={report.predicted_p_no_isolated!r}",
        f"observed_p_no_isolated={report.observed_p_no_isolated!r}",
        f"p_no_isolated_gap={report.p_no_isolated_gap!r}",
        f"p_no_isolated_stderr={report.p_no_isolated_stderr!r}",
        f"predicted_mean_isolated={report.predicted_mean_isolated!r}",
        f"observed_mean_isolated={report.observed_mean_isolated!r}",
        f"mean_isolated_gap={report.mean_isolated_gap!r}",
        f"mean_isolated_stderr={report.mean_isolated_stderr!r}",
        f"tv_vs_binomial={report.tv_vs_binomial!r}",
        f"tv_vs_poisson={report.tv_vs_poisson!r}",
        f"degenerate_single_node={_format_bool(report.degenerate_single_node)}",
        f"stderr_reliable={_format_bool(stderr_reliable)}",
    ]
    _write_text(outdir / "montecarlo_report.txt", "\n".join(lines) + "\n")

    entries: dict[str, object] = {"command": "montecarlo", "version": __version__}
    entries.update(_field_entries(field))
    entries["montecarlo.nodes"] = nodes
    entries["montecarlo.trials"] = trials
    entries["montecarlo.seed"] = seed
    entries["montecarlo.topology"] = topology
    entries["result.p_no_isolated"] = stats.p_no_isolated
    entries["result.mean_isolated_count"] = stats.mean_isolated_count
    entries["result.tv_vs_binomial"] = report.tv_vs_binomial
    entries["result.tv_vs_poisson"] = report.tv_vs_poisson
    entries["output.stats_csv"] = "montecarlo_stats.csv"
    entries["output.histogram_csv"] = "montecarlo_histogram.csv"
    entries["output.report_txt"] = "montecarlo_report.txt"
    _write_manifest(outdir, "montecarlo.manifest", entries)

    print(
        f"montecarlo: trials={trials} p_no_isolated={stats.p_no_isolated!r} "
        f"mean_isolated={stats.mean_isolated_count!r} tv_vs_binomial={report.tv_vs_binomial!r}"
    )
    if not stderr_reliable:
        print("warning: stderr estimates need at least 2 trials", file=sys.stderr)
    return EXIT_OK


# --------------------------------------------------------------------- bench


def _parse_reference_table(text: str, source: str) -> list[tuple[int, int, int, int]]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ConfigError(f"{source}: empty file") from None
    if [cell.strip() for cell in header] != _REFERENCE_HEADER.split(","):
        raise ConfigError(
            f"{source}: expected header {_REFERENCE_HEADER!r}, got {','.join(header)!r}"
        )
    rows: list[tuple[int, int, int, int]] = []
    for lineno, cells in enumerate(reader, start=2):
        if not cells or (len(cells) == 1 and not cells[0].strip()):
            continue
        if len(cells) != 4:
            raise ConfigError(f"{source} line {lineno}: expected 4 cells, got {len(cells)}")
        values = []
        for name, cell in zip(_REFERENCE_HEADER.split(","), cells):
            try:
                value = int(cell.strip())
            except ValueError:
                raise ConfigError(
                    f"{source} line {lineno}: column {name} is not an integer: {cell.strip()!r}"
                ) from None
            if value < 0:
                raise ConfigError(f"{source} line {lineno}: column {name} is negative")
            values.append(value)
        rows.append(tuple(values))
    if not rows:
        raise ConfigError(f"{source}: no data rows")
    for (a, *_), (b, *_) in zip(rows, rows[1:]):
        if b <= a:
            raise ConfigError(f"{source}: nodes column must be strictly increasing")
    return rows


def _bundled_reference_text() -> str:
    return (
        resources.files("spiroplanck").joinpath("data/ospf_overhead.csv").read_text("utf-8")
    )


def cmd_bench(args: argparse.Namespace) -> int:
    replay = _load_replay(args.from_manifest, "bench")
    data = args.data
    if data is None and replay is not None:
        data = replay.get("bench.data")
        if data == _BUNDLED_DATA:
            data = None
    if data is None:
        text = _bundled_reference_text()
        source = _BUNDLED_DATA
    else:
        text = _read_text(Path(data), "reference table")
        source = data
    rows = _parse_reference_table(text, source if source != _BUNDLED_DATA else "bundled table")

    outdir = Path(args.outdir)
    out_rows = [_REFERENCE_HEADER]
    out_rows.extend(f"{n},{sim},{emu},{ours}" for n, sim, emu, ours in rows)
    _write_text(outdir / "bench_table.csv", "\n".join(out_rows) + "\n")

    nodes = [float(r[0]) for r in rows]
    series = [
        ("PT/MPT (simulated)", nodes, [float(r[1]) for r in rows]),
        ("PT/MPT (emulated)", nodes, [float(r[2]) for r in rows]),
        ("spiroplanck", nodes, [float(r[3]) for r in rows]),
    ]
    _write_text(
        outdir / "bench.svg",
        svgplot.line_chart_svg(series, "number of nodes", "control overhead (messages)"),
    )

    entries: dict[str, object] = {"command": "bench", "version": __version__}
    entries["bench.data"] = source
    entries["output.csv"] = "bench_table.csv"
    entries["output.svg"] = "bench.svg"
    _write_manifest(outdir, "bench.manifest", entries)

    print(f"bench: {len(rows)} rows from {source}")
    return EXIT_OK


# ---------------------------------------------------------------------- main


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", metavar="TOML", help="TOML config file with defaults")
    sub.add_argument(
        "--from-manifest",
        dest="from_manifest",
        metavar="FILE",
        help="replay a previous run from its manifest",
    )
    sub.add_argument(
        "--outdir", default=".", metavar="DIR", help="output directory, created if missing"
    )


def _add_field(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--side", type=float, help="field side length in meters")
    sub.add_argument("--range", type=float, help="per-node sensing range in meters")


def _add_curve(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--outer-radius", type=float, help="fixed circle radius")
    sub.add_argument("--rolling-radius", type=float, help="rolling circle radius")
    sub.add_argument("--pen-offset", type=float, help="pen offset from the rolling center")
    sub.add_argument("--t-step", type=float, help="parameter step")
    sub.add_argument("--t-max", type=float, help="parameter sweep (default: one closure)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="spiroplanck",
        description="Curve-guided coverage planning with radiance diagnostics "
        "and a Monte Carlo validation oracle.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sub = commands.add_parser("spirograph", help="sample the pen trace to CSV and SVG")
    _add_curve(sub)
    _add_common(sub)
    sub.set_defaults(handler=cmd_spirograph)

    sub = commands.add_parser("plan", help="run the placement loop")
    _add_field(sub)
    _add_curve(sub)
    sub.add_argument("--threshold", type=float, help="isolation-probability stop threshold")
    sub.add_argument("--dedup-quantum", type=float, help="position dedup grid size")
    sub.add_argument("--temperature", type=float, help="diagnostic temperature in K")
    sub.add_argument(
        "--wavelength-scale", type=float, help="meters of diagnostic wavelength per density unit"
    )
    sub.add_argument("--max-iterations", type=int, help="iteration cap")
    sub.add_argument(
        "--select-policy", choices=[SEQUENTIAL, RANDOM], help="candidate selection policy"
    )
    sub.add_argument("--select-seed", type=int, help="seed for the random policy")
    sub.add_argument(
        "--strict", action="store_true", help="exit 3 if the loop does not converge"
    )
    _add_common(sub)
    sub.set_defaults(handler=cmd_plan)

    sub = commands.add_parser("planck", help="tabulate spectral radiance curves")
    sub.add_argument(
        "--temperature",
        dest="temperatures",
        type=float,
        action="append",
        metavar="KELVIN",
        help="temperature in K (repeatable)",
    )
    sub.add_argument("--grid-start", type=float, help="first wavelength in meters")
    sub.add_argument("--grid-stop", type=float, help="last wavelength in meters")
    sub.add_argument("--grid-step", type=float, help="wavelength step in meters")
    sub.add_argument("--form", choices=[RADIANCE, ENERGY_DENSITY], help="prefactor convention")
    sub.add_argument(
        "--constants", choices=sorted(_CONSTANT_SETS), help="physical constants set"
    )
    _add_common(sub)
    sub.set_defaults(handler=cmd_planck)

    sub = commands.add_parser("coverage", help="tabulate the coverage distributions")
    sub.add_argument("--nodes", type=int, help="node count")
    _add_field(sub)
    _add_common(sub)
    sub.set_defaults(handler=cmd_coverage)

    sub = commands.add_parser("montecarlo", help="run the simulation oracle")
    sub.add_argument("--nodes", type=int, help="node count")
    sub.add_argument("--trials", type=int, help="number of trials")
    sub.add_argument("--seed", type=int, help="master seed")
    sub.add_argument("--topology", choices=["torus", "bounded"], help="distance topology")
    sub.add_argument(
        "--backend",
        choices=["auto", "compiled", "python"],
        default="auto",
        help="trial kernel to use",
    )
    _add_field(sub)
    _add_common(sub)
    sub.set_defaults(handler=cmd_montecarlo)

    sub = commands.add_parser("bench", help="emit the reference overhead table and figure")
    sub.add_argument("--data", metavar="CSV", help="reference table (default: bundled)")
    _add_common(sub)
    sub.set_defaults(handler=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OutputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
