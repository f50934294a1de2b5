# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Click command-line interface for the delay-line test.

Exit codes: ``0`` success, ``1`` usage or configuration error, ``2``
structurally invalid pipeline, ``3`` at least one delay line failed its
verdict or a response pin never answered.
"""

import json
import logging
from contextlib import contextmanager

import click
from flask import has_app_context
from flask.cli import ScriptInfo

from .area import CellLibrary, area_report, dft_cost
from .config import get_setting
from .configfile import load_config
from .device import Device
from .errors import ConfigError, FaultError, ValidationError
from .faults import FaultSpec, apply_faults
from .model import validate as validate_pipeline
from .orchestrator import extract_all, failing_lines
from .report import build_report, write_report
from .sweep import monte_carlo_sweep, write_sweep_csv
from .tester import TesterModel, error_bounds
from .vcd import VcdDumpHook

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_FAULT = 3


class CommandFailed(click.ClickException):
    """Error reported to the user with a specific exit code."""

    def __init__(self, message, exit_code=EXIT_USAGE):
        """Initialize the error."""
        super().__init__(message)
        self.exit_code = exit_code


@contextmanager
def usage_exit_code():
    """Report click usage errors with exit code 1 instead of 2."""
    try:
        yield
    except click.UsageError as e:
        e.exit_code = EXIT_USAGE
        raise


@contextmanager
def handle_errors():
    """Turn library errors into :class:`CommandFailed`."""
    try:
        yield
    except (ConfigError, FaultError) as e:
        raise CommandFailed(str(e), EXIT_USAGE) from e
    except ValidationError as e:
        raise CommandFailed(str(e), EXIT_INVALID) from e
    except OSError as e:
        raise CommandFailed(f"{e.filename}: {e.strerror}", EXIT_USAGE) from e


class BladeGroup(click.Group):
    """Command group mapping usage errors to exit code 1."""

    def make_context(self, *args, **kwargs):
        """Create the group context."""
        with usage_exit_code():
            return super().make_context(*args, **kwargs)

    def invoke(self, ctx):
        """Resolve and run the subcommand."""
        with usage_exit_code():
            return super().invoke(ctx)


class ClickHandler(logging.Handler):
    """Send log records to stderr through click."""

    def emit(self, record):
        """Echo one record."""
        try:
            click.echo(self.format(record), err=True)
        except Exception:  # pragma: no cover
            self.handleError(record)


def configure_logging(verbose):
    """Attach the click handler to the package logger."""
    root = logging.getLogger("blade_dlt")
    if not any(isinstance(h, ClickHandler) for h in root.handlers):
        handler = ClickHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        root.addHandler(handler)
        root.propagate = False
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


class ResolutionRange(click.ParamType):
    """Tester resolutions as ``LO:HI[:STEP]``, ``LO:HI:xF`` or ``a,b,c``."""

    name = "resolutions"

    def convert(self, value, param, ctx):
        """Expand ``value`` into a sorted list of resolutions."""
        if isinstance(value, list):
            return value
        try:
            if ":" in value:
                resolutions = _expand_range(value)
            else:
                resolutions = [int(v) for v in value.split(",") if v.strip()]
        except ValueError:
            self.fail(f"{value!r} is not a resolution range.", param, ctx)
        if not resolutions:
            self.fail(f"{value!r} is an empty range.", param, ctx)
        if any(r <= 0 for r in resolutions):
            self.fail("Resolutions must be positive picoseconds.", param, ctx)
        return sorted(set(resolutions))


def _expand_range(text):
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(text)
    lo, hi = int(parts[0]), int(parts[1])
    step = parts[2] if len(parts) == 3 else "1"
    values = []
    if step.startswith("x"):
        factor = int(step[1:])
        if factor < 2 or lo <= 0:
            raise ValueError(text)
        r = lo
        while r <= hi:
            values.append(r)
            r *= factor
    else:
        step = int(step)
        if step <= 0:
            raise ValueError(text)
        values = list(range(lo, hi + 1, step))
    return values


def parse_override(ctx, param, value):
    """Parse repeated ``KEY=VAL`` options into a dict."""
    overrides = {}
    for item in value:
        key, sep, raw = item.partition("=")
        if not sep or not key:
            raise click.BadParameter(f"{item!r} is not KEY=VAL.")
        overrides[key.strip()] = raw.strip()
    return overrides


def _load(config_path, seed=None):
    config = load_config(config_path)
    if seed is not None:
        config = config.with_seed(seed)
    return config


seed_option = click.option(
    "--seed",
    type=int,
    envvar="BLADE_DLT_SEED",
    default=None,
    help="Random seed; overrides the config file.",
)

config_option = click.option(
    "-c",
    "--config",
    "config_path",
    required=True,
    type=click.Path(dir_okay=False),
    help="JSON pipeline configuration.",
)


#
# Delay-line test commands
#
@click.group(cls=BladeGroup)
@click.option("-v", "--verbose", is_flag=True, default=False)
@click.pass_context
def blade(ctx, verbose):
    """Blade delay-line test commands."""
    configure_logging(verbose)
    info = ctx.find_object(ScriptInfo)
    if info is not None and not has_app_context():
        ctx.with_resource(info.load_app().app_context())


@blade.command()
@config_option
def validate(config_path):
    """Validate a pipeline configuration."""
    with handle_errors():
        config = _load(config_path)
    result = validate_pipeline(config.pipeline)
    for warning in result.warnings:
        click.secho(f"warning: {warning}", fg="yellow")
    click.secho(f"Pipeline with {config.pipeline.n} stages is valid.", fg="green")


@blade.command()
@config_option
@click.option(
    "-o", "--output", required=True, type=click.Path(dir_okay=False), help="Report."
)
@click.option(
    "--vcd",
    "vcd_dir",
    type=click.Path(file_okay=False),
    help="Directory receiving one VCD file per measurement run.",
)
@click.option(
    "--fault",
    "fault_texts",
    multiple=True,
    metavar="KIND:IDX:OP:VAL",
    help="Inject a fault, e.g. delta_small:1:scale:1.2 or pin:Error1:stuck:0.",
)
@seed_option
@click.pass_context
def extract(ctx, config_path, output, vcd_dir, fault_texts, seed):
    """Measure every delay line and write a JSON report."""
    with handle_errors():
        config = _load(config_path, seed)
        faults = [FaultSpec.parse(text) for text in fault_texts]
        pipeline, stuck = apply_faults(config.pipeline, faults)
        device = Device(pipeline, config.parasitics, config.tester, stuck_pins=stuck)
        hooks = [VcdDumpHook(vcd_dir, pipeline)] if vcd_dir else []

        click.secho(
            f"Extracting delays of {pipeline.n} stages...", fg="yellow", bold=True
        )
        report = extract_all(
            device,
            t0=get_setting("BLADE_DLT_T0_PS"),
            hooks=hooks,
            timing=config.timing_spec(),
        )
        bounds = None
        if not config.tester.ideal:
            bounds = error_bounds(pipeline, config.tester)
        document = build_report(config, report, bounds, fault_texts)
        write_report(output, document)

    for warning in report.warnings:
        click.secho(f"warning: {warning}", fg="yellow")
    for fault in report.faults:
        click.secho(f"fault: {fault}", fg="red")
    failing = failing_lines(report.verdicts)
    for kind, i in failing:
        click.secho(
            f"{kind.value}[{i}]: {report.verdicts[(kind, i)].value}",
            fg="red",
            bold=True,
        )
    click.echo(f"Report written to {output}")
    if failing or report.faults:
        ctx.exit(EXIT_FAULT)
    click.secho("All delay lines within tolerance.", fg="green")


@blade.command()
@config_option
@click.option(
    "--resolutions",
    required=True,
    type=ResolutionRange(),
    help="LO:HI[:STEP], LO:HI:xF or a comma list, in ps.",
)
@click.option("--trials", required=True, type=click.IntRange(min=1))
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@click.option("--workers", type=click.IntRange(min=1), default=None)
@seed_option
def sweep(config_path, resolutions, trials, output, workers, seed):
    """Monte-Carlo sweep of the quantization error over tester resolutions."""
    with handle_errors():
        config = _load(config_path, seed)
        if workers is None:
            workers = get_setting("BLADE_DLT_SWEEP_WORKERS")
        results = []
        click.secho(
            f"Sweeping {len(resolutions)} resolutions, {trials} trials each",
            fg="yellow",
            bold=True,
        )
        with click.progressbar(resolutions, label="resolution") as bar:
            for r in bar:
                tester = TesterModel(r, config.tester.rounding)
                results.append(
                    monte_carlo_sweep(
                        config.pipeline,
                        tester,
                        trials,
                        seed=config.seed,
                        workers=workers,
                        parasitics=config.parasitics,
                    )
                )
        with click.open_file(output, "w") as fp:
            write_sweep_csv(results, fp)

    for result in results:
        if not result.contained:
            click.secho(
                f"r={result.resolution}: errors outside the interval bounds",
                fg="red",
            )
    click.secho(f"Sweep written to {output}", fg="green")


@blade.command()
@click.option("-n", "stages", required=True, type=click.IntRange(min=1))
@click.option(
    "--override",
    "overrides",
    multiple=True,
    callback=parse_override,
    metavar="KEY=VAL",
    help="Override a cell library figure, e.g. a_nin_or=3.1.",
)
@click.option("--bits", type=int, default=32, show_default=True)
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, allow_dash=True),
    default="-",
    show_default=True,
    help="JSON output; the table goes to stderr when this is stdout.",
)
def area(stages, overrides, bits, output):
    """Area overhead of the DfT for an N stage pipeline."""
    try:
        lib = CellLibrary.from_config(**overrides)
        report = area_report(stages, lib)
        cost = dft_cost(stages, bits, lib)
    except ValidationError as e:
        raise CommandFailed(str(e), EXIT_USAGE) from e

    err = output == "-"
    click.echo(f"Stages:            {report.n}", err=err)
    click.echo(f"Area with DfT:     {report.area_with_test:g} µm²", err=err)
    click.echo(f"Area without DfT:  {report.area_without_test:g} µm²", err=err)
    click.secho(f"Overhead:          {report.overhead:.2f}%", bold=True, err=err)
    click.echo(f"SQFs ({bits}-bit):    {cost.sqf_count}", err=err)
    click.echo(f"Extra transistors: {cost.transistor_delta}", err=err)

    document = {
        "area": report.to_dict(),
        "bits_per_stage": bits,
        "cell_library": lib.to_dict(),
        "dft_cost": {
            "sqf_count": cost.sqf_count,
            "transistor_delta": cost.transistor_delta,
        },
    }
    with handle_errors():
        with click.open_file(output, "w", encoding="utf-8") as fp:
            fp.write(json.dumps(document, indent=2, sort_keys=True) + "\n")
