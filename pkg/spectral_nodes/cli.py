"""Reproducible experiment runs emitting CSV or JSON.

`run` is the library entry point and returns an exit code: 0 on success, 2 when the options
are invalid, 1 when a computation fails. The `spectral` management command and the
`spectral-nodes` console script are thin wrappers around it.
"""
import csv
import enum
import io
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from spectral_nodes import config, diffmat, interp, volterra
from spectral_nodes.exceptions import ConfigurationError, SpectralNodesError
from spectral_nodes.functions import functions, problems
from spectral_nodes.nodes import NodeFamily, generate


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_VALIDATION = 2

TABLE_FAMILIES = (NodeFamily.EQUI, NodeFamily.CGL, NodeFamily.SCALED_CHEB)


class Subcommand(enum.Enum):
    NODES = "nodes"
    LEBESGUE = "lebesgue"
    LEBESGUE_TABLE = "lebesgue-table"
    INTERP_ERROR = "interp-error"
    DIFFMAT = "diffmat"
    DIFF_ERROR = "diff-error"
    VOLTERRA = "volterra"


class OutputFormat(enum.Enum):
    CSV = "csv"
    JSON = "json"


_FLAGS = {
    "family": "--family",
    "s": "--s",
    "function_id": "--function",
    "problem_id": "--problem",
}

_REQUIRED = {
    Subcommand.NODES: ("family", "s"),
    Subcommand.LEBESGUE: ("family", "s"),
    Subcommand.LEBESGUE_TABLE: (),
    Subcommand.INTERP_ERROR: ("family", "s", "function_id"),
    Subcommand.DIFFMAT: ("family", "s"),
    Subcommand.DIFF_ERROR: ("family", "s", "function_id"),
    Subcommand.VOLTERRA: ("family", "s", "problem_id"),
}


@dataclass(frozen=True)
class RunConfig:
    subcommand: Subcommand
    family: Optional[NodeFamily] = None
    s: Optional[int] = None
    function_id: Optional[str] = None
    problem_id: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV
    output: Optional[Path] = None
    grid: int = field(default_factory=config.default_grid)
    emit_function: bool = False
    explicit_cgl: bool = False
    interval_end: float = 1.0

    @classmethod
    def from_options(cls, subcommand, **options):
        """Build a config from raw option values, naming the flag of any unparsable value."""
        values = {"subcommand": _parse_enum(Subcommand, subcommand, "subcommand")}
        if options.get("family") is not None:
            values["family"] = _parse_enum(NodeFamily, options["family"], "--family")
        if options.get("format") is not None:
            values["format"] = _parse_enum(OutputFormat, options["format"], "--format")
        if options.get("output"):
            values["output"] = Path(options["output"])
        if options.get("grid") is not None:
            values["grid"] = int(options["grid"])
        if options.get("interval_end") is not None:
            values["interval_end"] = float(options["interval_end"])
        for name in ("s", "function_id", "problem_id"):
            if options.get(name) is not None:
                values[name] = options[name]
        for name in ("emit_function", "explicit_cgl"):
            values[name] = bool(options.get(name, False))
        return cls(**values)


@dataclass(frozen=True)
class Dataset:
    columns: tuple
    rows: list
    meta: dict


def validate(run_config):
    for name in _REQUIRED[run_config.subcommand]:
        if getattr(run_config, name) is None:
            raise ConfigurationError(
                _FLAGS[name], f"required by '{run_config.subcommand.value}'"
            )

    if run_config.family is not None and run_config.s is not None:
        try:
            run_config.family.check(run_config.s)
        except SpectralNodesError as err:
            raise ConfigurationError("--s", str(err)) from err

    if run_config.grid < 2:
        raise ConfigurationError("--grid", f"must be at least 2, got {run_config.grid}")
    if run_config.function_id is not None and not functions.is_registered(run_config.function_id):
        raise ConfigurationError(
            "--function",
            f"unknown id '{run_config.function_id}' (choose from {_choices(functions)})",
        )
    if run_config.problem_id is not None and not problems.is_registered(run_config.problem_id):
        raise ConfigurationError(
            "--problem", f"unknown id '{run_config.problem_id}' (choose from {_choices(problems)})"
        )
    if run_config.explicit_cgl and run_config.family is not NodeFamily.CGL:
        raise ConfigurationError("--explicit-cgl", "only available with --family cgl")
    if run_config.subcommand is Subcommand.VOLTERRA:
        if not run_config.interval_end > 0.0:
            raise ConfigurationError("--interval-end", "must be positive")
        if not run_config.family.includes_endpoints:
            raise ConfigurationError("--family", "Volterra collocation needs a node at t = 0")


def execute(run_config, stdout=None):
    """Validate, compute and write the dataset; library errors propagate."""
    validate(run_config)
    dataset = _BUILDERS[run_config.subcommand](run_config)
    text = render(dataset, run_config.format)

    if run_config.output is None:
        (stdout or sys.stdout).write(text)
    else:
        try:
            run_config.output.write_text(text)
        except OSError as err:
            message = f"cannot write {run_config.output}: {err.strerror}"
            raise ConfigurationError("--output", message) from err
    logger.info(
        "%s: wrote %d rows to %s",
        run_config.subcommand.value,
        len(dataset.rows),
        run_config.output or "stdout",
    )
    return dataset


def run(run_config, stdout=None, stderr=None):
    try:
        execute(run_config, stdout=stdout)
    except SpectralNodesError as err:
        (stderr or sys.stderr).write(f"error: {err}\n")
        return exit_code(err)
    return EXIT_OK


def exit_code(err):
    if isinstance(err, ConfigurationError):
        return EXIT_VALIDATION
    return EXIT_COMPUTATION


def main(argv=None):
    """Console script: `spectral-nodes <subcommand> [flags]`."""
    from django.conf import settings
    from django.core.management import execute_from_command_line

    if "DJANGO_SETTINGS_MODULE" not in os.environ and not settings.configured:
        settings.configure(INSTALLED_APPS=["spectral_nodes"])
    argv = sys.argv[1:] if argv is None else list(argv)
    execute_from_command_line(["spectral-nodes", "spectral", *argv])


def render(dataset, output_format):
    if OutputFormat(output_format) is OutputFormat.JSON:
        payload = {
            "meta": dataset.meta,
            "columns": list(dataset.columns),
            "rows": [dict(zip(dataset.columns, map(_json_value, row))) for row in dataset.rows],
        }
        return json.dumps(payload, indent=2) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(dataset.columns)
    for row in dataset.rows:
        writer.writerow([format_value(value) for value in row])
    return buffer.getvalue()


def format_value(value):
    """Shortest round-trip text for floats, without a trailing '.0' on integral values."""
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, float):
        text = repr(value)
        return text[:-2] if text.endswith(".0") else text
    return str(value)


def _json_value(value):
    if isinstance(value, enum.Enum):
        return value.value
    return value


def _nodes_dataset(run_config):
    nodes = generate(run_config.family, run_config.s)
    rows = [(i, float(node)) for i, node in enumerate(nodes)]
    return Dataset(("i", "node"), rows, _meta(run_config))


def _lebesgue_dataset(run_config):
    nodes = generate(run_config.family, run_config.s)
    if run_config.emit_function:
        curve = interp.lebesgue_function_curve(nodes, run_config.grid)
        return Dataset(("x", "F"), list(curve), _meta(run_config, grid=run_config.grid))

    report = interp.lebesgue_constant(nodes)
    row = (
        report.family,
        report.s,
        report.max_F,
        report.argmax,
        report.lambda_paper,
        report.lambda_conventional,
    )
    columns = ("family", "s", "max_F", "argmax", "lambda_paper", "lambda_conventional")
    return Dataset(columns, [row], _meta(run_config))


def _lebesgue_table_dataset(run_config):
    rows = []
    for family in TABLE_FAMILIES:
        for s in config.lebesgue_table_degrees():
            report = interp.lebesgue_constant(generate(family, s))
            rows.append((family, s, report.lambda_paper, report.lambda_conventional))
    meta = _meta(
        run_config,
        lambda_paper="max F - 1",
        lambda_conventional="max F",
    )
    return Dataset(("family", "s", "lambda_paper", "lambda_conventional"), rows, meta)


def _interp_error_dataset(run_config):
    nodes = generate(run_config.family, run_config.s)
    curve = interp.interp_error_curve(nodes, run_config.function_id, run_config.grid)
    meta = _meta(run_config, grid=run_config.grid, max_error=curve.max())
    return Dataset(("x", "error"), list(curve), meta)


def _diffmat_dataset(run_config):
    if run_config.explicit_cgl:
        matrix = diffmat.build_cgl_explicit(run_config.s)
    else:
        matrix = diffmat.build_general(generate(run_config.family, run_config.s))
    rows = [
        (i, j, float(matrix.entries[i, j])) for i in range(matrix.size) for j in range(matrix.size)
    ]
    meta = _meta(
        run_config,
        ordering=matrix.ordering.value,
        nodes=[float(point) for point in matrix.points],
    )
    return Dataset(("i", "j", "value"), rows, meta)


def _diff_error_dataset(run_config):
    curve = diffmat.derivative_error_at_nodes(
        run_config.family, run_config.s, run_config.function_id
    )
    rows = [(i, node, error) for i, (node, error) in enumerate(curve)]
    return Dataset(("i", "node", "error"), rows, _meta(run_config, max_error=curve.max()))


def _volterra_dataset(run_config):
    benchmark = problems.get(run_config.problem_id)
    solution, errors = volterra.benchmark_errors(
        benchmark, run_config.family, run_config.s, end=run_config.interval_end
    )
    if solution.condition_estimate > config.condition_warning():
        logger.warning(
            "condition estimate %.3g exceeds %.3g; nodal errors may be dominated by round-off",
            solution.condition_estimate,
            config.condition_warning(),
        )
    exact = benchmark.solution(solution.nodes.nodes)
    rows = [
        (i, float(node), float(value), float(truth), float(error))
        for i, (node, value, truth, error) in enumerate(
            zip(solution.nodes.nodes, solution.nodal_values, exact, errors.values)
        )
    ]
    meta = _meta(
        run_config,
        interval_end=run_config.interval_end,
        condition_estimate=solution.condition_estimate,
        residual=solution.residual,
        max_error=errors.max(),
    )
    return Dataset(("i", "node", "approximation", "exact", "error"), rows, meta)


def _meta(run_config, **extra):
    meta = {"subcommand": run_config.subcommand.value}
    if run_config.family is not None:
        meta["family"] = run_config.family.value
    if run_config.s is not None:
        meta["s"] = run_config.s
    if run_config.function_id is not None:
        meta["function"] = run_config.function_id
    if run_config.problem_id is not None:
        meta["problem"] = run_config.problem_id
    meta.update(extra)
    return meta


def _parse_enum(enum_class, value, flag):
    if isinstance(value, enum_class):
        return value
    try:
        return enum_class(value)
    except ValueError as err:
        choices = ", ".join(member.value for member in enum_class)
        raise ConfigurationError(flag, f"unknown value '{value}' (choose from {choices})") from err


def _choices(registry):
    return ", ".join(registry.names())


_BUILDERS = {
    Subcommand.NODES: _nodes_dataset,
    Subcommand.LEBESGUE: _lebesgue_dataset,
    Subcommand.LEBESGUE_TABLE: _lebesgue_table_dataset,
    Subcommand.INTERP_ERROR: _interp_error_dataset,
    Subcommand.DIFFMAT: _diffmat_dataset,
    Subcommand.DIFF_ERROR: _diff_error_dataset,
    Subcommand.VOLTERRA: _volterra_dataset,
}
