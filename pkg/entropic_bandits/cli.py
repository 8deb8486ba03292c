# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""
Command line entry point.

    entropic-bandits simulate --config experiment.json [--out DIR] [--seed N]
                              [--runs N] [--horizon N]
    entropic-bandits theory   --config experiment.json [--out DIR]
    entropic-bandits validate

Exit codes: 0 on success (a theory report with flagged arms is a success),
1 when an invariant check fails, 2 for invalid configurations and I/O
errors.
"""

# Standard library imports
import argparse
import logging
import sys

from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

# Third-party imports
import orjson

from opentelemetry import trace
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import ConsoleSpanExporter, SimpleSpanProcessor

# Local/package imports
from entropic_bandits import __version__
from entropic_bandits.decoders.config_decoder import ConfigDecoder
from entropic_bandits.encoders.base import Encoder
from entropic_bandits.encoders.csv_encoder import CSVEncoder
from entropic_bandits.encoders.json_encoder import JSONEncoder
from entropic_bandits.encoders.plot_data_encoder import PlotDataEncoder
from entropic_bandits.exceptions import BanditError, ConfigError
from entropic_bandits.models.config import ExperimentConfig, OutputConfig
from entropic_bandits.models.summary import PolicySummary, SimulationSummary
from entropic_bandits.policies import build_policy
from entropic_bandits.posterior import update
from entropic_bandits.simulator import pull_rates, regret_vs_theory, run_many
from entropic_bandits.theory import build_theory_report
from entropic_bandits.validation import UpdateFn, run_invariant_suite

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

REGRET_CSV = "regret.csv"
SUMMARY_JSON = "summary.json"
PLOT_DATA = "regret_plot.dat"
THEORY_JSON = "theory.json"

# Attributes every LogRecord has; anything else came in through ``extra``
_RECORD_FIELDS = frozenset(
    logging.LogRecord("", logging.INFO, "", 0, "", (), None).__dict__
) | {"message", "asctime"}


class JsonLogFormatter(logging.Formatter):
    """One JSON object per record with level, logger, message and extras."""

    def format(self, record: logging.LogRecord) -> str:
        payload: Dict[str, Any] = {
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        for key, value in record.__dict__.items():
            if key not in _RECORD_FIELDS:
                payload[key] = value
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return orjson.dumps(payload, default=str).decode()


def configure_logging(level: str) -> None:
    """Send the package's logs to stderr as JSON lines."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(JsonLogFormatter())
    package_logger = logging.getLogger("entropic_bandits")
    package_logger.handlers = [handler]
    package_logger.setLevel(level.upper())


def configure_tracing() -> TracerProvider:
    """Export spans to stderr."""
    provider = TracerProvider(
        resource=Resource.create(
            {"service.name": "entropic-bandits", "service.version": __version__}
        )
    )
    provider.add_span_processor(SimpleSpanProcessor(ConsoleSpanExporter(out=sys.stderr)))
    trace.set_tracer_provider(provider)
    return provider


def _output_directory(config: ExperimentConfig) -> Path:
    directory = Path(config.output.directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ConfigError(
            f"cannot create {directory}: {exc.strerror or exc}", field="output.directory"
        ) from exc
    return directory


def _write(encoder: Encoder[Any, Any], model: Any, path: Path) -> Path:
    try:
        size = encoder.write(model, path)
    except OSError as exc:
        raise ConfigError(
            f"cannot write {path}: {exc.strerror or exc}", field="output.directory"
        ) from exc
    logger.info("Wrote output file", extra={"path": str(path), "bytes": size})
    return path


@tracer.start_as_current_span("Cli.simulate")
def cmd_simulate(config: ExperimentConfig) -> List[Path]:
    """
    Simulate every configured policy and write the result files.

    Writes ``regret.csv`` (per-checkpoint table), ``summary.json``
    (configuration, theory report and per-policy statistics) and
    ``regret_plot.dat`` (per-round mean and std regret).

    Returns:
        Paths of the written files
    """
    instance = config.instance
    span = trace.get_current_span()
    span.set_attribute("bandit.arms", instance.n_arms)
    span.set_attribute("bandit.gamma", instance.gamma)
    directory = _output_directory(config)

    report = build_theory_report(instance, config.xi_selection, config.witness_epsilon)
    checkpoints = config.resolved_checkpoints
    aggregates = []
    for policy_config in config.policies:
        policy = build_policy(policy_config.name, instance.gamma, **policy_config.params)
        aggregates.append(
            run_many(
                instance,
                policy,
                config.horizon,
                config.n_runs,
                config.root_seed,
                checkpoints,
                config.workers,
            )
        )
    comparison = [
        row
        for aggregate in aggregates
        for row in regret_vs_theory(aggregate, report, checkpoints)
    ]
    rates = [row for aggregate in aggregates for row in pull_rates(aggregate, report)]
    summary = SimulationSummary(
        config=config,
        theory=report,
        policies=tuple(PolicySummary.from_aggregate(a) for a in aggregates),
        comparison=tuple(comparison),
        pull_rates=tuple(rates),
    )
    return [
        _write(CSVEncoder(), comparison, directory / REGRET_CSV),
        _write(JSONEncoder(), summary, directory / SUMMARY_JSON),
        _write(PlotDataEncoder(), aggregates, directory / PLOT_DATA),
    ]


@tracer.start_as_current_span("Cli.theory")
def cmd_theory(config: ExperimentConfig) -> Path:
    """
    Write the theory report of the configured instance to ``theory.json``.

    Infeasible arms and out-of-range xi_gamma values are reported as flags.
    """
    directory = _output_directory(config)
    report = build_theory_report(
        config.instance, config.xi_selection, config.witness_epsilon
    )
    if not report.complete:
        logger.warning(
            "Theory report is incomplete",
            extra={"infeasible_arms": [a.arm_index for a in report.arms if not a.feasible]},
        )
    return _write(JSONEncoder(), report, directory / THEORY_JSON)


@tracer.start_as_current_span("Cli.validate")
def cmd_validate(update_fn: UpdateFn = update, seed: int = 0) -> int:
    """
    Run the invariant suite and print one line per check.

    Returns:
        0 when every check passes, 1 otherwise
    """
    results = run_invariant_suite(update_fn=update_fn, seed=seed)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}: {result.detail}")
    return EXIT_OK if all(result.passed for result in results) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with the simulate, theory and validate commands."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="experiment JSON document")
    common.add_argument("--out", type=str, help="output directory")
    common.add_argument("--seed", type=int, help="root seed (unsigned 64-bit)")
    common.add_argument("--runs", type=int, help="episodes per policy")
    common.add_argument("--horizon", type=int, help="rounds per episode")
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        type=str.upper,
        help="log level for JSON logs on stderr (default: WARNING)",
    )
    common.add_argument(
        "--trace", action="store_true", help="print OpenTelemetry spans to stderr"
    )

    parser = argparse.ArgumentParser(
        prog="entropic-bandits",
        description="Entropic-risk Gaussian bandits: simulation and regret theory.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser(
        "simulate", parents=[common], help="run Monte Carlo experiments"
    )
    commands.add_parser("theory", parents=[common], help="write the theory report")
    commands.add_parser("validate", parents=[common], help="run the invariant suite")
    return parser


def load_config(args: argparse.Namespace) -> ExperimentConfig:
    """
    Read the configuration named by ``--config`` and apply flag overrides.

    Raises:
        ConfigError: If the file is missing, unreadable or invalid
    """
    if args.config is None:
        raise ConfigError("--config is required for this command", field="config")
    decoder = ConfigDecoder()
    config = decoder.decode_file(args.config)
    return decoder.apply_overrides(
        config,
        horizon=args.horizon,
        n_runs=args.runs,
        root_seed=args.seed,
        output=OutputConfig(directory=args.out) if args.out is not None else None,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    if args.trace:
        configure_tracing()
    try:
        if args.command == "validate":
            return cmd_validate()
        config = load_config(args)
        if args.command == "simulate":
            cmd_simulate(config)
        else:
            cmd_theory(config)
    except ConfigError as exc:
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BanditError as exc:
        logger.error("Command failed", extra={"command": args.command}, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
