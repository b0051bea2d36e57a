"""
The `selfmonitor` command: validate and score scenario files, simulate dialogues and fit SelfMonitor weights.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success, 2 invalid input, 3 unreadable or unwritable
file, 4 no informative observations to fit.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from typing_extensions import List, Optional, Sequence

from . import logger as package_logger
from .adapters.json_serializer import dumps_record, dumps_records
from .adapters.observation_file import read_observations, write_observations
from .adapters.scenario_file import load_scenario
from .decision import SelfMonitor, Weights, format_decimal, render_table
from .estimation import (
    NoInformativeObservations,
    FitResult,
    fit_grid,
    fit_gradient,
    detect_weight_shift,
    generate_synthetic_observations,
)
from .simulation import run
from .utils import DataclassException

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_IO_ERROR = 3
EXIT_NOT_INFORMATIVE = 4

TABLE_FORMAT = "table"
MACHINE_FORMAT = "machine"


def _add_format(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--format",
        choices=[TABLE_FORMAT, MACHINE_FORMAT],
        default=TABLE_FORMAT,
        help="aligned table with 4 decimals, or JSON Lines with full precision",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="selfmonitor",
        description="Score dialogue moves by character and conversational type, simulate dialogues, fit weights.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="log debug messages to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", parents=[common], help="check a scenario file")
    validate.add_argument("path", type=Path)

    score = commands.add_parser("score", parents=[common], help="score the move space of an agent")
    score.add_argument("path", type=Path)
    score.add_argument("--agent", help="the scoring agent, defaults to the first agent")
    score.add_argument(
        "--state",
        help="the state of the active conversational type, defaults to its init state "
        "or else the first state the agent has moves for",
    )
    _add_format(score)

    simulate = commands.add_parser("simulate", parents=[common], help="simulate the dialogue of a scenario")
    simulate.add_argument("path", type=Path)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--trace", type=Path, help="write the trace as JSON Lines to this file")
    _add_format(simulate)

    fit = commands.add_parser("fit", parents=[common], help="fit SelfMonitor weights to observed choices")
    fit.add_argument("path", type=Path)
    fit.add_argument("--method", choices=["grid", "gradient"], default="grid")
    fit.add_argument("--step", type=float, default=0.02, help="grid step of the grid method")
    fit.add_argument(
        "--prior",
        type=float,
        default=None,
        metavar="CONCENTRATION",
        help="add a symmetric Dirichlet log-prior with this concentration (>= 1)",
    )
    fit.add_argument(
        "--window",
        type=int,
        default=None,
        help="refit disjoint windows of this many observations and report weight shifts",
    )
    _add_format(fit)

    synthesize = commands.add_parser(
        "synthesize", parents=[common], help="write choices sampled under planted weights to an observation file"
    )
    synthesize.add_argument("path", type=Path)
    synthesize.add_argument(
        "--planted", type=float, nargs=3, default=[0.1, 0.1, 0.8], metavar=("ALPHA", "BETA", "GAMMA")
    )
    synthesize.add_argument("--count", type=int, default=500)
    synthesize.add_argument("--seed", type=int, default=0)
    synthesize.add_argument("--jitter", type=float, default=1.0)
    return parser


def cmd_validate(args) -> int:
    load_scenario(args.path)
    print("OK")
    return EXIT_OK


def cmd_score(args) -> int:
    scenario = load_scenario(args.path)
    agent = scenario.agent(args.agent) if args.agent else scenario.agents[0]
    state = scenario.initial_states()[agent.name]
    ct = state.active_type
    conv_state = args.state
    if conv_state is None:
        conv_state = ct.init_state
        if not agent.move_space(conv_state) and agent.move_spaces:
            conv_state = next(iter(agent.move_spaces))
    ct.ensure_state(conv_state)
    moves = agent.move_space(conv_state)
    if not moves:
        raise DataclassException(message=f"'{agent.name}' has no moves in state '{conv_state}'.")
    space = SelfMonitor(agent.weights, agent.policy).evaluate(
        [m.to_candidate(ct, conv_state) for m in moves],
        state.private.self_character,
        state.private.other_character,
        state.conv_prob,
    )
    if args.format == MACHINE_FORMAT:
        sys.stdout.write(space.to_json_lines())
    else:
        print(f"{agent.name} in '{conv_state}' of '{ct.name}' (conv-prob {format_decimal(state.conv_prob)})")
        sys.stdout.write(space.to_table())
    return EXIT_OK


def cmd_simulate(args) -> int:
    scenario = load_scenario(args.path)
    trace = run(scenario, seed=args.seed)
    lines = trace.to_json_lines()
    if args.trace is not None:
        args.trace.write_text(lines, encoding="utf-8")
    if args.format == MACHINE_FORMAT:
        sys.stdout.write(lines)
    else:
        sys.stdout.write(trace.transcript())
    return EXIT_OK


def _fit_rows(results: Sequence[FitResult]) -> List[List[str]]:
    return [
        [
            *(format_decimal(v) for v in result.weights.as_tuple()),
            format_decimal(result.log_likelihood),
            str(result.identifiable).lower(),
            str(result.converged).lower(),
        ]
        for result in results
    ]


FIT_COLUMNS = ("alpha", "beta", "gamma", "log_likelihood", "identifiable", "converged")


def cmd_fit(args) -> int:
    observations = read_observations(args.path)
    if args.window is not None:
        windows = detect_weight_shift(observations, args.window, args.step)
        if args.format == MACHINE_FORMAT:
            sys.stdout.write(dumps_records(windows))
            return EXIT_OK
        rows = []
        for window in windows:
            if window.fit is None:
                rows.append([f"{window.start}-{window.stop}", "-", "-", "-", "-", "-", "-", "-"])
                continue
            rows.append(
                [
                    f"{window.start}-{window.stop}",
                    *_fit_rows([window.fit])[0],
                    "yes" if window.weight_shift else "no",
                ]
            )
        sys.stdout.write(render_table(("window", *FIT_COLUMNS, "shift"), rows))
        return EXIT_OK

    if args.method == "gradient":
        result = fit_gradient(observations, dirichlet_concentration=args.prior)
    else:
        result = fit_grid(observations, args.step, dirichlet_concentration=args.prior)
    if args.format == MACHINE_FORMAT:
        print(dumps_record(result))
    else:
        sys.stdout.write(render_table(FIT_COLUMNS, _fit_rows([result])))
    return EXIT_OK


def cmd_synthesize(args) -> int:
    planted = Weights.from_sequence(args.planted, normalize=True)
    observations = generate_synthetic_observations(planted, args.count, args.seed, args.jitter)
    write_observations(args.path, observations)
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "score": cmd_score,
    "simulate": cmd_simulate,
    "fit": cmd_fit,
    "synthesize": cmd_synthesize,
}


def _configure_logging(verbose: bool):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return handler


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    :param argv: The command line arguments without the program name, defaults to sys.argv.
    :return: The exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INVALID_INPUT
    previous_level = package_logger.level
    handler = _configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except NoInformativeObservations as e:
        print(e.message, file=sys.stderr)
        return EXIT_NOT_INFORMATIVE
    except DataclassException as e:
        print(e.message, file=sys.stderr)
        return EXIT_INVALID_INPUT
    except OSError as e:
        print(f"Cannot access {e.filename or 'file'}: {e.strerror or e}", file=sys.stderr)
        return EXIT_IO_ERROR
    finally:
        package_logger.removeHandler(handler)
        package_logger.setLevel(previous_level)


def run_cli():
    sys.exit(main())


if __name__ == "__main__":
    run_cli()
