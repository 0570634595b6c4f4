#!/usr/bin/env python
import argparse
import logging
import sys

import yaml

from jostlab import valid_file
from jostlab.cli import runner

description = """
Numerical experiments on Jost functions of Jacobi matrices. Each subcommand
reads a parameter file (JSON or YAML) describing a_n, b_n as a finite head
plus a tail, runs one computation and writes a JSON or CSV report.
Exit status is 0 on success, 1 on invalid input and 2 on numeric failure.
"""

_POINT_HELP = 'Spectral parameter inside the unit disk, e.g. "0.4+0i"'

_SUBCOMMANDS = {
    "check-conditions": "Partial sums and verdicts for the summability conditions",
    "m": "The m-function M(z)",
    "spectrum": "Eigenvalues outside [-2, 2]",
    "gc": "Jost function as the limit of the coupled (c_n, g_n) recursion",
    "jost": "Jost function by a chosen method",
    "cross-validate": "All Jost function routes on a grid of points",
    "boundary-l2": "L2 distance between p_n and its Jost comparand",
    "survey9": "Bound state survey of the sparse-block family",
    "sumrule": "Residual of the step-by-step sum rule",
}


def _add_common(parser):
    parser.add_argument(
        "--params", type=valid_file, help="Path to the parameter file",
    )
    parser.add_argument("--tol", type=float, help="Convergence tolerance")
    parser.add_argument("--max-n", dest="max_n", type=int)
    parser.add_argument("--horizon", type=int)
    parser.add_argument("--output", "-o", help="Report path, - for stdout")
    parser.add_argument("--format", choices=("json", "csv"))
    parser.add_argument(
        "--log-level",
        "-l",
        required=False,
        default="WARNING",
        type=logging.getLevelName,
    )


def create_parser():
    parser = argparse.ArgumentParser(description=description)
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True
    commands = {}
    for name, help_text in _SUBCOMMANDS.items():
        commands[name] = subparsers.add_parser(name, help=help_text)
        _add_common(commands[name])

    for name in ("m", "gc", "jost", "sumrule"):
        commands[name].add_argument("--z", required=True, help=_POINT_HELP)
    commands["m"].add_argument("--depth", type=int)
    commands["spectrum"].add_argument(
        "--trunc", help="Increasing truncation sizes, e.g. 500,1000,2000"
    )
    commands["jost"].add_argument(
        "--method", choices=("weyl", "det2", "gc", "fact", "log-sum"), default="gc"
    )
    commands["jost"].add_argument("--n-trunc", dest="n_trunc", type=int)
    commands["jost"].add_argument("--quad-tol", dest="quad_tol", type=float)
    commands["cross-validate"].add_argument(
        "--grid",
        type=valid_file,
        required=True,
        help="JSON or YAML file with a list of points",
    )
    commands["cross-validate"].add_argument("--threads", type=int)
    commands["cross-validate"].add_argument(
        "--fact-tol", dest="fact_tol", type=float
    )
    commands["boundary-l2"].add_argument("--n", help="Degrees, e.g. 1,2,5-10")
    commands["boundary-l2"].add_argument("--quad-tol", dest="quad_tol", type=float)
    survey = commands["survey9"]
    survey.add_argument("--alpha", type=float)
    survey.add_argument("--p", type=float)
    survey.add_argument("--c1", type=float)
    survey.add_argument("--m0", type=int)
    survey.add_argument("--q", help="Exponents, e.g. 0.9,1.2,1.5")
    survey.add_argument("--trunc", help="Truncation sizes, e.g. 1000,2000,4000")
    commands["sumrule"].add_argument("--n", help="Stripping steps, e.g. 0,1")
    commands["sumrule"].add_argument("--quad-tol", dest="quad_tol", type=float)
    return parser


def _load_grid(path):
    with open(path, "r") as fin:
        return yaml.safe_load(fin) or []


def config_from_args(parsed_args):
    """Experiment configuration dict holding the options that were given."""
    config = {"command": parsed_args.command}
    for key in (
        "params",
        "z",
        "method",
        "n",
        "trunc",
        "q",
        "alpha",
        "p",
        "c1",
        "m0",
        "tol",
        "fact_tol",
        "quad_tol",
        "depth",
        "n_trunc",
        "max_n",
        "horizon",
        "threads",
    ):
        value = getattr(parsed_args, key, None)
        if value is not None:
            config[key] = value
    if getattr(parsed_args, "grid", None) is not None:
        config["grid"] = _load_grid(parsed_args.grid)
    output = {}
    if parsed_args.output is not None:
        output["path"] = parsed_args.output
    if parsed_args.format is not None:
        output["format"] = parsed_args.format
    if output:
        config["output"] = output
    return config


def main(args):
    parser = create_parser()
    parsed_args = parser.parse_args(args)
    logging.getLogger("jostlab").setLevel(parsed_args.log_level)
    return runner.run(config_from_args(parsed_args))


def main_entry_point():
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    main_entry_point()
