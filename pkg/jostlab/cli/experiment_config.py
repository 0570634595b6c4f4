# -*- coding: utf-8 -*-
import numbers
from collections.abc import Mapping
from copy import deepcopy

import configsuite
from configsuite import MetaKeys as MK
from configsuite import types

from jostlab.exceptions import ValidationError
from jostlab.recursions.disk import DiskPoint

COMMANDS = (
    "check-conditions",
    "m",
    "spectrum",
    "gc",
    "jost",
    "cross-validate",
    "boundary-l2",
    "survey9",
    "sumrule",
)
JOST_METHODS = ("weyl", "det2", "gc", "fact", "log-sum")
FORMATS = ("json", "csv")
POINT_COMMANDS = ("m", "gc", "jost", "sumrule")

DEFAULT_Q = [0.9, 1.2, 1.5]
DEFAULT_SURVEY_TRUNC = [1000, 2000, 4000]
DEFAULT_L2_N = [1, 2, 5, 10, 20, 50, 100, 200]
DEFAULT_SUMRULE_N = [0]
DEFAULT_TOL = 1e-10
COMMAND_TOL = {"check-conditions": 1e-8, "spectrum": 1e-8, "cross-validate": 1e-6}


@configsuite.validator_msg("Unknown command")
def _known_command(value):
    return value in COMMANDS


@configsuite.validator_msg("Method must be one of weyl, det2, gc, fact, log-sum")
def _known_method(value):
    return value in JOST_METHODS


@configsuite.validator_msg("Format must be json or csv")
def _known_format(value):
    return value in FORMATS


@configsuite.validator_msg("Must be > 0")
def _is_positive(value):
    return value > 0


@configsuite.validator_msg("Must be >= 0")
def _min_value(value):
    return value >= 0


@configsuite.validator_msg("Expected a complex number a+bi with |z| <= 1")
def _is_disk_point(value):
    try:
        DiskPoint.parse(value)
    except ValueError:
        return False
    return True


def _field(container, key):
    if isinstance(container, Mapping):
        return container.get(key)
    return getattr(container, key, None)


@configsuite.validator_msg("grid nonempty")
def _grid_nonempty(config):
    if _field(config, "command") != "cross-validate":
        return True
    grid = _field(config, "grid")
    return grid is not None and len(grid) > 0


@configsuite.validator_msg("params is required for this command")
def _params_given(config):
    if _field(config, "command") == "survey9":
        return True
    return _field(config, "params") is not None


@configsuite.validator_msg("z is required for this command")
def _z_given(config):
    command = _field(config, "command")
    return command not in POINT_COMMANDS or _field(config, "z") is not None


_num_convert_msg = "Will go through the input and try to convert to list of int"


@configsuite.transformation_msg(_num_convert_msg)
def _to_int_list(value):
    value = deepcopy(value)
    if isinstance(value, numbers.Integral):
        return [value]
    elif isinstance(value, (list, tuple)):
        value = ",".join([str(x) for x in value])
    return _realize_list(value)


@configsuite.transformation_msg("Convert ranges and singletons into list")
def _realize_list(input_string):
    """Expand a comma separated string of singletons and ranges into a list
    of ints: _realize_list('1,2,4-7,14-15') -> [1, 2, 4, 5, 6, 7, 14, 15].
    Non-strings are returned unchanged.
    """
    if not isinstance(input_string, str):
        return input_string
    real_list = []
    for elem in input_string.split(","):
        bounds = elem.split("-")
        if len(bounds) == 1:
            real_list.append(int(elem))
        elif len(bounds) == 2:
            lower_bound = int(bounds[0])
            upper_bound = int(bounds[1]) + 1

            if lower_bound > upper_bound:
                err_msg = "Lower bound of range expected to be smaller then upper bound"
                raise ValueError(err_msg)

            real_list += range(lower_bound, upper_bound)
        else:
            raise ValueError("Expected at most one '-' in an element")

    return real_list


@configsuite.transformation_msg("Convert comma separated numbers into a list")
def _to_float_list(value):
    if isinstance(value, numbers.Real):
        return [value]
    if isinstance(value, str):
        return [float(elem) for elem in value.split(",")]
    return deepcopy(value)


@configsuite.transformation_msg("Convert grid points to strings")
def _to_point_strings(value):
    if isinstance(value, (list, tuple)):
        return [elem if isinstance(elem, str) else str(complex(elem)) for elem in value]
    return deepcopy(value)


def _int_list():
    return {
        MK.Required: False,
        MK.Type: types.List,
        MK.LayerTransformation: _to_int_list,
        MK.Content: {
            MK.Item: {MK.Type: types.Integer, MK.ElementValidators: (_min_value,)}
        },
    }


def _positive_number():
    return {
        MK.Required: False,
        MK.Type: types.Number,
        MK.ElementValidators: (_is_positive,),
    }


def _positive_integer():
    return {
        MK.Required: False,
        MK.Type: types.Integer,
        MK.ElementValidators: (_is_positive,),
    }


def build_schema():
    return {
        MK.Type: types.NamedDict,
        MK.Description: "One jostlab experiment: a command and its options",
        MK.ElementValidators: (_grid_nonempty, _params_given, _z_given),
        MK.Content: {
            "command": {
                MK.Required: True,
                MK.Type: types.String,
                MK.ElementValidators: (_known_command,),
            },
            "params": {
                MK.Required: False,
                MK.Type: types.String,
                MK.Description: "Path to a JSON or YAML parameter file",
            },
            "z": {
                MK.Required: False,
                MK.Type: types.String,
                MK.ElementValidators: (_is_disk_point,),
            },
            "grid": {
                MK.Required: False,
                MK.Type: types.List,
                MK.LayerTransformation: _to_point_strings,
                MK.Content: {
                    MK.Item: {
                        MK.Type: types.String,
                        MK.ElementValidators: (_is_disk_point,),
                    }
                },
            },
            "method": {
                MK.Required: False,
                MK.Type: types.String,
                MK.ElementValidators: (_known_method,),
            },
            "n": _int_list(),
            "trunc": _int_list(),
            "q": {
                MK.Required: False,
                MK.Type: types.List,
                MK.LayerTransformation: _to_float_list,
                MK.Content: {
                    MK.Item: {
                        MK.Type: types.Number,
                        MK.ElementValidators: (_is_positive,),
                    }
                },
            },
            "alpha": _positive_number(),
            "p": _positive_number(),
            "c1": _positive_number(),
            "m0": _positive_integer(),
            "tol": _positive_number(),
            "fact_tol": _positive_number(),
            "quad_tol": _positive_number(),
            "quad_panels": _positive_integer(),
            "depth": _positive_integer(),
            "n_trunc": _positive_integer(),
            "max_n": _positive_integer(),
            "horizon": _positive_integer(),
            "threads": _positive_integer(),
            "output": {
                MK.Required: False,
                MK.Type: types.NamedDict,
                MK.Content: {
                    "path": {MK.Required: False, MK.Type: types.String},
                    "format": {
                        MK.Required: False,
                        MK.Type: types.String,
                        MK.ElementValidators: (_known_format,),
                    },
                },
            },
        },
    }


def get_default_values():
    """Defaults for every scalar option except tol. List options and tol
    are filled in per command by the runner."""
    return {
        "method": "gc",
        "alpha": 0.51,
        "p": 0.35,
        "c1": 0.1,
        "m0": 20,
        "fact_tol": 1e-4,
        "quad_tol": 1e-10,
        "quad_panels": 64,
        "depth": 2000,
        "n_trunc": 200,
        "max_n": 100000,
        "horizon": 100000,
        "threads": 1,
        "output": {"path": "-", "format": "json"},
    }


def command_tol(config):
    """config.tol if given, else the default of config.command."""
    if config.tol is not None:
        return config.tol
    return COMMAND_TOL.get(config.command, DEFAULT_TOL)


def load_experiment_config(config_dict):
    """Validated snapshot of an experiment configuration.

    :raises ValidationError: if the configuration is invalid.
    """
    config = configsuite.ConfigSuite(
        config_dict, build_schema(), layers=(get_default_values(),)
    )
    if not config.valid:
        raise ValidationError("Invalid experiment configuration", config.errors)
    return config.snapshot
