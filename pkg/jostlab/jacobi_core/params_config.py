# -*- coding: utf-8 -*-
"""Parameter files: JSON or YAML documents of the form

    {"a_head": [...], "b_head": [...], "tail": "free" | {"type": ...},
     "horizon": N}
"""
import logging
import os
from collections.abc import Mapping
from copy import deepcopy

import configsuite
import yaml
from configsuite import MetaKeys as MK
from configsuite import types

from jostlab.exceptions import ValidationError
from jostlab.jacobi_core import families
from jostlab.jacobi_core.params import FREE_TAIL, JacobiParams

logger = logging.getLogger(__name__)

TAIL_TYPES = ("free", "rank_one", "power", "section9")

_REQUIRED_TAIL_FIELDS = {
    "free": (),
    "rank_one": ("beta",),
    "power": ("exponent",),
    "section9": ("alpha", "p", "c1", "m0"),
}


@configsuite.validator_msg("a_n must be > 0")
def _is_positive(value):
    return value > 0


@configsuite.validator_msg("Horizon must be >= 1")
def _positive_horizon(value):
    return value >= 1


@configsuite.validator_msg("Tail type must be one of free, rank_one, power, section9")
def _known_tail(value):
    return value in TAIL_TYPES


@configsuite.validator_msg("Sign must be alternating or positive")
def _known_sign(value):
    return value in ("alternating", "positive")


@configsuite.validator_msg("Target must be a or b")
def _known_target(value):
    return value in ("a", "b")


def _field(container, key):
    if isinstance(container, Mapping):
        return container.get(key)
    return getattr(container, key, None)


@configsuite.validator_msg("Tail is missing fields required by its type")
def _tail_fields_present(tail):
    required = _REQUIRED_TAIL_FIELDS.get(_field(tail, "type"), ())
    return all(_field(tail, key) is not None for key in required)


@configsuite.transformation_msg("Expand a tail given as a bare type name")
def _expand_tail(value):
    if isinstance(value, str):
        return {"type": value}
    return deepcopy(value)


def _number_list():
    return {
        MK.Required: False,
        MK.Type: types.List,
        MK.Content: {MK.Item: {MK.Type: types.Number}},
    }


def build_schema():
    a_head = _number_list()
    a_head[MK.Content][MK.Item][MK.ElementValidators] = (_is_positive,)
    return {
        MK.Type: types.NamedDict,
        MK.Description: "Jacobi parameters: finite head plus tail descriptor",
        MK.Content: {
            "a_head": a_head,
            "b_head": _number_list(),
            "tail": {
                MK.Required: True,
                MK.Type: types.NamedDict,
                MK.LayerTransformation: _expand_tail,
                MK.ElementValidators: (_tail_fields_present,),
                MK.Content: {
                    "type": {
                        MK.Required: True,
                        MK.Type: types.String,
                        MK.ElementValidators: (_known_tail,),
                    },
                    "beta": {MK.Required: False, MK.Type: types.Number},
                    "a1": {
                        MK.Required: False,
                        MK.Type: types.Number,
                        MK.ElementValidators: (_is_positive,),
                    },
                    "exponent": {MK.Required: False, MK.Type: types.Number},
                    "sign": {
                        MK.Required: False,
                        MK.Type: types.String,
                        MK.ElementValidators: (_known_sign,),
                    },
                    "target": {
                        MK.Required: False,
                        MK.Type: types.String,
                        MK.ElementValidators: (_known_target,),
                    },
                    "scale": {MK.Required: False, MK.Type: types.Number},
                    "alpha": {MK.Required: False, MK.Type: types.Number},
                    "p": {MK.Required: False, MK.Type: types.Number},
                    "c1": {MK.Required: False, MK.Type: types.Number},
                    "m0": {MK.Required: False, MK.Type: types.Integer},
                },
            },
            "horizon": {
                MK.Required: False,
                MK.Type: types.Integer,
                MK.ElementValidators: (_positive_horizon,),
            },
        },
    }


def get_default_values():
    return {"horizon": families.DEFAULT_HORIZON}


def _tail_params(tail, horizon):
    kind = tail.type
    if kind == "free":
        return None
    if kind == "rank_one":
        return families.rank_one(tail.beta, 1.0 if tail.a1 is None else tail.a1)
    if kind == "power":
        return families.power_family(
            tail.exponent,
            sign=tail.sign or "alternating",
            target=tail.target or "b",
            scale=1.0 if tail.scale is None else tail.scale,
            horizon=horizon,
        )
    return families.section9_family(tail.alpha, tail.p, tail.c1, tail.m0, horizon)


def params_from_snapshot(snapshot):
    """Build JacobiParams from a validated configsuite snapshot. Head
    entries override what a rank_one or generator tail prescribes."""
    a_head = list(snapshot.a_head or ())
    b_head = list(snapshot.b_head or ())
    base = _tail_params(snapshot.tail, snapshot.horizon)
    if base is None:
        return JacobiParams(a_head, b_head, FREE_TAIL)

    length = max(len(a_head), len(b_head), base.head_length)
    base_a, base_b = base.coefficients(length)
    merged_a = list(base_a)
    merged_b = list(base_b)
    merged_a[: len(a_head)] = a_head
    merged_b[: len(b_head)] = b_head
    return JacobiParams(merged_a, merged_b, base.tail)


def validate_params_dict(params_dict, source="<dict>"):
    schema = build_schema()
    config = configsuite.ConfigSuite(
        params_dict, schema, layers=(get_default_values(),)
    )
    if not config.valid:
        raise ValidationError(
            "Invalid parameter file {}".format(source), config.errors
        )
    try:
        return params_from_snapshot(config.snapshot)
    except ValueError as err:
        raise ValidationError("Invalid parameter file {}".format(source), [err])


def load_params(path):
    """Read a JSON or YAML parameter file.

    :raises ValidationError: if the file is missing, unreadable or invalid.
    """
    if not os.path.isfile(path):
        raise ValidationError(
            "Invalid parameter file", ["{} is not an existing file".format(path)]
        )
    with open(path, "r") as fin:
        try:
            params_dict = yaml.safe_load(fin)
        except yaml.YAMLError as err:
            raise ValidationError("Could not parse {}".format(path), [err])
    logger.debug("Loaded parameter file %s", path)
    return validate_params_dict(params_dict, source=path)


def params_to_dict(params):
    """Inverse of load_params for free tails."""
    if not params.is_free_tail:
        raise ValueError("Only free-tail parameters can be written to a file")
    return {
        "a_head": list(params.a_head),
        "b_head": list(params.b_head),
        "tail": "free",
    }
