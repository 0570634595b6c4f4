import json

import numpy as np
import pytest
import yaml

from jostlab.exceptions import ValidationError
from jostlab.jacobi_core import families
from jostlab.jacobi_core.params_config import (
    load_params,
    params_to_dict,
    validate_params_dict,
)


@pytest.mark.parametrize(
    "params_dict,expected",
    [
        ({"tail": "free"}, families.free()),
        ({"b_head": [2], "tail": "free"}, families.rank_one(2.0)),
        (
            {"a_head": [2.0], "b_head": [0, 0.5], "tail": {"type": "free"}},
            families.JacobiParams([2.0, 1.0], [0.0, 0.5]),
        ),
        ({"tail": {"type": "rank_one", "beta": -3}}, families.rank_one(-3.0)),
        (
            {"tail": {"type": "rank_one", "beta": 1, "a1": 2}},
            families.JacobiParams([2.0], [1.0]),
        ),
    ],
)
def test_valid_free_parameters(params_dict, expected):
    assert validate_params_dict(params_dict) == expected


def test_power_tail():
    params = validate_params_dict(
        {
            "tail": {"type": "power", "exponent": 1, "sign": "positive"},
            "horizon": 1000,
        }
    )
    assert params.max_index == 1000
    assert np.allclose(params.coefficients(2)[1], [1.0, 0.5])


def test_head_overrides_generator():
    params = validate_params_dict(
        {"b_head": [5.0], "tail": {"type": "power", "exponent": 2}, "horizon": 50}
    )
    assert np.allclose(params.coefficients(3)[1], [5.0, 0.25, -1.0 / 9.0])


def test_section9_tail():
    params = validate_params_dict(
        {
            "tail": {"type": "section9", "alpha": 0.7, "p": 1.0, "c1": 0.4, "m0": 10},
            "horizon": 500,
        }
    )
    assert params.entry(100)[1] == pytest.approx(100 ** -0.7)


@pytest.mark.parametrize(
    "params_dict",
    [
        {},
        {"a_head": [0.0], "tail": "free"},
        {"tail": "periodic"},
        {"tail": {"type": "rank_one"}},
        {"tail": {"type": "power", "exponent": 1, "sign": "up"}},
        {"tail": "free", "horizon": 0},
        {"tail": {"type": "section9", "alpha": 0.7, "p": 3, "c1": 0.4, "m0": 10}},
    ],
)
def test_invalid_parameters(params_dict):
    with pytest.raises(ValidationError):
        validate_params_dict(params_dict)


@pytest.mark.parametrize("dump", [json.dump, yaml.dump])
def test_load_params(tmpdir, dump):
    path = tmpdir.join("params.txt").strpath
    with open(path, "w") as fout:
        dump({"a_head": [2.0], "tail": "free"}, fout)
    assert load_params(path) == families.JacobiParams([2.0], [])


def test_load_params_missing_file(setup_tmpdir):
    with pytest.raises(ValidationError):
        load_params("no_such_file.json")


def test_params_to_dict():
    params = families.JacobiParams([2.0], [0.5, 1.0])
    assert validate_params_dict(params_to_dict(params)) == params
    with pytest.raises(ValueError):
        params_to_dict(families.power_family(1.0))
