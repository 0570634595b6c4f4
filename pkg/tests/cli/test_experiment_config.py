import pytest

from jostlab.cli.experiment_config import (
    _is_disk_point,
    _min_value,
    _realize_list,
    _to_float_list,
    _to_int_list,
    command_tol,
    load_experiment_config,
)
from jostlab.exceptions import ValidationError


@pytest.mark.parametrize(
    "valid_input",
    [
        "0,1,2-5",
        [0, 1, "2-5"],
        [0, 1, 2, 3, 4, 5],
        [0, 1, "2-3", "4-5"],
        "0-5",
        "0-1,2,3-5",
        ["0,1,2-5"],
    ],
)
def test_to_int_list(valid_input):
    expected_result = list(range(6))
    assert _to_int_list(valid_input) == expected_result


def test_to_int_list_single_value():
    assert _to_int_list(7) == [7]


@pytest.mark.parametrize("invalid_input", ["5-2", "1-2-3"])
def test_realize_list_rejects(invalid_input):
    with pytest.raises(ValueError):
        _realize_list(invalid_input)


@pytest.mark.parametrize(
    "test_input,expected_result",
    [(0.9, [0.9]), ("0.9,1.2,1.5", [0.9, 1.2, 1.5]), ([1, 2.5], [1, 2.5])],
)
def test_to_float_list(test_input, expected_result):
    assert _to_float_list(test_input) == expected_result


@pytest.mark.parametrize(
    "test_input,expected_result", [(-1, False), (0, True), (1, True)]
)
def test_min_value(test_input, expected_result):
    assert _min_value(test_input).__bool__() == expected_result


@pytest.mark.parametrize(
    "test_input,expected_result",
    [
        ("0.4", True),
        ("0.3+0.3i", True),
        ("-0.2 - 0.5i", True),
        ("1+0i", True),
        ("1.5", False),
        ("0.9+0.9i", False),
        ("not a number", False),
    ],
)
def test_is_disk_point(test_input, expected_result):
    assert _is_disk_point(test_input).__bool__() == expected_result


def test_valid_config_gets_defaults():
    config = load_experiment_config(
        {"command": "jost", "params": "params.json", "z": "0.4+0i", "method": "det2"}
    )
    assert config.command == "jost"
    assert config.method == "det2"
    assert config.n_trunc == 200
    assert config.tol is None
    assert command_tol(config) == 1e-10
    assert config.output.path == "-"
    assert config.output.format == "json"


def test_list_options_are_expanded():
    config = load_experiment_config(
        {
            "command": "survey9",
            "trunc": "1000,2000",
            "q": "0.9,1.5",
            "output": {"path": "survey.csv", "format": "csv"},
        }
    )
    assert list(config.trunc) == [1000, 2000]
    assert list(config.q) == [0.9, 1.5]
    assert config.params is None
    assert config.output.format == "csv"


def test_grid_is_converted_to_strings():
    config = load_experiment_config(
        {"command": "cross-validate", "params": "p.json", "grid": [0.4, "0.1+0.2i"]}
    )
    assert list(config.grid) == ["(0.4+0j)", "0.1+0.2i"]


def _messages(config_dict):
    with pytest.raises(ValidationError) as err:
        load_experiment_config(config_dict)
    return [error.msg for error in err.value.errors]


def test_empty_grid_is_invalid():
    messages = _messages({"command": "cross-validate", "params": "p.json", "grid": []})
    assert any("grid nonempty" in msg for msg in messages)


@pytest.mark.parametrize(
    "config_dict",
    [
        {"command": "unknown", "params": "p.json"},
        {"params": "p.json"},
        {"command": "jost", "params": "p.json"},
        {"command": "spectrum"},
        {"command": "jost", "params": "p.json", "z": "1.5"},
        {"command": "jost", "params": "p.json", "z": "0.5", "method": "other"},
        {"command": "survey9", "q": "0.9,-1"},
        {"command": "spectrum", "params": "p.json", "tol": 0},
        {"command": "spectrum", "params": "p.json", "output": {"format": "xml"}},
    ],
)
def test_invalid_config(config_dict):
    with pytest.raises(ValidationError):
        load_experiment_config(config_dict)


@pytest.mark.parametrize(
    "command,extra,expected",
    [
        ("check-conditions", {}, 1e-8),
        ("spectrum", {}, 1e-8),
        ("cross-validate", {"grid": ["0.4"]}, 1e-6),
        ("gc", {"z": "0.4"}, 1e-10),
        ("spectrum", {"tol": 1e-3}, 1e-3),
    ],
)
def test_command_tol(command, extra, expected):
    config_dict = {"command": command, "params": "p.json"}
    config_dict.update(extra)
    assert command_tol(load_experiment_config(config_dict)) == expected
