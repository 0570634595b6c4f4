import numpy as np
import pytest

from jostlab.exceptions import HorizonExceeded
from jostlab.jacobi_core import families
from jostlab.jacobi_core.params import (
    FREE_TAIL,
    GeneratorTail,
    JacobiParams,
    strip,
    truncate_gc,
)


def test_free_parameters_are_normalized():
    assert JacobiParams([1, 1], [0, 0]) == families.free()
    assert JacobiParams([2, 1], [0.5]) == JacobiParams([2], [0.5])
    assert families.free().head_length == 0


def test_heads_of_different_length_are_padded():
    params = JacobiParams([2.0], [0.0, 3.0])
    assert params.a_head == (2.0, 1.0)
    assert params.b_head == (0.0, 3.0)


@pytest.mark.parametrize(
    "a_head,b_head",
    [([0.0], []), ([-1.0], [0.0]), ([1.0], [np.inf]), ([np.nan], [])],
)
def test_invalid_parameters(a_head, b_head):
    with pytest.raises(ValueError):
        JacobiParams(a_head, b_head)


def test_unknown_tail():
    with pytest.raises(TypeError):
        JacobiParams([], [], tail="free")


def test_coefficients_free_tail():
    a, b = JacobiParams([2.0], [0.5]).coefficients(4)
    assert a.tolist() == [2.0, 1.0, 1.0, 1.0]
    assert b.tolist() == [0.5, 0.0, 0.0, 0.0]
    assert JacobiParams([2.0], [0.5]).entry(7) == (1.0, 0.0)


def test_coefficients_generator_tail():
    params = families.power_family(1.0, sign="positive")
    a, b = params.coefficients(3)
    assert np.allclose(a, 1.0)
    assert np.allclose(b, [1.0, 0.5, 1.0 / 3.0])
    assert params.entry(4) == (1.0, 0.25)


def test_generator_horizon():
    params = families.power_family(1.0, horizon=10)
    assert params.max_index == 10
    params.coefficients(10)
    with pytest.raises(HorizonExceeded):
        params.coefficients(11)
    with pytest.raises(ValueError):
        GeneratorTail(lambda n: (1.0, 0.0), horizon=0)


@pytest.mark.parametrize(
    "params,n,expected",
    [
        (families.free(), 5, families.free()),
        (families.rank_one(2.0), 1, families.free()),
        (JacobiParams([], [1, 2, 3]), 2, JacobiParams([], [3])),
    ],
)
def test_strip_free_tail(params, n, expected):
    assert strip(params, n) == expected


def test_strip_generator_tail_shifts_indices():
    params = families.power_family(1.0, sign="positive", horizon=100)
    stripped = strip(params, 3)
    assert np.allclose(stripped.coefficients(2)[1], [0.25, 0.2])
    assert stripped.max_index == 97
    with pytest.raises(ValueError):
        strip(params, -1)


@pytest.mark.parametrize("m,k", [(0, 4), (1, 1), (2, 3), (3, 0), (4, 7)])
def test_strip_composes_on_generator_tails(m, k):
    tail = families.power_family(1.5, horizon=1000).tail
    params = JacobiParams([1.2, 0.9, 1.1], [0.5, -0.3, 0.2], tail)
    twice = strip(strip(params, m), k)
    once = strip(params, m + k)
    assert twice == once
    for twice_values, once_values, full_values in zip(
        twice.coefficients(20),
        once.coefficients(20),
        params.coefficients(20 + m + k),
    ):
        assert np.array_equal(twice_values, once_values)
        assert np.array_equal(twice_values, full_values[m + k :])


@pytest.mark.parametrize(
    "params,n,expected",
    [
        (families.rank_one(2.0), 0, families.free()),
        (families.rank_one(2.0), 1, families.rank_one(2.0)),
        (
            families.power_family(1.0, sign="positive"),
            3,
            JacobiParams([], [1.0, 0.5, 1.0 / 3.0]),
        ),
    ],
)
def test_truncate_gc(params, n, expected):
    truncated = truncate_gc(params, n)
    assert truncated.tail == FREE_TAIL
    assert np.allclose(truncated.b_head, expected.b_head)
    assert np.allclose(truncated.a_head, expected.a_head)
