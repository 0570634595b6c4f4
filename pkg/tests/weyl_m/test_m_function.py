import numpy as np
import pytest

from jostlab.exceptions import EigenvalueHit
from jostlab.jacobi_core import families
from jostlab.jacobi_core.params import JacobiParams
from jostlab.weyl_m.m_function import (
    boundary_im_m,
    boundary_m,
    m_function,
    m_trace,
    weyl_solution,
    wtilde,
    wtilde_sequence,
)


@pytest.mark.parametrize(
    "params,z,expected",
    [
        (families.free(), 0.5, 0.5),
        (families.free(), 0.2 - 0.7j, 0.2 - 0.7j),
        (families.rank_one(0.5), 0.5, 2.0 / 3.0),
    ],
)
def test_m_function_closed_forms(params, z, expected):
    assert m_function(params, z) == pytest.approx(expected, abs=1e-14)


def test_m_trace_is_stripped_hierarchy():
    params = JacobiParams([2.0, 1.5], [0.5, -0.25])
    trace = m_trace(params, 0.3j, depth=5)
    assert trace.values.shape == (6,)
    assert trace.tail_closure == "free"
    assert trace.values[2] == pytest.approx(0.3j)
    z = 0.3j
    expected = 1.0 / (z + 1 / z - 0.5 - 4.0 * trace.values[1])
    assert trace.values[0] == pytest.approx(expected)


def test_m_trace_eigenvalue_hit():
    with pytest.raises(EigenvalueHit):
        m_trace(families.rank_one(2.0), 0.5)


def test_m_function_generator_tail_converges():
    params = families.power_family(2.0, horizon=10 ** 5)
    shallow = m_function(params, 0.4 + 0.2j, depth=100)
    deep = m_function(params, 0.4 + 0.2j, depth=4000)
    assert shallow == pytest.approx(deep, abs=1e-10)


def test_m_function_starting_at_the_horizon_cap():
    short = families.power_family(4.0, horizon=1000)
    long = families.power_family(4.0, horizon=10 ** 5)
    # The default depth is beyond the short horizon
    assert m_function(short, 0.5) == pytest.approx(m_function(long, 0.5), abs=1e-12)


def test_m_function_horizon_inside_the_head_is_exact():
    a_head, b_head = [1.2, 0.9, 1.1], [0.5, -0.3, 0.2]
    tail = families.power_family(2.0, horizon=2).tail
    params = JacobiParams(a_head, b_head, tail)
    expected = m_function(JacobiParams(a_head, b_head), 0.3 + 0.4j)
    assert m_function(params, 0.3 + 0.4j) == pytest.approx(expected, abs=1e-14)


def test_small_z_expansion():
    params = JacobiParams([1.3], [0.4])
    a1, b1 = 1.3, 0.4
    errors = []
    for z in (0.1, 0.05, 0.025):
        approximation = b1 * z + (0.5 * b1 ** 2 + a1 ** 2 - 1) * z ** 2
        errors.append(abs(np.log(m_function(params, z) / z) - approximation))
    assert errors[0] / errors[1] == pytest.approx(8, rel=0.2)
    assert errors[1] / errors[2] == pytest.approx(8, rel=0.2)


@pytest.mark.parametrize("n", [0, 1, 4, 9])
def test_wtilde_free_is_one(n):
    assert np.allclose(wtilde_sequence(families.free(), 0.3 + 0.1j, n), 1.0)


def test_weyl_solution_free():
    z = 0.6j
    assert np.allclose(weyl_solution(families.free(), z, 5), z ** np.arange(6))


@pytest.mark.parametrize(
    "params,z,expected",
    [
        (families.rank_one(2.0), 0.4, 5.0),
        (JacobiParams([2.0], []), 0.5, 8.0),
    ],
)
def test_wtilde_large_n(params, z, expected):
    assert wtilde(params, z, 30) == pytest.approx(expected, abs=1e-12)


def test_boundary_values():
    assert boundary_im_m(families.free(), np.pi / 2) == pytest.approx(1.0)
    assert boundary_im_m(families.rank_one(0.5), np.pi / 2) == pytest.approx(0.8)
    theta = np.linspace(0.2, 2.9, 6)
    assert np.allclose(boundary_m(families.free(), theta), np.exp(1j * theta))
    with pytest.raises(ValueError):
        boundary_im_m(families.free(), 0.0)


def test_boundary_im_m_generator_tail():
    params = families.power_family(4.0, horizon=10 ** 5)
    theta = np.array([1.0, 2.0])
    estimate = boundary_im_m(params, theta)
    truncated = JacobiParams(*params.coefficients(200))
    assert np.allclose(estimate, boundary_im_m(truncated, theta), atol=1e-5)


@pytest.mark.parametrize(
    "params",
    [
        families.free(),
        families.rank_one(2.0),
        JacobiParams([1.2, 0.8, 1.1], [0.3, -0.2, 0.1]),
        families.power_family(2.0, horizon=10 ** 4),
    ],
)
def test_m_maps_the_upper_half_disk_into_the_upper_half_plane(params):
    radii = np.array([0.2, 0.5, 0.8, 0.95])[:, None]
    angles = np.linspace(0.1, np.pi - 0.1, 9)[None, :]
    for z in (radii * np.exp(1j * angles)).ravel():
        assert m_function(params, z).imag > 0
