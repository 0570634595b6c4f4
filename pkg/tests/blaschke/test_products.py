import numpy as np
import pytest

from jostlab.blaschke.factors import blaschke_b, renorm_q
from jostlab.blaschke.products import blaschke_product, renorm_product
from jostlab.exceptions import PoleHit


def _zeros(count):
    k = np.arange(2, count + 2)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    return signs * (1 - k ** -0.4)


def test_empty_product():
    assert renorm_product([], 0.3) == 1
    assert blaschke_product([], 0.3) == 1


def test_single_zero():
    assert renorm_product([0.5], 0.5) == 0
    assert renorm_product([0.5], 0.2j) == pytest.approx(complex(renorm_q(0.2j, 0.5)))


def test_unimodular_on_the_circle():
    value = renorm_product(_zeros(49), np.exp(1.2j))
    assert abs(value) == pytest.approx(1.0, abs=1e-10)


def test_start_index_drops_leading_zeros():
    zeros = _zeros(10)
    full = renorm_product(zeros, 0.3)
    tail = renorm_product(zeros, 0.3, start_index=3)
    head = renorm_product(zeros[:3], 0.3)
    assert full == pytest.approx(complex(head * tail))


def test_tail_triviality_on_the_boundary():
    zeros = 1 - np.arange(2, 2002) ** -0.6
    theta = np.linspace(0.6, np.pi - 0.2, 40)
    boundary = np.exp(1j * theta)
    distances = [
        np.max(np.abs(renorm_product(zeros, boundary, start_index=n) - 1))
        for n in (10, 50, 250)
    ]
    assert distances[0] > distances[1] > distances[2]


def test_full_output_bound():
    zeros = np.concatenate([[0.5], 1 - 1.0 / np.arange(10, 60) ** 2])
    value, bound = renorm_product(zeros, 0.2 + 0.1j, full_output=True)
    assert value == renorm_product(zeros, 0.2 + 0.1j)
    assert np.isfinite(bound)
    _, boundary_bound = renorm_product(zeros, np.exp(0.5j), full_output=True)
    assert boundary_bound == np.inf


def test_poles():
    with pytest.raises(PoleHit):
        renorm_product([0.5], 1.0)
    with pytest.raises(ValueError):
        renorm_product([0.0], 0.3)


def test_blaschke_product():
    zeros = [0.5, -1.0 / 3.0]
    z = 0.25j
    expected = blaschke_b(z, 0.5) * blaschke_b(z, -1.0 / 3.0)
    assert blaschke_product(zeros, z) == pytest.approx(complex(expected))
