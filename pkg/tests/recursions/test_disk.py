import cmath

import numpy as np
import pytest

from jostlab.recursions.disk import DiskPoint, as_complex_array, as_disk_point


@pytest.mark.parametrize(
    "text,expected",
    [
        ("0.4", 0.4),
        ("0.4+0i", 0.4),
        ("-0.2-0.3i", -0.2 - 0.3j),
        ("0.5j", 0.5j),
        (" 0.3 + 0.3i ", 0.3 + 0.3j),
    ],
)
def test_parse(text, expected):
    point = DiskPoint.parse(text)
    assert point.z == expected
    assert not point.on_boundary


@pytest.mark.parametrize("text", ["1.5", "0.9+0.9i", "abc", ""])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        DiskPoint.parse(text)


def test_energy():
    assert DiskPoint(0.5).E == pytest.approx(2.5)
    assert DiskPoint.from_energy(2.5).z == pytest.approx(0.5)
    assert DiskPoint.from_energy(-10.0 / 3.0).z == pytest.approx(-1.0 / 3.0)


def test_from_energy_complex():
    point = DiskPoint.from_energy(1.0 + 1.0j)
    assert abs(point.z) < 1
    assert point.E == pytest.approx(1.0 + 1.0j)


def test_boundary_points():
    point = DiskPoint.on_circle(np.pi / 3)
    assert point.on_boundary
    assert point.z == pytest.approx(cmath.exp(1j * np.pi / 3))
    assert DiskPoint(1j).on_boundary
    with pytest.raises(ValueError):
        DiskPoint(0.5, on_boundary=True)
    with pytest.raises(ValueError):
        DiskPoint.inside(1.0)


def test_conversions():
    assert as_disk_point("0.25") == DiskPoint(0.25)
    assert as_disk_point(DiskPoint(0.25)) == DiskPoint(0.25)
    assert complex(DiskPoint(0.25j)) == 0.25j
    values = as_complex_array([0.1, 0.2j])
    assert values.dtype == complex
    assert as_complex_array("0.1+0.1i") == 0.1 + 0.1j
