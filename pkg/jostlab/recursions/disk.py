import cmath
import re
from collections import namedtuple

import numpy as np

_BOUNDARY_TOL = 1e-12
_COMPLEX_PATTERN = re.compile(r"\s+")


class DiskPoint(namedtuple("DiskPoint", ["z", "on_boundary"])):
    """Spectral parameter z in the closed unit disk. The energy
    E = z + 1/z is always derived from z."""

    __slots__ = ()

    def __new__(cls, z, on_boundary=None):
        z = complex(z)
        modulus = abs(z)
        if on_boundary is None:
            on_boundary = abs(modulus - 1.0) <= _BOUNDARY_TOL
        if on_boundary:
            if abs(modulus - 1.0) > _BOUNDARY_TOL:
                raise ValueError("Boundary point must have |z| = 1, got {}".format(z))
        elif modulus >= 1.0:
            raise ValueError("Interior point must have |z| < 1, got {}".format(z))
        return super(DiskPoint, cls).__new__(cls, z, bool(on_boundary))

    @property
    def E(self):
        return self.z + 1.0 / self.z

    @classmethod
    def inside(cls, z):
        return cls(z, on_boundary=False)

    @classmethod
    def on_circle(cls, theta):
        return cls(cmath.exp(1j * theta), on_boundary=True)

    @classmethod
    def from_energy(cls, energy):
        """Root of z^2 - E z + 1 = 0 inside the disk, for E off [-2, 2]."""
        energy = complex(energy)
        root = cmath.sqrt(energy * energy - 4.0)
        if (energy.conjugate() * root).real < 0:
            root = -root
        return cls(2.0 / (energy + root))

    @classmethod
    def parse(cls, text):
        """Parse "a+bi", "0.4", "-0.2-0.3i" or "0.5j"."""
        cleaned = _COMPLEX_PATTERN.sub("", str(text)).replace("i", "j")
        try:
            value = complex(cleaned)
        except ValueError:
            raise ValueError("Could not parse {!r} as a complex number".format(text))
        return cls(value)

    def __complex__(self):
        return self.z


def as_disk_point(value):
    if isinstance(value, DiskPoint):
        return value
    if isinstance(value, str):
        return DiskPoint.parse(value)
    return DiskPoint(value)


def as_complex_array(value):
    """Complex ndarray view of a scalar, DiskPoint, "a+bi" string or array."""
    if isinstance(value, (DiskPoint, str)):
        return np.asarray(as_disk_point(value).z)
    return np.asarray(value, dtype=complex)
