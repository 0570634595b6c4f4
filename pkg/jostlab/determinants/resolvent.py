"""The free resolvent and the perturbation matrix dJ (J_0 - E)^{-1}.

With E = z + 1/z and |z| < 1,

    G_0(n, m) = (J_0 - E)^{-1}_{nm} = -(1/z - z)^{-1} (z^{|m-n|} - z^{m+n}).
"""
import logging
from collections import namedtuple

import numpy as np

from jostlab.exceptions import PoleHit
from jostlab.recursions.disk import as_disk_point

logger = logging.getLogger(__name__)

_POLE_TOL = 1e-15

PerturbationMatrix = namedtuple(
    "PerturbationMatrix", ["entries", "trunc", "z", "hs_norm"]
)


def _prefactor(z):
    if abs(1.0 - z * z) < _POLE_TOL:
        raise PoleHit("The free resolvent has poles at z = +1 and -1")
    if z == 0:
        raise ValueError("The free resolvent is evaluated at z != 0")
    return -z / (1.0 - z * z)


def free_resolvent_entry(n, m, z):
    """G_0(n, m) at z. n and m may be integer arrays; index 0 gives 0."""
    z = complex(z)
    n = np.asarray(n)
    m = np.asarray(m)
    if np.any(n < 0) or np.any(m < 0):
        raise ValueError("Resolvent indices start at 1")
    value = _prefactor(z) * (z ** np.abs(m - n) - z ** (m + n))
    return complex(value) if value.ndim == 0 else value


def build_k(params, z, n_trunc):
    """Truncation to n, m <= n_trunc of A = dJ G_0.

    Row n is b_n G_0(n, .) + (a_n - 1) G_0(n + 1, .) + (a_{n-1} - 1) G_0(n - 1, .)
    with a_0 = 1, so only rows touching a perturbed site are nonzero.
    """
    point = as_disk_point(z)
    if point.on_boundary:
        raise ValueError("The perturbation matrix is built for |z| < 1")
    n_trunc = int(n_trunc)
    if n_trunc < 1:
        raise ValueError("n_trunc must be >= 1")

    a, b = params.coefficients(n_trunc)
    shifted = np.concatenate([[0.0], a[:-1] - 1.0])
    rows = np.arange(1, n_trunc + 1)[:, None]
    columns = np.arange(1, n_trunc + 1)[None, :]
    entries = (
        b[:, None] * free_resolvent_entry(rows, columns, point.z)
        + (a - 1.0)[:, None] * free_resolvent_entry(rows + 1, columns, point.z)
        + shifted[:, None] * free_resolvent_entry(rows - 1, columns, point.z)
    )
    hs_norm = float(np.linalg.norm(entries))
    logger.debug("perturbation matrix of size %d, HS norm %.6g", n_trunc, hs_norm)
    return PerturbationMatrix(entries, n_trunc, point, hs_norm)


def diagonal_entries(params, z, n_trunc):
    """A_nn in closed form:

    -z/(1 - z^2) [b_n (1 - z^{2n}) + (a_n - 1)(z - z^{2n+1})
                  + (a_{n-1} - 1)(z - z^{2n-1})]
    """
    z = as_disk_point(z).z
    a, b = params.coefficients(int(n_trunc))
    n = np.arange(1, a.size + 1)
    shifted = np.concatenate([[0.0], a[:-1] - 1.0])
    bracket = (
        b * (1.0 - z ** (2 * n))
        + (a - 1.0) * (z - z ** (2 * n + 1))
        + shifted * (z - z ** (2 * n - 1))
    )
    return _prefactor(z) * bracket
