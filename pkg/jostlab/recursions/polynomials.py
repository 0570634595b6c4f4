import logging

import numpy as np

from jostlab.exceptions import NonConvergence
from jostlab.recursions.disk import as_complex_array, as_disk_point
from jostlab.recursions.limits import (
    first_stable_index,
    tail_oscillation,
    working_dtype,
)
from jostlab.weyl_m.m_function import wtilde_sequence

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
DEFAULT_MAX_N = 100000
_FIRST_CHUNK = 256


def _as_grid(values, dtype):
    return as_complex_array(values).astype(dtype)


def orthonormal_polys(params, x, n):
    """Values p_0(x)..p_n(x) of the orthonormal polynomials.

    x may be a scalar or an array; the result has shape (n + 1,) + x.shape.
    The recursion x p_k = a_{k+1} p_{k+1} + b_{k+1} p_k + a_k p_{k-1} is
    run forward from p_{-1} = 0, p_0 = 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = params.coefficients(n)
    dtype = working_dtype(n)
    x = _as_grid(x, dtype)
    values = np.empty((n + 1,) + x.shape, dtype=dtype)
    values[0] = 1.0
    previous = np.zeros(x.shape, dtype=dtype)
    current = values[0].copy()
    a_previous = 1.0
    for k in range(n):
        following = ((x - b[k]) * current - a_previous * previous) / a[k]
        previous, current = current, following
        a_previous = a[k]
        values[k + 1] = current
    return values.astype(complex)


def scaled_polys(params, z, n):
    """c_k(z) = z^k p_k(z + 1/z) for k = 0..n, vectorized over z.

    Uses c_{k+1} = ((1 + z^2 - b_{k+1} z) c_k - a_k z^2 c_{k-1}) / a_{k+1},
    which never forms z^{-1}.
    """
    a, b = params.coefficients(n)
    dtype = working_dtype(n)
    z = _as_grid(z, dtype)
    z2 = z * z
    values = np.empty((n + 1,) + z.shape, dtype=dtype)
    values[0] = 1.0
    previous = np.zeros(z.shape, dtype=dtype)
    current = values[0].copy()
    a_previous = 1.0
    for k in range(n):
        following = (
            (1.0 + z2 - b[k] * z) * current - a_previous * z2 * previous
        ) / a[k]
        previous, current = current, following
        a_previous = a[k]
        values[k + 1] = current
    return values


def szego_sequence(params, z, n):
    """c_0(z)..c_n(z) with c_k(z) = z^k p_k(z + 1/z)."""
    point = as_disk_point(z)
    if point.z == 0:
        raise ValueError("The Szego sequence is evaluated at z != 0")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return scaled_polys(params, point.z, n).astype(complex)


def wronskian_residual(params, z, n):
    """a_n (p_n w_n - w_{n+1} p_{n-1}) - 1 at E = z + 1/z, with a_0 = 1,
    p_{-1} = 0 and w_0 = 1. Evaluated as
    a_n (c_n w~_n - z^2 c_{n-1} w~_{n+1}) - 1 to stay within range.

    :raises EigenvalueHit: if z + 1/z is an eigenvalue of some J^(k).
    """
    point = as_disk_point(z)
    if n < 0:
        raise ValueError("n must be nonnegative")
    c = szego_sequence(params, point, n)
    wt = wtilde_sequence(params, point, n + 1)
    a_n = params.entry(n)[0] if n >= 1 else 1.0
    c_previous = c[n - 1] if n >= 1 else 0.0
    return complex(
        a_n * (c[n] * wt[n] - point.z ** 2 * c_previous * wt[n + 1]) - 1.0
    )


def szego_limit(params, z, tol=DEFAULT_TOL, max_n=DEFAULT_MAX_N, full_output=False):
    """Limit of c_n(z) under the stability window rule.

    :raises NonConvergence: if c_n has not settled by max_n.
    """
    point = as_disk_point(z)
    if point.z == 0 or point.on_boundary:
        raise ValueError("szego_limit needs 0 < |z| < 1")
    if params.max_index is not None and max_n > params.max_index:
        max_n = params.max_index

    n = min(_FIRST_CHUNK, max_n)
    while True:
        values = scaled_polys(params, point.z, n)
        index = first_stable_index(values, tol)
        if index is not None:
            value = complex(values[index])
            info = {
                "value": value,
                "n_used": index,
                "oscillation": tail_oscillation(values[: index + 1]),
            }
            return (value, info) if full_output else value
        if n >= max_n:
            break
        n = min(2 * n, max_n)

    oscillation = tail_oscillation(values)
    raise NonConvergence(
        "c_n did not stabilize to {} within {} steps".format(tol, max_n),
        value=complex(values[-1]),
        oscillation=oscillation,
        n_used=max_n,
    )
