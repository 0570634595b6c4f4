"""The coupled (c_n, g_n) recursion

    c_{n+1} = a_{n+1}^{-1} [(z^2 - b_{n+1} z) c_n + g_n]
    g_{n+1} = a_{n+1}^{-1} [((1 - a_{n+1}^2) z^2 - b_{n+1} z) c_n + g_n]

started from c_0 = g_0 = 1. g_n converges to the Jost function u(z).
"""
import logging
from collections import namedtuple

import numpy as np

from jostlab.exceptions import NonConvergence
from jostlab.recursions.disk import as_complex_array, as_disk_point
from jostlab.recursions.limits import (
    first_stable_index,
    tail_oscillation,
    working_dtype,
)

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
DEFAULT_MAX_N = 100000
_FIRST_CHUNK = 256

GcState = namedtuple("GcState", ["c", "g", "n"])


def initial_state():
    return GcState(c=1.0 + 0j, g=1.0 + 0j, n=0)


def gc_step(params, z, state):
    a, b = params.entry(state.n + 1)
    z = complex(z)
    z2 = z * z
    c = ((z2 - b * z) * state.c + state.g) / a
    g = (((1.0 - a * a) * z2 - b * z) * state.c + state.g) / a
    return GcState(c=c, g=g, n=state.n + 1)


def _run(a, b, z, c, g, dtype):
    """Continue the recursion over the coefficient arrays a, b starting
    from (c, g). z may be an array. Returns the new c and g values."""
    z = np.asarray(z, dtype=dtype)
    z2 = z * z
    c = np.asarray(c, dtype=dtype) * np.ones(z.shape, dtype=dtype)
    g = np.asarray(g, dtype=dtype) * np.ones(z.shape, dtype=dtype)
    c_values = np.empty((a.size,) + z.shape, dtype=dtype)
    g_values = np.empty((a.size,) + z.shape, dtype=dtype)
    for k in range(a.size):
        common = g / a[k]
        c, g = (
            (z2 - b[k] * z) * c / a[k] + common,
            ((1.0 - a[k] * a[k]) * z2 - b[k] * z) * c / a[k] + common,
        )
        c_values[k] = c
        g_values[k] = g
    return c_values, g_values


def gc_sequence(params, z, n):
    """Arrays (c_0..c_n, g_0..g_n); z may be a scalar or an array."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = params.coefficients(n)
    dtype = working_dtype(n)
    z = as_complex_array(z)
    c_values, g_values = _run(a, b, z, 1.0, 1.0, dtype)
    ones = np.ones((1,) + z.shape, dtype=dtype)
    return (
        np.concatenate([ones, c_values]).astype(complex),
        np.concatenate([ones, g_values]).astype(complex),
    )


def exact_jost(params, z):
    """u(z) for free-tail parameters: g is stationary once the head is
    exhausted, so g_H is exact. z may be any array, including points on
    the unit circle."""
    if not params.is_free_tail:
        raise ValueError("exact_jost requires a free tail")
    _, g_values = gc_sequence(params, z, params.head_length)
    return g_values[-1]


def gc_limit(params, z, tol=DEFAULT_TOL, max_n=DEFAULT_MAX_N, full_output=False):
    """Limit of g_n(z).

    Iterates until STABILITY_WINDOW consecutive increments are below tol.
    For free tails the value after the head is exact.

    :raises NonConvergence: if no stable run appears before max_n.
    """
    point = as_disk_point(z)
    if point.on_boundary:
        raise ValueError("gc_limit needs |z| < 1")
    if max_n < 1:
        raise ValueError("max_n must be positive")

    if params.is_free_tail:
        value = complex(exact_jost(params, point.z))
        info = {"value": value, "n_used": params.head_length, "oscillation": 0.0}
        return (value, info) if full_output else value

    if params.max_index is not None and max_n > params.max_index:
        logger.debug("Capping max_n %d at the generator horizon", max_n)
        max_n = params.max_index

    dtype = working_dtype(max_n)
    history = [np.ones(1, dtype=dtype)]
    c, g = 1.0, 1.0
    done = 0
    chunk = min(_FIRST_CHUNK, max_n)
    while done < max_n:
        stop = min(done + chunk, max_n)
        a, b = params.coefficients(stop)
        c_values, g_values = _run(a[done:], b[done:], point.z, c, g, dtype)
        c, g = c_values[-1], g_values[-1]
        history.append(g_values)
        values = np.concatenate(history)
        index = first_stable_index(values, tol)
        if index is not None:
            value = complex(values[index])
            info = {
                "value": value,
                "n_used": index,
                "oscillation": tail_oscillation(values[: index + 1]),
            }
            return (value, info) if full_output else value
        done = stop
        chunk *= 2
        logger.debug("gc_limit not yet stable at n=%d", done)

    value = complex(values[-1])
    oscillation = tail_oscillation(values)
    raise NonConvergence(
        "g_n did not stabilize to {} within {} steps (oscillation {:.3g})".format(
            tol, max_n, oscillation
        ),
        value=value,
        oscillation=oscillation,
        n_used=max_n,
    )
