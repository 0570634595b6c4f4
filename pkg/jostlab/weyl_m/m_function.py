import logging
from collections import namedtuple

import numpy as np

from jostlab.exceptions import EigenvalueHit, NonConvergence
from jostlab.poisson.quadrature import richardson
from jostlab.recursions.disk import as_complex_array, as_disk_point
from jostlab.recursions.geronimo_case import exact_jost

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 2000
MAX_DEPTH = 2 ** 20
DENOMINATOR_FLOOR = 1e-14
DEPTH_TOL = 1e-12
BOUNDARY_EPSILONS = (1e-3, 5e-4, 2.5e-4)

FREE_CLOSURE = "free"

MTrace = namedtuple("MTrace", ["values", "depth", "tail_closure"])


def m_trace(params, z, depth=DEFAULT_DEPTH):
    """M_0(z)..M_depth(z) by backward stripping from the free closure
    M_depth = z:

        M_n = (z + 1/z - b_{n+1} - a_{n+1}^2 M_{n+1})^{-1}

    z may be an array; values then has shape (depth + 1,) + z.shape. For
    free tails the depth is raised to the head length, which makes every
    entry exact.

    :raises EigenvalueHit: if a denominator falls below DENOMINATOR_FLOOR.
    """
    z = as_complex_array(z)
    if np.any(z == 0):
        raise ValueError("The m-function is evaluated at z != 0")
    if params.is_free_tail:
        depth = max(depth, params.head_length)
    depth = int(depth)
    a, b = params.coefficients(depth)
    energy = z + 1.0 / z

    values = np.empty((depth + 1,) + z.shape, dtype=complex)
    values[depth] = z
    for n in range(depth - 1, -1, -1):
        denominator = energy - b[n] - a[n] ** 2 * values[n + 1]
        if np.any(np.abs(denominator) < DENOMINATOR_FLOOR):
            raise EigenvalueHit(
                "z + 1/z hits an eigenvalue of J^({}) (|denominator| < {})".format(
                    n, DENOMINATOR_FLOOR
                )
            )
        values[n] = 1.0 / denominator
    return MTrace(values=values, depth=depth, tail_closure=FREE_CLOSURE)


def _depth_cap(params):
    if params.max_index is None:
        return MAX_DEPTH
    return min(MAX_DEPTH, params.max_index)


def converged_trace(params, z, needed, depth=DEFAULT_DEPTH, tol=DEPTH_TOL):
    """MTrace whose first `needed` entries no longer change when the depth
    is doubled. Free tails return the exact trace directly, as do
    generator tails whose horizon ends inside the head. A depth starting
    at the horizon cap is checked against half the cap.

    :raises NonConvergence: if the generator horizon is reached first.
    """
    if params.is_free_tail:
        return m_trace(params, z, max(depth, needed))

    cap = _depth_cap(params)
    if cap <= params.head_length:
        return m_trace(params, z, cap)
    depth = min(max(depth, 2 * needed, 1), cap)
    if depth >= cap:
        depth = min(max(cap // 2, needed, 1), cap)
    trace = m_trace(params, z, depth)
    while True:
        if depth >= cap:
            raise NonConvergence(
                "m-function depth reached the cap {} without converging".format(cap),
                value=trace.values[0],
                n_used=depth,
            )
        deeper_depth = min(2 * depth, cap)
        deeper = m_trace(params, z, deeper_depth)
        change = np.max(
            np.abs(deeper.values[: needed + 1] - trace.values[: needed + 1])
        )
        logger.debug("depth %d -> %d changes M by %.3g", depth, deeper_depth, change)
        trace, depth = deeper, deeper_depth
        if change < tol:
            return trace


def m_function(params, z, depth=DEFAULT_DEPTH):
    """M(z) = M_0(z). Exact for free tails; generator tails double the
    depth until M_0 is stable."""
    point = as_disk_point(z)
    if point.on_boundary and abs(point.z * point.z - 1.0) < 1e-15:
        raise ValueError("M is not evaluated at z = +1 or -1")
    trace = converged_trace(params, point.z, 0, depth)
    return complex(trace.values[0])


def _running_products(params, trace, n):
    a, _ = params.coefficients(max(n - 1, 0))
    shape = trace.values.shape[1:]
    factors = np.empty((n,) + shape, dtype=complex)
    if n:
        factors[0] = trace.values[0]
        if n > 1:
            factors[1:] = a.reshape((-1,) + (1,) * len(shape)) * trace.values[1:n]
    return factors


def weyl_solution(params, z, n, depth=DEFAULT_DEPTH):
    """w_0..w_n with w_0 = 1 and w_k = M_0 (a_1 M_1) ... (a_{k-1} M_{k-1})."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    point = as_disk_point(z)
    trace = converged_trace(params, point.z, n, depth)
    factors = _running_products(params, trace, n)
    return np.concatenate([[1.0 + 0j], np.cumprod(factors)])


def wtilde_sequence(params, z, n, depth=DEFAULT_DEPTH):
    """w~_k = z^{-k} w_k for k = 0..n as a running product of M_k / z."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    point = as_disk_point(z)
    if point.z == 0:
        raise ValueError("w~ is evaluated at z != 0")
    trace = converged_trace(params, point.z, n, depth)
    factors = _running_products(params, trace, n) / point.z
    return np.concatenate([[1.0 + 0j], np.cumprod(factors)])


def wtilde(params, z, n, depth=DEFAULT_DEPTH):
    return complex(wtilde_sequence(params, z, n, depth)[-1])


def _check_theta(theta):
    theta = np.asarray(theta, dtype=float)
    sine = np.sin(theta)
    if np.any(np.abs(sine) < 1e-15):
        raise ValueError("Boundary values are taken for theta off 0 and pi")
    return theta


def boundary_m(params, theta):
    """Complex M(e^{i theta}) for free tails, evaluated exactly by the
    finite continued fraction."""
    if not params.is_free_tail:
        raise ValueError("Exact boundary values need a free tail")
    theta = _check_theta(theta)
    return m_trace(params, np.exp(1j * theta), params.head_length).values[0]


def boundary_u(params, theta):
    """u(e^{i theta}) for free tails."""
    theta = _check_theta(theta)
    return exact_jost(params, np.exp(1j * theta))


def boundary_im_m(params, theta, depth=DEFAULT_DEPTH, epsilons=BOUNDARY_EPSILONS):
    """Im M(e^{i theta}); pi times the absolutely continuous weight at
    E = 2 cos(theta).

    Free tails are evaluated exactly. Other tails are evaluated at
    r = 1 - eps for each eps and extrapolated to eps = 0.

    :raises ExtrapolationUnstable: if the extrapolation does not settle.
    """
    if params.is_free_tail:
        return np.imag(boundary_m(params, theta))

    theta = _check_theta(theta)
    values = []
    for eps in epsilons:
        z = (1.0 - eps) * np.exp(1j * theta)
        trace = converged_trace(params, z, 0, depth)
        values.append(np.imag(trace.values[0]))
    estimate, _ = richardson(np.array(epsilons), np.array(values))
    return estimate
