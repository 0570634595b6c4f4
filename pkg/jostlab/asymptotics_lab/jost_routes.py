"""Routes to the Jost function u(z) through the Weyl solution, the
telescoping log sum and the factorization over bound states and the
boundary weight."""
import logging

import numpy as np

from jostlab.blaschke.factors import alpha_beta
from jostlab.blaschke.products import renorm_product
from jostlab.exceptions import (
    BetaFailure,
    NonConvergence,
    NotApplicable,
    SpectrumIncomplete,
)
from jostlab.jacobi_core.conditions import FAILS, limit_product_a, limit_sum_b
from jostlab.poisson.integrals import BoundaryFunction, renorm_poisson
from jostlab.poisson.quadrature import QuadratureSpec
from jostlab.recursions.disk import as_disk_point
from jostlab.recursions.limits import first_stable_index, tail_oscillation
from jostlab.weyl_m.m_function import (
    boundary_im_m,
    boundary_u,
    converged_trace,
    wtilde,
    wtilde_sequence,
)
from jostlab.weyl_m.spectrum import spectrum

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
DEFAULT_MAX_N = 100000
DEFAULT_HORIZON = 10 ** 5
BRANCH_STEPS = 256
BOUNDARY_SAMPLES = 256
_FIRST_CHUNK = 256


def _interior(z):
    point = as_disk_point(z)
    if point.on_boundary:
        raise ValueError("The Jost function routes need |z| < 1")
    if point.z == 0:
        raise ValueError("The Jost function routes need z != 0")
    return point


def jost_via_weyl(
    params, z, tol=DEFAULT_TOL, max_n=DEFAULT_MAX_N, full_output=False
):
    """u(z) = 1 / lim w~_n(z).

    For free tails w~_n is constant from n = head length + 1 on. Other
    tails use the stability window rule of gc_limit.

    :raises NonConvergence: if w~_n has not settled by max_n.
    :raises EigenvalueHit: if z + 1/z is an eigenvalue.
    """
    point = _interior(z)
    if params.is_free_tail:
        n_used = params.head_length + 1
        value = 1.0 / wtilde(params, point, n_used)
        info = {"value": value, "n_used": n_used, "oscillation": 0.0}
        return (value, info) if full_output else value

    if params.max_index is not None:
        max_n = min(max_n, params.max_index // 2)
    n = min(_FIRST_CHUNK, max_n)
    while True:
        values = wtilde_sequence(params, point, n)
        index = first_stable_index(values, tol)
        if index is not None:
            value = complex(1.0 / values[index])
            info = {
                "value": value,
                "n_used": index,
                "oscillation": tail_oscillation(values[: index + 1]),
            }
            return (value, info) if full_output else value
        if n >= max_n:
            break
        n = min(2 * n, max_n)
        logger.debug("w~_n not yet stable, extending to n=%d", n)

    raise NonConvergence(
        "w~_n did not stabilize to {} within {} steps".format(tol, max_n),
        value=complex(1.0 / values[-1]),
        oscillation=tail_oscillation(values),
        n_used=max_n,
    )


def log_terms(params, z, n):
    """L_j(z) = log(a_{j+1} M_j(z) / z) for j = 0..n-1.

    The branch is followed along the segment t z, t in (0, 1], starting
    from the real value log a_{j+1} at t = 0.
    """
    point = _interior(z)
    if n < 1:
        raise ValueError("n must be >= 1")
    steps = np.linspace(0.0, 1.0, BRANCH_STEPS + 1)[1:]
    path = steps * point.z
    trace = converged_trace(params, path, n)
    a, _ = params.coefficients(n)
    ratios = a[:, None] * trace.values[:n] / path[None, :]
    phases = np.unwrap(
        np.concatenate([np.zeros((n, 1)), np.angle(ratios)], axis=1), axis=1
    )
    return np.log(np.abs(ratios[:, -1])) + 1j * phases[:, -1]


def jost_via_log_sum(params, z, n=None):
    """u_n(z) = a_n exp(-(L_0 + ... + L_{n-1})), the telescoped form of
    1 / w~_n. n defaults to head length + 1 for free tails, where the
    value is exact."""
    if n is None:
        if not params.is_free_tail:
            raise ValueError("n is required for generator tails")
        n = params.head_length + 1
    terms = log_terms(params, z, n)
    a_n = params.entry(n)[0]
    return complex(a_n * np.exp(-np.sum(terms)))


def _boundary_weight(params, quadrature):
    """log(Im M(e^{i theta}) / sin(theta)) as a symmetric boundary function."""
    if params.is_free_tail:
        return BoundaryFunction(
            lambda theta: np.log(boundary_im_m(params, theta) / np.sin(theta)),
            quadrature=quadrature,
        )
    # Chebyshev angles, clustered at 0 and pi
    nodes = np.pi * (np.arange(BOUNDARY_SAMPLES) + 0.5) / BOUNDARY_SAMPLES
    theta = 0.5 * np.pi * (1.0 - np.cos(nodes))
    im_m = boundary_im_m(params, theta)
    if np.any(im_m <= 0):
        raise NotApplicable("Im M is not positive on the sampled arc")
    return BoundaryFunction.from_samples(
        theta, np.log(im_m / np.sin(theta)), quadrature=quadrature
    )


def jost_via_factorization(
    params,
    z,
    spec=None,
    quad_tol=1e-10,
    horizon=DEFAULT_HORIZON,
    full_output=False,
):
    """u(z) = (prod a)^{-alpha(z)} exp(-beta(z) sum b / 2) B_ren(z)
    exp(-f(z) / 2), with B_ren the renormalized product over the bound
    states and f the renormalized Poisson integral of
    log(Im M / sin theta).

    :raises SpectrumIncomplete: if spec has unconverged eigenvalues.
    :raises BetaFailure: if the product of the a_n diverges.
    :raises QuadratureFailure: if the boundary integral does not settle.
    """
    point = _interior(z)
    weights = alpha_beta(point.z)
    if spec is None:
        spec = spectrum(params)
    if not spec.all_converged:
        raise SpectrumIncomplete(
            "{} eigenvalue(s) outside [-2, 2] are not converged".format(
                np.count_nonzero(~spec.converged_plus)
                + np.count_nonzero(~spec.converged_minus)
            )
        )

    if params.max_index is not None:
        horizon = min(horizon, params.max_index)
    product, beta_verdict = limit_product_a(params, horizon)
    if beta_verdict == FAILS:
        raise BetaFailure("The product of the a_n does not converge")
    b_sum, gamma_verdict = limit_sum_b(params, horizon)
    if gamma_verdict == FAILS:
        raise NonConvergence("The sum of the b_n does not converge", n_used=horizon)

    quadrature = QuadratureSpec(tol=quad_tol)
    poisson_term = renorm_poisson(_boundary_weight(params, quadrature), point.z)
    blaschke = complex(renorm_product(spec.zeros, point.z))
    value = complex(
        np.exp(-weights.alpha * np.log(product) - 0.5 * weights.beta * b_sum)
        * blaschke
        * np.exp(-0.5 * poisson_term)
    )
    logger.debug(
        "factorization at %s: %d zeros, Poisson term %s",
        point.z,
        len(spec),
        poisson_term,
    )
    if full_output:
        return value, {
            "u": value,
            "product_a": product,
            "sum_b": b_sum,
            "n_zeros": len(spec),
            "blaschke": blaschke,
            "poisson_term": poisson_term,
        }
    return value


def boundary_identity_residual(params, theta):
    """Im M(e^{i theta}) |u(e^{i theta})|^2 - sin(theta) for free tails."""
    theta = np.asarray(theta, dtype=float)
    weight = boundary_im_m(params, theta)
    return weight * np.abs(boundary_u(params, theta)) ** 2 - np.sin(theta)
