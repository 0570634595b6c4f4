import logging

import numpy as np

from jostlab.blaschke.products import blaschke_product
from jostlab.exceptions import NotApplicable
from jostlab.jacobi_core.params import strip
from jostlab.poisson.integrals import BoundaryFunction, poisson_integral
from jostlab.poisson.quadrature import QuadratureSpec
from jostlab.recursions.disk import as_disk_point
from jostlab.weyl_m.m_function import boundary_im_m, m_function
from jostlab.weyl_m.spectrum import spectrum

logger = logging.getLogger(__name__)

POSITIVITY_GRID = 512


def _positive_im_m(params, label):
    theta = np.pi * (np.arange(POSITIVITY_GRID) + 0.5) / POSITIVITY_GRID
    if np.any(boundary_im_m(params, theta) <= 0):
        raise NotApplicable(
            "Im M vanishes on part of the boundary for {}".format(label)
        )


def step_sum_rule_residual(params, n, z, quad_tol=1e-10):
    """a_{n+1} M_n(z) - z B(z) exp(P(z) / 2), where

    B(z) = prod b(z, zeros of J^(n+1)) / prod b(z, eigenvalues of J^(n))

    runs over the points of the disk matching eigenvalues outside [-2, 2]
    and P is the Poisson integral of log(Im M_n / Im M_{n+1}). Only free
    tails qualify.

    :raises NotApplicable: for generator tails or if Im M vanishes on the arc.
    :raises QuadratureFailure: if the Poisson integral does not settle.
    """
    if not params.is_free_tail:
        raise NotApplicable("The step-by-step sum rule needs a free tail")
    if n < 0:
        raise ValueError("n must be nonnegative")
    point = as_disk_point(z)
    current = strip(params, n)
    following = strip(params, n + 1)
    _positive_im_m(current, "J^({})".format(n))
    _positive_im_m(following, "J^({})".format(n + 1))

    weight = BoundaryFunction(
        lambda theta: np.log(
            boundary_im_m(current, theta) / boundary_im_m(following, theta)
        ),
        quadrature=QuadratureSpec(tol=quad_tol),
    )
    integral = poisson_integral(weight, point.z)
    blaschke = blaschke_product(spectrum(following).zeros, point.z) / blaschke_product(
        spectrum(current).zeros, point.z
    )
    a_next = params.entry(n + 1)[0]
    right = point.z * complex(blaschke) * np.exp(0.5 * integral)
    residual = a_next * m_function(current, point) - right
    logger.debug("sum rule residual at n=%d, z=%s: %.3g", n, point.z, abs(residual))
    return complex(residual)
