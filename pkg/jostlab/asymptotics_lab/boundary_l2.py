"""Convergence of p_n(x) to its Jost-function comparand in L^2(f dx) on
[-2, 2], where x = 2 cos(theta) and f(x) = sin(theta) / (pi |u(e^{i theta})|^2)."""
import logging
from collections import namedtuple

import numpy as np

from jostlab.exceptions import NotApplicable
from jostlab.poisson.quadrature import DEFAULT_QUADRATURE, adaptive_gauss_legendre
from jostlab.recursions.polynomials import orthonormal_polys
from jostlab.weyl_m.m_function import boundary_u

logger = logging.getLogger(__name__)

L2ErrorCurve = namedtuple(
    "L2ErrorCurve", ["n_values", "errors", "norms", "singular_norms", "quadrature"]
)


def _density(u, theta):
    """f(2 cos theta) |d(2 cos theta)| / d theta."""
    return 2.0 * np.sin(theta) ** 2 / (np.pi * np.abs(u) ** 2)


def _comparand(u, theta, n):
    return np.imag(np.conj(u) * np.exp(1j * (n + 1) * theta)) / np.sin(theta)


def boundary_l2_error(params, n_values, quad=DEFAULT_QUADRATURE):
    """For each n, the squared L^2(f dx) distance between p_n and
    Im(conj(u) e^{i(n+1) theta}) / sin(theta), and the norm of p_n.

    Once n is past the head the comparand equals p_n, so the errors are
    zero up to quadrature roundoff and the curve is flat there rather
    than strictly decreasing.

    :raises NotApplicable: for generator tails.
    :raises QuadratureFailure: if an integral does not settle.
    """
    if not params.is_free_tail:
        raise NotApplicable("Boundary L2 errors need a free tail")
    n_values = [int(n) for n in n_values]
    if not n_values or min(n_values) < 0:
        raise ValueError("n_values must be a nonempty list of nonnegative integers")

    errors, norms = [], []
    for n in n_values:

        def error_integrand(theta, n=n):
            u = boundary_u(params, theta)
            p_n = orthonormal_polys(params, 2.0 * np.cos(theta), n)[n].real
            return (p_n - _comparand(u, theta, n)) ** 2 * _density(u, theta)

        def norm_integrand(theta, n=n):
            u = boundary_u(params, theta)
            p_n = orthonormal_polys(params, 2.0 * np.cos(theta), n)[n].real
            return p_n ** 2 * _density(u, theta)

        errors.append(float(adaptive_gauss_legendre(error_integrand, 0.0, np.pi, quad)))
        norms.append(float(adaptive_gauss_legendre(norm_integrand, 0.0, np.pi, quad)))
        logger.debug("n=%d: error %.3g, norm %.12f", n, errors[-1], norms[-1])

    norms = np.array(norms)
    return L2ErrorCurve(
        n_values=n_values,
        errors=np.array(errors),
        norms=norms,
        singular_norms=1.0 - norms,
        quadrature=quad,
    )
