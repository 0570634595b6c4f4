import logging

import numpy as np
from scipy.interpolate import CubicSpline

from jostlab.exceptions import QuadratureFailure
from jostlab.poisson.kernels import kernel_p, kernel_q, kernel_s
from jostlab.poisson.quadrature import (
    DEFAULT_QUADRATURE,
    adaptive_gauss_legendre,
    richardson,
)

logger = logging.getLogger(__name__)


def default_radii():
    return 1.0 - 2.0 ** -np.arange(4, 13)


class BoundaryFunction(object):
    """Real function g(e^{i theta}) on the unit circle.

    With symmetric=True (the default) g(e^{-i theta}) = g(e^{i theta}) and
    only theta in (0, pi) is ever evaluated. Otherwise `func` is evaluated
    on (0, 2 pi).
    """

    def __init__(self, func, symmetric=True, quadrature=DEFAULT_QUADRATURE):
        self._func = func
        self.symmetric = symmetric
        self.quadrature = quadrature

    @classmethod
    def from_samples(cls, theta, values, quadrature=DEFAULT_QUADRATURE):
        """Interpolate samples on (0, pi) with a cubic spline."""
        theta = np.asarray(theta, dtype=float)
        values = np.asarray(values)
        if np.iscomplexobj(values):
            raise ValueError("Boundary samples must be real")
        if theta.ndim != 1 or theta.size < 4 or theta.size != values.size:
            raise ValueError("Need at least four (theta, value) samples")
        if np.any(np.diff(theta) <= 0):
            raise ValueError("Sample angles must be strictly increasing")
        if theta[0] <= 0 or theta[-1] >= np.pi:
            raise ValueError("Sample angles must lie in (0, pi)")
        spline = CubicSpline(theta, values.astype(float))
        function = cls(spline, symmetric=True, quadrature=quadrature)
        function.samples = (theta, values)
        return function

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        if self.symmetric:
            theta = np.abs(np.angle(np.exp(1j * theta)))
        return np.asarray(self._func(theta), dtype=float)


def _check_interior(z):
    z = complex(z)
    if abs(z) >= 1.0:
        raise ValueError("Poisson integrals are evaluated inside the disk")
    return z


def _integrate(g, kernel, z, symmetric_kernel):
    """(1/2pi) int_0^{2pi} kernel(z, theta) g(theta) d theta."""
    if g.symmetric:
        integrand = lambda theta: symmetric_kernel(z, theta) * g(theta)
        return adaptive_gauss_legendre(integrand, 0.0, np.pi, g.quadrature) / np.pi
    integrand = lambda theta: kernel(z, theta) * g(theta)
    return adaptive_gauss_legendre(integrand, 0.0, 2.0 * np.pi, g.quadrature) / (
        2.0 * np.pi
    )


def renorm_poisson(g, z):
    """f(z) = (1/2pi) int Q(z, e^{i theta}) g(e^{i theta}) d theta.

    Q is even in theta, so a symmetric g is integrated over (0, pi) only.

    :raises QuadratureFailure: if panel refinement does not settle.
    """
    z = _check_interior(z)
    if z * z == 1.0:
        raise ValueError("renorm_poisson is not evaluated at z = +1, -1")
    return complex(_integrate(g, kernel_q, z, kernel_q))


def poisson_integral(g, z, kernel="p"):
    """Classical Poisson integral (1/2pi) int P(z, e^{i theta}) g d theta.

    kernel="s" integrates the symmetrized kernel S over (0, pi) instead;
    both routes agree for symmetric g.
    """
    z = _check_interior(z)
    if kernel == "p":
        integrand = lambda theta: kernel_p(z, theta) * g(theta)
        value = adaptive_gauss_legendre(integrand, 0.0, 2.0 * np.pi, g.quadrature)
        return complex(value / (2.0 * np.pi))
    if kernel == "s":
        if not g.symmetric:
            raise ValueError("The S kernel needs a symmetric boundary function")
        return complex(_integrate(g, kernel_p, z, kernel_s))
    raise ValueError("Unknown kernel {!r}, expected 'p' or 's'".format(kernel))


def boundary_recovery(g, theta0, r_seq=None):
    """Boundary limit of Re renorm_poisson(g, r e^{i theta0}) as r -> 1,
    obtained by extrapolation along r_seq. Equals g(theta0) for continuous g.

    :raises ExtrapolationUnstable: if the extrapolation does not settle.
    """
    if not 0 < theta0 < np.pi:
        raise ValueError("theta0 must lie in (0, pi)")
    radii = default_radii() if r_seq is None else np.asarray(r_seq, dtype=float)
    if np.any(np.diff(radii) <= 0) or radii[-1] >= 1.0:
        raise ValueError("r_seq must increase towards 1")

    values = []
    for radius in radii:
        try:
            values.append(renorm_poisson(g, radius * np.exp(1j * theta0)).real)
        except QuadratureFailure:
            logger.warning(
                "Quadrature failed at r = %.6f; stopping the sequence", radius
            )
            break
    if len(values) < 2:
        raise QuadratureFailure("Too few radii could be integrated")
    estimate, increment = richardson(1.0 - radii[: len(values)], values)
    logger.debug(
        "boundary recovery at %.4f: %.12g (+- %.2g)", theta0, estimate, increment
    )
    return float(estimate)
