"""Poisson-type kernels on the unit disk.

P(z, theta) = (e^{i theta} + z) / (e^{i theta} - z)
S(z, theta) = (1 - z^2) / (1 + z^2 - 2 z cos theta)
Q(z, theta) = S - alpha(z) - beta(z) cos theta
            = -4 z^2 sin^2 theta / ((1 - z^2)(1 + z^2 - 2 z cos theta))
"""
import numpy as np

from jostlab.blaschke.factors import alpha_beta
from jostlab.exceptions import PoleHit

_POLE_TOL = 1e-15


def _guard(denominator, what):
    if np.any(np.abs(denominator) < _POLE_TOL):
        raise PoleHit("{} is evaluated at its pole".format(what))


def kernel_p(z, theta):
    z = np.asarray(z, dtype=complex)
    boundary = np.exp(1j * np.asarray(theta, dtype=float))
    _guard(boundary - z, "P(z, theta)")
    return (boundary + z) / (boundary - z)


def _symmetric_denominator(z, theta):
    return 1.0 + z * z - 2.0 * z * np.cos(theta)


def kernel_s(z, theta):
    z = np.asarray(z, dtype=complex)
    denominator = _symmetric_denominator(z, np.asarray(theta, dtype=float))
    _guard(denominator, "S(z, theta)")
    return (1.0 - z * z) / denominator


def kernel_q(z, theta):
    z = np.asarray(z, dtype=complex)
    theta = np.asarray(theta, dtype=float)
    denominator = (1.0 - z * z) * _symmetric_denominator(z, theta)
    _guard(denominator, "Q(z, theta)")
    return -4.0 * z * z * np.sin(theta) ** 2 / denominator


def kernel_q_via_moments(z, theta):
    """Q computed as S - alpha - beta cos(theta)."""
    weights = alpha_beta(z)
    return kernel_s(z, theta) - weights.alpha - weights.beta * np.cos(theta)


def kernel_q_bound(z, theta):
    """4 sin^2(theta) / (1 - |z|)^3, an upper bound for |Q|."""
    return 4.0 * np.sin(theta) ** 2 / (1.0 - np.abs(z)) ** 3
