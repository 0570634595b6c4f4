"""Weierstrass and Blaschke factors for real zeros p in (-1, 1)."""
from collections import namedtuple

import numpy as np

from jostlab.exceptions import PoleHit, SingularAtOmega

_POLE_TOL = 1e-15

AlphaBeta = namedtuple("AlphaBeta", ["alpha", "beta"])


def _check_zero(p):
    p = float(p)
    if not -1.0 < p < 1.0:
        raise ValueError("Zeros must lie in (-1, 1), got {}".format(p))
    return p


def weierstrass_w(n, z):
    """W_n(z) = (1 - z) exp(z + z^2/2 + ... + z^n/n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    z = np.asarray(z, dtype=complex)
    exponent = np.zeros(z.shape, dtype=complex)
    power = np.ones(z.shape, dtype=complex)
    for k in range(1, n + 1):
        power = power * z
        exponent = exponent + power / k
    return (1.0 - z) * np.exp(exponent)


def blaschke_b(z, p):
    """b(z, p) = (|p|/p) (p - z) / (1 - p z), with b(z, 0) = z."""
    p = _check_zero(p)
    z = np.asarray(z, dtype=complex)
    if p == 0.0:
        return z
    denominator = 1.0 - p * z
    if np.any(np.abs(denominator) < _POLE_TOL):
        raise PoleHit("b(z, p) evaluated at its pole z = 1/p")
    return np.sign(p) * (p - z) / denominator


def modified_b(n, z, p):
    """b_n(z, p) = W_n(x / (1 - w z)) / W_n(-x w z / (1 - w z)) where
    p = (1 - x) w, w = sign(p). b_0 coincides with b."""
    p = _check_zero(p)
    if p == 0.0:
        raise ValueError("modified_b needs p != 0")
    omega = np.sign(p)
    x = 1.0 - abs(p)
    z = np.asarray(z, dtype=complex)
    shifted = 1.0 - omega * z
    if np.any(np.abs(shifted) < _POLE_TOL):
        raise SingularAtOmega("b_n(z, p) is singular at z = sign(p)")
    return weierstrass_w(n, x / shifted) / weierstrass_w(n, -x * omega * z / shifted)


def alpha_beta(z):
    """alpha = (1 + z^2)/(1 - z^2), beta = 2z/(1 - z^2)."""
    z = np.asarray(z, dtype=complex)
    denominator = 1.0 - z * z
    if np.any(np.abs(denominator) < _POLE_TOL):
        raise PoleHit("alpha and beta have poles at z = +1 and -1")
    return AlphaBeta(alpha=(1.0 + z * z) / denominator, beta=2.0 * z / denominator)


def renorm_q(z, p):
    """q(z, p) = b(z, p) exp(-alpha(z) log|p| - beta(z) (p - 1/p) / 2).

    q(0, p) = 1 and q'(0, p) = 0; |q| = 1 on the circle away from +1, -1.
    """
    p = _check_zero(p)
    if p == 0.0:
        raise ValueError("renorm_q needs p != 0")
    weights = alpha_beta(z)
    return blaschke_b(z, p) * np.exp(
        -weights.alpha * np.log(abs(p)) - 0.5 * weights.beta * (p - 1.0 / p)
    )


def factorization_terms(p):
    """(A(p), B(p)) with q = b_2 exp(-alpha A - beta B / 2).

    A(p) = log|p| + (1 - |p|) + (1 - |p|)^2 / 2 and B(p) = -(1 - |p|)^3 / p
    are both O((1 - |p|)^3).
    """
    p = _check_zero(p)
    x = 1.0 - abs(p)
    return np.log(abs(p)) + x + 0.5 * x * x, -(x ** 3) / p


def q_bound(p, delta):
    """Upper bound for |q(z, p) - 1| on |z| < 1 - delta, valid when
    1 - |p| < delta / 2."""
    p = _check_zero(p)
    x = 1.0 - abs(p)
    if not 0 < delta <= 1:
        raise ValueError("delta must lie in (0, 1]")
    if x >= delta / 2.0:
        return np.inf
    inverse = 1.0 / (delta * abs(p))
    cube = x ** 3
    growth = np.exp(5.0 / 3.0 * inverse * cube)
    leading = 4.0 / delta ** 3
    return (leading + 5.0 / 3.0 * (1.0 + leading) * inverse * growth) * cube
