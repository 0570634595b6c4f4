import logging

import numpy as np

from jostlab.blaschke.factors import alpha_beta, blaschke_b, q_bound, renorm_q

logger = logging.getLogger(__name__)


def _sorted_zeros(zeros, start_index=0):
    zeros = np.asarray(zeros, dtype=float)[start_index:]
    if np.any(np.abs(zeros) >= 1.0) or np.any(zeros == 0.0):
        raise ValueError("Zeros must lie in (-1, 1) and be nonzero")
    return zeros[np.argsort(np.abs(zeros), kind="stable")]


def renorm_product(zeros, z, start_index=0, full_output=False):
    """B_ren(z) = prod over zeros[start_index:] of q(z, p), evaluated in
    order of increasing |p|.

    With full_output the bound exp(sum |q - 1| bounds) - 1 over the zeros
    close enough to the circle for the bound to apply is returned as well;
    it is inf for boundary z.
    """
    zeros = _sorted_zeros(zeros, start_index)
    z = np.asarray(z, dtype=complex)
    alpha_beta(z)  # raises PoleHit at z = +1, -1
    value = np.ones(z.shape, dtype=complex)
    for p in zeros:
        value = value * renorm_q(z, p)

    if not full_output:
        return value

    delta = 1.0 - float(np.max(np.abs(z))) if z.size else 1.0
    if delta <= 0:
        tail_bound = np.inf
    else:
        bounds = [q_bound(p, delta) for p in zeros if 1.0 - abs(p) < delta / 2.0]
        tail_bound = float(np.expm1(np.sum(bounds))) if bounds else 0.0
    logger.debug(
        "renormalized product over %d zeros, bound %.3g", zeros.size, tail_bound
    )
    return value, tail_bound


def blaschke_product(zeros, z):
    """Classical product of b(z, p) over the zeros."""
    z = np.asarray(z, dtype=complex)
    value = np.ones(z.shape, dtype=complex)
    for p in _sorted_zeros(zeros):
        value = value * blaschke_b(z, p)
    return value
