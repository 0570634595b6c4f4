import logging
import warnings

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor

from jostlab.determinants.resolvent import build_k
from jostlab.exceptions import BetaFailure, NonConvergence, PoleHit
from jostlab.jacobi_core.conditions import FAILS, HOLDS, limit_product_a, tail_verdict
from jostlab.jacobi_core.params import strip
from jostlab.recursions.disk import as_disk_point
from jostlab.weyl_m.m_function import m_function, wtilde

logger = logging.getLogger(__name__)

DEFAULT_N_TRUNC = 200
MAX_N_TRUNC = 3200
TRUNC_TOL = 1e-10
DEFAULT_HORIZON = 10 ** 5
DEFAULT_TOL = 1e-6


def _entries(matrix):
    return getattr(matrix, "entries", matrix)


def det_classical(matrix):
    """det(1 + A) from an LU factorization with partial pivoting. A
    singular 1 + A gives 0."""
    entries = np.asarray(_entries(matrix), dtype=complex)
    if entries.size == 0:
        return 1.0 + 0j
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, pivots = lu_factor(np.eye(entries.shape[0]) + entries, check_finite=False)
    diagonal = np.diag(lu)
    if np.any(diagonal == 0):
        return 0j
    swaps = np.count_nonzero(pivots != np.arange(pivots.size))
    magnitude = np.exp(np.sum(np.log(np.abs(diagonal))))
    phase = np.prod(diagonal / np.abs(diagonal))
    return complex((-1) ** swaps * magnitude * phase)


def det2(matrix):
    """Regularized determinant det_2(1 + A) = det(1 + A) exp(-tr A)."""
    entries = np.asarray(_entries(matrix), dtype=complex)
    return det_classical(entries) * complex(np.exp(-np.trace(entries)))


def _horizon(params, horizon):
    if params.max_index is not None:
        return min(int(horizon), params.max_index)
    return int(horizon)


def _conditional_sum(partials, window, tol):
    averaged = 0.5 * (partials[1:] + partials[:-1])
    verdict, oscillation = tail_verdict(averaged, window, tol=tol)
    return float(np.mean(partials[-2:])), verdict, oscillation


def t_renorm(params, z, horizon=DEFAULT_HORIZON, tol=DEFAULT_TOL, full_output=False):
    """T(z; J), the renormalized trace

        -(1/z - z)^{-1} [sum b_n (1 - z^{2n}) + 2 sum (a_n - 1)(z - z^{2n+1})].

    The conditionally convergent sums of b_n and a_n - 1 are estimated from
    their partial sums up to the horizon; the z-power parts converge
    absolutely. Free tails are summed exactly.

    :raises NonConvergence: if the averaged partial sums neither settle
        below tol nor decay like a power of the horizon.
    """
    z = as_disk_point(z).z
    if z == 0:
        raise ValueError("T is evaluated at z != 0")
    if abs(1.0 - z * z) < 1e-15:
        raise PoleHit("T has poles at z = +1 and -1")
    prefactor = -z / (1.0 - z * z)

    if params.is_free_tail:
        n = params.head_length
        a, b = params.coefficients(n)
        indices = np.arange(1, n + 1)
        bracket = np.sum(b * (1.0 - z ** (2 * indices))) + 2.0 * np.sum(
            (a - 1.0) * (z - z ** (2 * indices + 1))
        )
        value = complex(prefactor * bracket)
        return (value, 0.0) if full_output else value

    horizon = _horizon(params, horizon)
    a, b = params.coefficients(horizon)
    indices = np.arange(1, horizon + 1)
    window = max(2, horizon // 10)
    b_sum, b_verdict, b_tail = _conditional_sum(
        np.cumsum(b, dtype=np.longdouble), window, tol
    )
    a_sum, a_verdict, a_tail = _conditional_sum(
        np.cumsum(a - 1.0, dtype=np.longdouble), window, tol
    )
    tail_estimate = max(b_tail, a_tail)
    if b_verdict != HOLDS or a_verdict != HOLDS:
        raise NonConvergence(
            "Partial sums of b_n and a_n - 1 oscillate by {:.3g} at horizon {}".format(
                tail_estimate, horizon
            ),
            oscillation=tail_estimate,
            n_used=horizon,
        )
    powers = z ** (2 * indices)
    bracket = (
        b_sum
        - np.sum(b * powers)
        + 2.0 * (z * a_sum - z * np.sum((a - 1.0) * powers))
    )
    value = complex(prefactor * bracket)
    logger.debug("T(%s) = %s with tail estimate %.3g", z, value, tail_estimate)
    return (value, tail_estimate) if full_output else value


def _l_ren_at(params, z, n_trunc, t_value):
    return det2(build_k(params, z, n_trunc)) * np.exp(t_value)


def l_ren(
    params,
    z,
    n_trunc=DEFAULT_N_TRUNC,
    horizon=DEFAULT_HORIZON,
    tol=DEFAULT_TOL,
    full_output=False,
):
    """L_ren(z, J) = det_2(1 + A) exp(T(z; J)).

    Free tails are exact at n_trunc = head length + 1, where every nonzero
    row of A is kept. Otherwise n_trunc is doubled up to MAX_N_TRUNC until
    successive values agree to TRUNC_TOL.
    """
    point = as_disk_point(z)
    t_value, tail_estimate = t_renorm(params, point, horizon, tol, full_output=True)

    if params.is_free_tail:
        n_used = params.head_length + 1
        value = _l_ren_at(params, point, n_used, t_value)
    else:
        n_used = int(n_trunc)
        if params.max_index is not None:
            n_used = min(n_used, params.max_index)
        value = _l_ren_at(params, point, n_used, t_value)
        while True:
            if n_used >= MAX_N_TRUNC:
                logger.warning(
                    "L_ren did not settle to %g before n_trunc = %d", TRUNC_TOL, n_used
                )
                break
            larger = 2 * n_used
            if params.max_index is not None and larger > params.max_index:
                logger.warning("L_ren truncation limited by the generator horizon")
                break
            refined = _l_ren_at(params, point, larger, t_value)
            change = abs(refined - value)
            value, n_used = refined, larger
            if change < TRUNC_TOL:
                break

    value = complex(value)
    if full_output:
        return value, {
            "l_ren": value,
            "n_trunc_used": n_used,
            "t_value": t_value,
            "tail_estimate": tail_estimate,
        }
    return value


def jost_via_det(
    params,
    z,
    n_trunc=DEFAULT_N_TRUNC,
    horizon=DEFAULT_HORIZON,
    tol=DEFAULT_TOL,
    full_output=False,
):
    """u(z) = L_ren(z, J) / lim prod a_n.

    :raises BetaFailure: if the product of the a_n is judged divergent.
    """
    product, verdict = limit_product_a(params, _horizon(params, horizon))
    if verdict == FAILS:
        raise BetaFailure("The product of the a_n does not converge")
    value, info = l_ren(params, z, n_trunc, horizon, tol, full_output=True)
    u = value / product
    if full_output:
        return u, {
            "u": u,
            "n_trunc_used": info["n_trunc_used"],
            "t_value": info["t_value"],
            "tail_estimate": info["tail_estimate"],
        }
    return u


def m_ratio_residual(params, z, n_trunc=DEFAULT_N_TRUNC, horizon=DEFAULT_HORIZON):
    """M(z, J) - z L_ren(z, J^(1)) / L_ren(z, J)."""
    point = as_disk_point(z)
    ratio = l_ren(strip(params, 1), point, n_trunc, horizon) / l_ren(
        params, point, n_trunc, horizon
    )
    return m_function(params, point) - point.z * ratio


def weyl_formula_residual(
    params, z, n, n_trunc=DEFAULT_N_TRUNC, horizon=DEFAULT_HORIZON
):
    """z^{-n} w_n - (a_1 ... a_{n-1}) L_ren(z, J^(n)) / L_ren(z, J)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    point = as_disk_point(z)
    a, _ = params.coefficients(n - 1)
    ratio = l_ren(strip(params, n), point, n_trunc, horizon) / l_ren(
        params, point, n_trunc, horizon
    )
    return wtilde(params, point, n) - float(np.prod(a)) * ratio

