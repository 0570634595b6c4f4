"""Partial sums governing the Taylor coefficients of log w~_n at z = 0."""
from collections import namedtuple

import numpy as np

from jostlab.jacobi_core.conditions import g_function

TaylorDiagnostics = namedtuple(
    "TaylorDiagnostics",
    [
        "nu1_partials",
        "nu2_partials",
        "nu3_partials",
        "g_partials",
        "g_sum",
        "nu1_limit",
        "nu2_limit",
        "nu3_limit",
    ],
)


def _cumsum(values):
    dtype = np.longdouble if values.size > 10 ** 4 else float
    return np.cumsum(values, dtype=dtype).astype(float)


def _averaged_limit(partials):
    """Mean of the last two partial sums: removes the leading
    oscillation of an alternating tail."""
    if partials.size < 2:
        return float(partials[-1])
    return float(0.5 * (partials[-1] + partials[-2]))


def taylor_diagnostics(params, horizon):
    """Partial sums of log a_j, b_j, a_j^2 - 1 + b_j^2 / 2 and
    G(a_j) + b_j^2 / 2 for j <= horizon, with averaged limits of the
    first three."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    a, b = params.coefficients(horizon)
    nu1 = _cumsum(np.log(a))
    nu2 = _cumsum(b)
    nu3 = _cumsum(a ** 2 - 1.0 + 0.5 * b ** 2)
    g_partials = _cumsum(g_function(a) + 0.5 * b ** 2)
    return TaylorDiagnostics(
        nu1_partials=nu1,
        nu2_partials=nu2,
        nu3_partials=nu3,
        g_partials=g_partials,
        g_sum=float(g_partials[-1]),
        nu1_limit=_averaged_limit(nu1),
        nu2_limit=_averaged_limit(nu2),
        nu3_limit=_averaged_limit(nu3),
    )
