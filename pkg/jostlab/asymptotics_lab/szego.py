import logging

import numpy as np

from jostlab.asymptotics_lab.jost_routes import jost_via_weyl
from jostlab.recursions.disk import as_disk_point
from jostlab.recursions.polynomials import DEFAULT_MAX_N, scaled_polys, szego_limit
from jostlab.weyl_m.m_function import wtilde_sequence

logger = logging.getLogger(__name__)

SZEGO_TOL = 1e-8


def szego_limit_check(params, z, tol=SZEGO_TOL, max_n=DEFAULT_MAX_N):
    """Compare lim c_n(z) with u(z) / (1 - z^2).

    Returns a dict with c_limit, u, residual = |(1 - z^2) c_limit - u|,
    equivalence_residual = |(1 - z^2) c_limit w~_inf - 1| and n_used.

    Both limits use the stability window rule, so the increments of c_n
    must drop below tol before max_n. For coefficients decaying like
    n^-s that takes n of order tol^(-1/s). An n^-1.5 tail settles to
    1e-6 near n = 10^4 and does not reach SZEGO_TOL within the default
    max_n, so such tails are checked with a looser tol.

    :raises NonConvergence: if either limit does not settle by max_n.
    """
    point = as_disk_point(z)
    c_limit, info = szego_limit(params, point, tol, max_n, full_output=True)
    u = jost_via_weyl(params, point, tol, max_n)
    scaled = (1.0 - point.z ** 2) * c_limit
    record = {
        "c_limit": c_limit,
        "u": u,
        "residual": abs(scaled - u),
        "equivalence_residual": abs(scaled / u - 1.0),
        "n_used": info["n_used"],
    }
    logger.debug("Szego check at %s: %s", point.z, record)
    return record


def szego_rate_fit(params, z, n_values):
    """Slope of log|(1 - z^2) c_n w~_n - 1| against n.

    Residuals at roundoff level are left out of the fit. Returns a dict
    with slope, expected = 2 log|z|, and the residuals.
    """
    point = as_disk_point(z)
    n_values = np.asarray(sorted(n_values), dtype=int)
    if n_values.size < 2:
        raise ValueError("Need at least two n values for a rate fit")
    top = int(n_values[-1])
    c = scaled_polys(params, point.z, top).astype(complex)
    wt = wtilde_sequence(params, point, top)
    residuals = np.abs((1.0 - point.z ** 2) * c[n_values] * wt[n_values] - 1.0)
    usable = residuals > 1e-14
    if np.count_nonzero(usable) < 2:
        raise ValueError("Residuals reach roundoff before the rate can be fitted")
    slope = np.polyfit(n_values[usable], np.log(residuals[usable]), 1)[0]
    return {
        "slope": float(slope),
        "expected": float(2.0 * np.log(abs(point.z))),
        "n_values": n_values.tolist(),
        "residuals": residuals.tolist(),
    }
