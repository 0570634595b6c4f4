import logging

import numpy as np

from jostlab.recursions.geronimo_case import exact_jost, gc_limit
from jostlab.recursions.polynomials import scaled_polys

logger = logging.getLogger(__name__)

DEFAULT_EXPONENT = 2.5
DEFAULT_ANGLES = 64


def sampled_power_bound(
    params,
    sector,
    n_values,
    r_values,
    n_angles=DEFAULT_ANGLES,
    exponent=DEFAULT_EXPONENT,
):
    """sup over n and z = r e^{i theta} in the sector of

        |z^n p_n(z + 1/z) (1 - z^2) / u(z)| (1 - |z|)^exponent

    Returns a dict with sup_scaled and the (n, r, theta) where it is
    attained.
    """
    theta0, theta1 = sector
    if not 0 < theta0 < theta1 < np.pi:
        raise ValueError("The sector must satisfy 0 < theta0 < theta1 < pi")
    radii = np.asarray(r_values, dtype=float)
    if radii.size == 0 or np.any(radii <= 0) or np.any(radii >= 1):
        raise ValueError("r_values must lie in (0, 1)")
    n_values = np.asarray(n_values, dtype=int)
    if n_values.size == 0 or np.any(n_values < 0):
        raise ValueError("n_values must be nonnegative")

    angles = np.linspace(theta0, theta1, n_angles)
    grid = radii[:, None] * np.exp(1j * angles[None, :])
    if params.is_free_tail:
        u = exact_jost(params, grid)
    else:
        u = np.array([gc_limit(params, z) for z in grid.ravel()]).reshape(grid.shape)

    c = scaled_polys(params, grid, int(n_values.max()))[n_values].astype(complex)
    scaled = np.abs(c * (1.0 - grid ** 2) / u) * (1.0 - radii[:, None]) ** exponent
    n_index, r_index, theta_index = np.unravel_index(np.argmax(scaled), scaled.shape)
    record = {
        "sup_scaled": float(scaled[n_index, r_index, theta_index]),
        "n": int(n_values[n_index]),
        "r": float(radii[r_index]),
        "theta": float(angles[theta_index]),
    }
    logger.debug("power bound: %s", record)
    return record
