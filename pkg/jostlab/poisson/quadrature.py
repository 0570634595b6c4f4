import logging
from collections import namedtuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from jostlab.exceptions import ExtrapolationUnstable, QuadratureFailure

logger = logging.getLogger(__name__)


class QuadratureSpec(
    namedtuple("QuadratureSpec", ["nodes", "panels", "tol", "max_panels"])
):
    """Composite Gauss-Legendre settings: nodes per panel, initial number
    of panels, absolute tolerance and the panel budget."""

    __slots__ = ()

    def __new__(cls, nodes=16, panels=64, tol=1e-10, max_panels=2 ** 14):
        if nodes < 2 or panels < 1 or max_panels < panels:
            raise ValueError("Invalid quadrature settings")
        if not tol > 0:
            raise ValueError("Quadrature tolerance must be > 0")
        return super(QuadratureSpec, cls).__new__(
            cls, int(nodes), int(panels), float(tol), int(max_panels)
        )


DEFAULT_QUADRATURE = QuadratureSpec()
MIN_PANEL_FRACTION = 2.0 ** -60


def _panel_values(func, lows, highs, nodes, weights):
    half = 0.5 * (highs - lows)
    middle = 0.5 * (highs + lows)
    points = middle[:, None] + half[:, None] * nodes[None, :]
    values = np.asarray(func(points.ravel())).reshape(points.shape)
    return half * values.dot(weights)


def adaptive_gauss_legendre(
    func, lower, upper, spec=DEFAULT_QUADRATURE, full_output=False
):
    """Integral of a vectorized func over (lower, upper).

    Starts from spec.panels equal panels and bisects every panel whose
    value disagrees with the sum over its halves by more than its share of
    spec.tol. Nodes never touch the endpoints, and singular endpoint
    behavior is resolved by repeated bisection of the outer panels down to
    MIN_PANEL_FRACTION of the interval, where a panel is always accepted.

    :raises QuadratureFailure: if more than spec.max_panels panels are needed.
    """
    nodes, weights = leggauss(spec.nodes)
    length = float(upper - lower)
    edges = np.linspace(lower, upper, spec.panels + 1)
    lows, highs = edges[:-1], edges[1:]
    coarse = _panel_values(func, lows, highs, nodes, weights)

    total = 0.0
    error = 0.0
    accepted = 0
    while lows.size:
        middles = 0.5 * (lows + highs)
        left = _panel_values(func, lows, middles, nodes, weights)
        right = _panel_values(func, middles, highs, nodes, weights)
        fine = left + right
        estimate = np.abs(fine - coarse)
        widths = highs - lows
        done = (estimate <= spec.tol * widths / length) | (
            widths <= MIN_PANEL_FRACTION * length
        )
        total = total + np.sum(fine[done])
        error += float(np.sum(estimate[done]))
        accepted += int(np.count_nonzero(done))

        refine = ~done
        lows = np.concatenate([lows[refine], middles[refine]])
        highs = np.concatenate([middles[refine], highs[refine]])
        coarse = np.concatenate([left[refine], right[refine]])
        if accepted + lows.size > spec.max_panels:
            raise QuadratureFailure(
                "Panel refinement exceeded {} panels (tolerance {})".format(
                    spec.max_panels, spec.tol
                )
            )
    logger.debug("quadrature used %d panels, error estimate %.3g", accepted, error)
    if full_output:
        return total, {"panels": accepted, "error": error}
    return total


def richardson(steps, values, atol=1e-8):
    """Extrapolate values(h) to h = 0 with Neville's scheme.

    steps are the h values, ordered from largest to smallest; values may
    carry trailing array dimensions. The diagonal estimate with the
    smallest increment is returned together with that increment.

    :raises ExtrapolationUnstable: if the increments grow from the start.
    """
    steps = np.asarray(steps, dtype=float)
    table = np.array(values, dtype=complex if np.iscomplexobj(values) else float)
    count = steps.size
    if count < 2:
        raise ValueError("Extrapolation needs at least two points")

    estimates = [table[-1].copy()]
    columns = table.copy()
    for level in range(1, count):
        upper = columns[1:]
        lower = columns[:-1]
        h_far = steps[: count - level].reshape((-1,) + (1,) * (table.ndim - 1))
        h_near = steps[level:].reshape((-1,) + (1,) * (table.ndim - 1))
        columns = (h_far * upper - h_near * lower) / (h_far - h_near)
        estimates.append(columns[-1].copy())

    increments = [
        np.max(np.abs(estimates[k] - estimates[k - 1])) for k in range(1, count)
    ]
    if len(increments) > 1 and increments[1] > increments[0] + atol:
        raise ExtrapolationUnstable(
            "Extrapolation increments grow: {}".format(
                ", ".join("{:.3g}".format(value) for value in increments)
            )
        )
    best = int(np.argmin(increments)) + 1
    return estimates[best], increments[best - 1]
