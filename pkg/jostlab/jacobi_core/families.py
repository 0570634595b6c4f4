"""Named parameter families used throughout the experiments."""
import logging
import math

import numpy as np

from jostlab.jacobi_core.params import FREE_TAIL, GeneratorTail, JacobiParams

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = 10 ** 6

_SIGNS = ("alternating", "positive")
_TARGETS = ("a", "b")


def free():
    return JacobiParams((), (), FREE_TAIL)


def rank_one(beta, a1=1.0):
    """b_1 = beta (and optionally a_1 = a1), free beyond."""
    return JacobiParams((a1,), (beta,), FREE_TAIL)


def power_family(
    exponent, sign="alternating", target="b", scale=1.0, horizon=DEFAULT_HORIZON
):
    """Decaying perturbation scale * s_n * n^(-exponent), with s_n = (-1)^n
    for alternating signs and 1 otherwise. target="b" places it on the
    diagonal, target="a" adds it to a_n = 1."""
    if sign not in _SIGNS:
        raise ValueError("sign must be one of {}, got {}".format(_SIGNS, sign))
    if target not in _TARGETS:
        raise ValueError("target must be one of {}, got {}".format(_TARGETS, target))
    if exponent <= 0:
        raise ValueError("Power family needs a positive exponent")
    if target == "a" and abs(scale) >= 1:
        raise ValueError("|scale| < 1 is required to keep a_n positive")

    def rule(n):
        values = scale * np.power(n.astype(float), -exponent)
        if sign == "alternating":
            values = np.where(n % 2 == 0, values, -values)
        if target == "a":
            return 1.0 + values, 0.0
        return 1.0, values

    description = "{} {}_n = {} n^-{}".format(sign, target, scale, exponent)
    return JacobiParams((), (), GeneratorTail(rule, horizon, 0, description))


def exponent_window(alpha_exp):
    """Open interval of admissible block exponents p for a given alpha."""
    return alpha_exp / (2.0 - alpha_exp), alpha_exp / (1.0 - alpha_exp)


def section9_blocks(alpha_exp, p_exp, c1, m0, horizon):
    """Integer block endpoints [lo_m, hi_m] and signs for m >= m0 whose
    block starts at or below horizon. Endpoints use floor rounding."""
    lows, highs, signs = [], [], []
    m = m0
    while True:
        center = float(m) ** (p_exp + 1)
        half_width = c1 * float(m) ** p_exp
        low = int(math.floor(center - half_width + 1e-9))
        if low > horizon:
            break
        high = int(math.floor(center + half_width + 1e-9))
        lows.append(max(low, 1))
        highs.append(high)
        signs.append(1.0 if m % 2 == 0 else -1.0)
        m += 1
    return (
        np.array(lows, dtype=np.int64),
        np.array(highs, dtype=np.int64),
        np.array(signs),
    )


def section9_family(alpha_exp, p_exp, c1, m0, horizon=DEFAULT_HORIZON):
    """a_n = 1 and b_n = +/- n^(-alpha) on the blocks
    [m^(p+1) - c1 m^p, m^(p+1) + c1 m^p], m >= m0, zero elsewhere. The sign
    is positive on even m and negative on odd m.

    :raises ValueError: for exponents outside the admissible window or
        blocks that are not separated by at least two sites.
    """
    if not 0.5 < alpha_exp < 1.0:
        raise ValueError("alpha must lie in (1/2, 1), got {}".format(alpha_exp))
    lower, upper = exponent_window(alpha_exp)
    if not lower < p_exp < upper:
        raise ValueError(
            "p={} violates alpha/(2-alpha) = {:.6g} < p < alpha/(1-alpha) = {:.6g}".format(
                p_exp, lower, upper
            )
        )
    if not 0 < c1 < 0.5 * (p_exp + 1):
        raise ValueError("c1 must lie in (0, (p+1)/2), got {}".format(c1))
    if m0 < 1:
        raise ValueError("m0 must be a positive integer")

    lows, highs, signs = section9_blocks(alpha_exp, p_exp, c1, m0, horizon)
    gaps = lows[1:] - highs[:-1]
    if gaps.size and gaps.min() < 2:
        bad = int(np.argmin(gaps))
        raise ValueError(
            "Blocks {} and {} are separated by {} < 2 sites".format(
                m0 + bad, m0 + bad + 1, gaps[bad]
            )
        )
    logger.debug("section9 family with %d blocks up to %d", lows.size, horizon)

    def rule(n):
        block = np.searchsorted(lows, n, side="right") - 1
        inside = block >= 0
        inside[inside] &= n[inside] <= highs[block[inside]]
        values = np.zeros(n.shape)
        values[inside] = signs[block[inside]] * np.power(
            n[inside].astype(float), -alpha_exp
        )
        return 1.0, values

    description = "section9 alpha={} p={} c1={} m0={}".format(alpha_exp, p_exp, c1, m0)
    return JacobiParams((), (), GeneratorTail(rule, horizon, 0, description))
