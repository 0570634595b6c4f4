import logging
from collections import namedtuple

import numpy as np

logger = logging.getLogger(__name__)

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"

DEFAULT_TOL = 1e-8
DEFAULT_RATE = 0.1
DEFAULT_DIVERGENCE = 1e-3
_CHECKPOINTS = 4


ConditionReport = namedtuple(
    "ConditionReport",
    [
        "sum_sq",
        "log_prod_partials",
        "b_sum_partials",
        "g_sum",
        "k_bound",
        "alpha_ok",
        "beta_ok",
        "gamma_ok",
        "gamma_leading",
        "lambda_n",
        "horizon",
        "tail_window",
        "oscillations",
    ],
)


def g_function(a):
    """G(a) = a^2 - 1 - 2 log a, nonnegative on (0, inf)."""
    a = np.asarray(a, dtype=float)
    return a ** 2 - 1.0 - 2.0 * np.log(a)


def _partial_sums(values):
    dtype = np.longdouble if values.size > 10 ** 4 else float
    return np.cumsum(values, dtype=dtype).astype(float)


def _window(partials, end, window):
    segment = partials[max(0, end - window) : end]
    return segment


def tail_verdict(
    partials,
    tail_window,
    tol=DEFAULT_TOL,
    rate=DEFAULT_RATE,
    divergence=DEFAULT_DIVERGENCE,
):
    """Ternary Cauchy verdict for a sequence of partial sums.

    The oscillation max-min over the last `tail_window` entries is measured
    at the horizon and at dyadic fractions of it. The verdict holds if it is
    below tol at the horizon or decays like a power of N with exponent at
    most -rate. It fails if it does not decay and the sums drift
    monotonically by more than `divergence` inside the window.

    Returns (verdict, oscillation at the horizon).
    """
    horizon = partials.size
    checkpoints, oscillations = [], []
    for level in range(_CHECKPOINTS):
        end = horizon // 2 ** level
        window = max(2, tail_window // 2 ** level)
        if end < window:
            break
        segment = _window(partials, end, window)
        checkpoints.append(end)
        oscillations.append(float(segment.max() - segment.min()))

    oscillation = oscillations[0]
    if oscillation < tol:
        return HOLDS, oscillation

    positive = [(n, v) for n, v in zip(checkpoints, oscillations) if v > 0]
    if len(positive) < 2:
        return INCONCLUSIVE, oscillation
    log_n, log_v = np.log(np.array(positive)).T
    slope = np.polyfit(log_n, log_v, 1)[0]
    if slope <= -rate:
        return HOLDS, oscillation

    segment = _window(partials, horizon, tail_window)
    steps = np.diff(segment)
    monotone = np.all(steps >= 0) or np.all(steps <= 0)
    drift = abs(segment[-1] - segment[0])
    if slope > -rate / 4.0 and monotone and drift > divergence:
        return FAILS, oscillation
    return INCONCLUSIVE, oscillation


def check_conditions(
    params,
    horizon,
    tail_window=None,
    tol=DEFAULT_TOL,
    rate=DEFAULT_RATE,
    divergence=DEFAULT_DIVERGENCE,
):
    """Partial sums, the K quantity and ternary verdicts for square
    summability (alpha), convergence of prod a_n (beta) and of sum b_n
    (gamma), all up to `horizon`.

    :raises HorizonExceeded: if horizon lies beyond the generator horizon.
    """
    horizon = int(horizon)
    if tail_window is None:
        tail_window = max(2, horizon // 10)
    tail_window = int(tail_window)
    if not horizon >= tail_window >= 2:
        raise ValueError(
            "Need horizon >= tail_window >= 2, got {} and {}".format(
                horizon, tail_window
            )
        )

    a, b = params.coefficients(horizon)
    sq_partials = _partial_sums((a - 1.0) ** 2 + b ** 2)
    log_prod_partials = _partial_sums(np.log(a))
    b_sum_partials = _partial_sums(b)
    g_partials = _partial_sums(g_function(a) + 0.5 * b ** 2)

    k_bound = float(
        np.max(np.abs(log_prod_partials) + np.abs(b_sum_partials)) + sq_partials[-1]
    )

    verdicts = {}
    oscillations = {}
    for name, partials in (
        ("alpha", sq_partials),
        ("beta", log_prod_partials),
        ("gamma", b_sum_partials),
    ):
        verdicts[name], oscillations[name] = tail_verdict(
            partials, tail_window, tol=tol, rate=rate, divergence=divergence
        )
        if verdicts[name] == INCONCLUSIVE:
            logger.warning(
                "Condition %s is inconclusive at horizon %d (oscillation %.3g)",
                name,
                horizon,
                oscillations[name],
            )

    return ConditionReport(
        sum_sq=float(sq_partials[-1]),
        log_prod_partials=log_prod_partials,
        b_sum_partials=b_sum_partials,
        g_sum=float(max(g_partials[-1], 0.0)),
        k_bound=k_bound,
        alpha_ok=verdicts["alpha"],
        beta_ok=verdicts["beta"],
        gamma_ok=verdicts["gamma"],
        gamma_leading=float(np.exp(-log_prod_partials[-1])),
        lambda_n=float(b_sum_partials[-1]),
        horizon=horizon,
        tail_window=tail_window,
        oscillations=oscillations,
    )


def limit_product_a(params, horizon, tail_window=None, tol=DEFAULT_TOL):
    """Estimate of the conditional limit prod a_n together with its verdict.
    For free tails the product is exact."""
    if params.is_free_tail:
        return float(np.prod(params.a_head)), HOLDS
    report = check_conditions(params, horizon, tail_window, tol)
    estimate = float(np.exp(np.mean(report.log_prod_partials[-2:])))
    return estimate, report.beta_ok


def limit_sum_b(params, horizon, tail_window=None, tol=DEFAULT_TOL):
    if params.is_free_tail:
        return float(np.sum(params.b_head)), HOLDS
    report = check_conditions(params, horizon, tail_window, tol)
    return float(np.mean(report.b_sum_partials[-2:])), report.gamma_ok
