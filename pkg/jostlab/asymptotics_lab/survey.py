"""Counting bound states of finite sections and the sums of (|E| - 2)^q."""
import logging

import numpy as np
import pandas as pd

from jostlab.weyl_m.spectrum import DEFAULT_TOL, spectrum

logger = logging.getLogger(__name__)

GROWTH_THRESHOLD = 0.01


def _column(prefix, q):
    return "{}_q={:g}".format(prefix, q)


def _relative_change(current, previous):
    if previous == 0:
        return 0.0 if current == 0 else np.inf
    return (current - previous) / previous


def bound_state_survey(
    params,
    q_exponents,
    trunc_sizes,
    tol=DEFAULT_TOL,
    threshold=GROWTH_THRESHOLD,
):
    """One row per truncation N with the number of converged eigenvalues
    outside [-2, 2] and, for each q, the sum of (|E| - 2)^q over them.

    Eigenvalues count as converged when the section of size N - N // 5
    has one within tol. growth_q columns hold the relative change from
    the previous row and status_q marks it "grows" above threshold,
    "stable" otherwise.
    """
    trunc_sizes = [int(size) for size in trunc_sizes]
    if any(lo >= hi for lo, hi in zip(trunc_sizes, trunc_sizes[1:])):
        raise ValueError("Truncation sizes must be increasing")
    q_exponents = [float(q) for q in q_exponents]
    if not q_exponents or any(q <= 0 for q in q_exponents):
        raise ValueError("q exponents must be positive")

    rows = []
    for size in trunc_sizes:
        data = spectrum(params, [size - size // 5, size], tol).converged_only()
        excess = np.abs(data.energies) - 2.0
        row = {"trunc": size, "count": int(excess.size)}
        for q in q_exponents:
            row[_column("sum", q)] = float(np.sum(excess ** q))
        rows.append(row)
        logger.info("truncation %d: %d bound states", size, excess.size)

    table = pd.DataFrame(rows)
    for q in q_exponents:
        sums = table[_column("sum", q)].tolist()
        growth = [np.nan] + [
            _relative_change(current, previous)
            for previous, current in zip(sums, sums[1:])
        ]
        table[_column("growth", q)] = growth
        table[_column("status", q)] = [
            None if np.isnan(value) else ("grows" if value > threshold else "stable")
            for value in growth
        ]
    return table
