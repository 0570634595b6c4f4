import numpy as np

STABILITY_WINDOW = 5
EXTENDED_PRECISION_THRESHOLD = 10 ** 4


def working_dtype(n):
    """Complex dtype for recursions of length n."""
    if n > EXTENDED_PRECISION_THRESHOLD:
        return np.clongdouble
    return np.complex128


def first_stable_index(values, tol, window=STABILITY_WINDOW):
    """Index of the first value preceded by `window` consecutive increments
    below tol, or None if there is no such run."""
    values = np.asarray(values)
    if values.shape[0] <= window:
        return None
    increments = np.abs(np.diff(values, axis=0))
    if increments.ndim > 1:
        increments = increments.reshape(increments.shape[0], -1).max(axis=1)
    small = (increments < tol).astype(int)
    runs = np.convolve(small, np.ones(window, dtype=int), mode="valid")
    hits = np.nonzero(runs == window)[0]
    if hits.size == 0:
        return None
    return int(hits[0]) + window


def tail_oscillation(values, window=STABILITY_WINDOW):
    tail = np.asarray(values)[-(window + 1) :]
    return float(np.max(np.abs(np.diff(tail, axis=0)))) if tail.shape[0] > 1 else 0.0
