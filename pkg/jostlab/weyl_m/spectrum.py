import logging

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

logger = logging.getLogger(__name__)

DEFAULT_TRUNC_SIZES = (500, 1000, 2000)
DEFAULT_TOL = 1e-8


def energy_to_disk(energy):
    """Solve z + 1/z = E for real |E| > 2 with z in (-1, 1)."""
    energy = np.asarray(energy, dtype=float)
    return 2.0 / (energy + np.sign(energy) * np.sqrt(energy ** 2 - 4.0))


class SpectrumData(object):
    """Eigenvalues of J outside [-2, 2] and their disk coordinates.

    e_plus is decreasing (E_1^+ > E_2^+ > ... > 2) and e_minus increasing
    (E_1^- < E_2^- < ... < -2). converged_plus/converged_minus flag the
    eigenvalues that were stable across the two largest truncations.
    """

    def __init__(self, e_plus, e_minus, trunc_size, converged_plus, converged_minus):
        self.e_plus = np.asarray(e_plus, dtype=float)
        self.e_minus = np.asarray(e_minus, dtype=float)
        self.trunc_size = trunc_size
        self.converged_plus = np.asarray(converged_plus, dtype=bool)
        self.converged_minus = np.asarray(converged_minus, dtype=bool)

    @property
    def z_plus(self):
        return energy_to_disk(self.e_plus)

    @property
    def z_minus(self):
        return energy_to_disk(self.e_minus)

    @property
    def all_converged(self):
        return bool(np.all(self.converged_plus) and np.all(self.converged_minus))

    @property
    def energies(self):
        return np.concatenate([self.e_plus, self.e_minus])

    @property
    def zeros(self):
        """All disk coordinates z_j^+ and z_j^-."""
        return np.concatenate([self.z_plus, self.z_minus])

    def converged_only(self):
        return SpectrumData(
            self.e_plus[self.converged_plus],
            self.e_minus[self.converged_minus],
            self.trunc_size,
            np.ones(np.count_nonzero(self.converged_plus), dtype=bool),
            np.ones(np.count_nonzero(self.converged_minus), dtype=bool),
        )

    def __len__(self):
        return self.e_plus.size + self.e_minus.size

    def to_dict(self):
        return {
            "e_plus": self.e_plus.tolist(),
            "e_minus": self.e_minus.tolist(),
            "z_plus": self.z_plus.tolist(),
            "z_minus": self.z_minus.tolist(),
            "converged_plus": self.converged_plus.tolist(),
            "converged_minus": self.converged_minus.tolist(),
            "trunc_size": self.trunc_size,
        }


def _outside_eigenvalues(params, size, tol):
    a, b = params.coefficients(size)
    diagonal = b
    off_diagonal = a[: size - 1]
    radius = 1.0 + np.max(
        np.abs(diagonal) + np.append(off_diagonal, 0) + np.append(0, off_diagonal)
    )
    upper = eigvalsh_tridiagonal(
        diagonal,
        off_diagonal,
        select="v",
        select_range=(2.0 + tol, radius),
        lapack_driver="stebz",
    )
    lower = eigvalsh_tridiagonal(
        diagonal,
        off_diagonal,
        select="v",
        select_range=(-radius, -2.0 - tol),
        lapack_driver="stebz",
    )
    return np.sort(upper)[::-1], np.sort(lower)


def _matched(values, reference, tol):
    if reference.size == 0:
        return np.zeros(values.size, dtype=bool)
    ordered = np.sort(reference)
    if ordered.size == 1:
        nearest = np.abs(values - ordered[0])
    else:
        position = np.clip(np.searchsorted(ordered, values), 1, ordered.size - 1)
        nearest = np.minimum(
            np.abs(values - ordered[position - 1]), np.abs(values - ordered[position])
        )
    return nearest < tol


def spectrum(params, trunc_sizes=DEFAULT_TRUNC_SIZES, tol=DEFAULT_TOL):
    """Eigenvalues outside [-2, 2] by Sturm bisection of finite sections.

    Eigenvalues of the largest section are kept if |E| > 2 + tol; they are
    flagged converged when the second largest section has an eigenvalue
    within tol.
    """
    trunc_sizes = [int(size) for size in trunc_sizes]
    if len(trunc_sizes) < 2:
        raise ValueError("At least two truncation sizes are needed")
    if any(lo >= hi for lo, hi in zip(trunc_sizes, trunc_sizes[1:])):
        raise ValueError("Truncation sizes must be increasing")
    if trunc_sizes[0] < 2:
        raise ValueError("Truncation sizes must be >= 2")

    previous_plus, previous_minus = _outside_eigenvalues(params, trunc_sizes[-2], tol)
    e_plus, e_minus = _outside_eigenvalues(params, trunc_sizes[-1], tol)
    converged_plus = _matched(e_plus, previous_plus, tol)
    converged_minus = _matched(e_minus, previous_minus, tol)

    dropped = np.count_nonzero(~converged_plus) + np.count_nonzero(~converged_minus)
    if dropped:
        logger.warning(
            "%d eigenvalue(s) moved by more than %g between sections %d and %d",
            dropped,
            tol,
            trunc_sizes[-2],
            trunc_sizes[-1],
        )
    return SpectrumData(
        e_plus, e_minus, trunc_sizes[-1], converged_plus, converged_minus
    )
