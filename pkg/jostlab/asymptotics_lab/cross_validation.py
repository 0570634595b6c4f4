import logging
import os
from collections import OrderedDict, namedtuple
from multiprocessing.pool import ThreadPool

import numpy as np

from jostlab.asymptotics_lab.jost_routes import jost_via_factorization, jost_via_weyl
from jostlab.determinants.det2 import jost_via_det
from jostlab.exceptions import HorizonExceeded, NumericFailure
from jostlab.recursions.disk import as_disk_point
from jostlab.recursions.geronimo_case import gc_limit
from jostlab.weyl_m.spectrum import spectrum

logger = logging.getLogger(__name__)

METHODS = ("weyl", "det", "gc", "fact")
QUADRATURE_METHODS = ("fact",)
DEFAULT_TOL = 1e-6
DEFAULT_FACT_TOL = 1e-4
THREADS_VARIABLE = "JOSTLAB_THREADS"

Absent = namedtuple("Absent", ["reason", "message"])


def _is_absent(value):
    return isinstance(value, Absent)


def discrepancy(first, second):
    """|u_i - u_j| / max(|u_i|, |u_j|), 0 when both vanish."""
    scale = max(abs(first), abs(second))
    if scale == 0:
        return 0.0
    return abs(first - second) / scale


class JostReport(object):
    """Values of the Jost function at one point by every method.

    values maps a method name to a complex value or an Absent entry;
    pairwise_disc is the symmetric matrix of relative discrepancies in
    METHODS order, NaN where a method is absent.
    """

    def __init__(
        self, z, values, diagnostics, tol=DEFAULT_TOL, fact_tol=DEFAULT_FACT_TOL
    ):
        self.z = as_disk_point(z)
        self.values = OrderedDict((method, values[method]) for method in METHODS)
        self.diagnostics = diagnostics
        self.pairwise_disc = np.full((len(METHODS), len(METHODS)), np.nan)
        self.flags = []
        for i, first in enumerate(METHODS):
            for j, second in enumerate(METHODS):
                if _is_absent(self.values[first]) or _is_absent(self.values[second]):
                    continue
                value = discrepancy(self.values[first], self.values[second])
                self.pairwise_disc[i, j] = value
                limit = (
                    fact_tol
                    if first in QUADRATURE_METHODS or second in QUADRATURE_METHODS
                    else tol
                )
                if i < j and value > limit:
                    self.flags.append((first, second))

    @property
    def u_weyl(self):
        return self.values["weyl"]

    @property
    def u_det(self):
        return self.values["det"]

    @property
    def u_gc(self):
        return self.values["gc"]

    @property
    def u_fact(self):
        return self.values["fact"]

    @property
    def consistent(self):
        return not self.flags

    def to_dict(self):
        values = {}
        for method, value in self.values.items():
            if _is_absent(value):
                values[method] = {"absent": value.reason, "message": value.message}
            else:
                values[method] = value
        return {
            "z": self.z.z,
            "values": values,
            "pairwise_disc": [
                [None if np.isnan(entry) else float(entry) for entry in row]
                for row in self.pairwise_disc
            ],
            "methods": list(METHODS),
            "flags": ["{}/{}".format(*pair) for pair in self.flags],
            "diagnostics": self.diagnostics,
        }


def thread_count(threads):
    """threads capped by the JOSTLAB_THREADS environment variable."""
    cap = os.environ.get(THREADS_VARIABLE)
    if cap is not None:
        threads = min(threads, max(1, int(cap)))
    return max(1, int(threads))


def _attempt(method, compute):
    try:
        value, info = compute()
        return value, info
    except (NumericFailure, HorizonExceeded) as error:
        reason = getattr(error, "reason", type(error).__name__)
        logger.warning("%s route failed: %s (%s)", method, reason, error)
        return Absent(reason, str(error)), {}


def _evaluate(params, z, spec, options):
    point = as_disk_point(z)
    routes = {
        "weyl": lambda: jost_via_weyl(
            params, point, options["tol"], options["max_n"], full_output=True
        ),
        "det": lambda: jost_via_det(
            params, point, options["n_trunc"], full_output=True
        ),
        "gc": lambda: gc_limit(
            params, point, options["tol"], options["max_n"], full_output=True
        ),
        "fact": lambda: jost_via_factorization(
            params, point, spec, options["quad_tol"], full_output=True
        ),
    }
    values, diagnostics = {}, {}
    for method in METHODS:
        values[method], diagnostics[method] = _attempt(method, routes[method])
    return point, values, diagnostics


def cross_validate(
    params,
    z_grid,
    tol=DEFAULT_TOL,
    fact_tol=DEFAULT_FACT_TOL,
    threads=1,
    spec=None,
    method_tol=1e-10,
    max_n=100000,
    n_trunc=200,
    quad_tol=1e-10,
):
    """JostReport for every point of z_grid. Failing methods are recorded
    as Absent entries and never abort the run."""
    if len(z_grid) == 0:
        raise ValueError("grid nonempty")
    if spec is None:
        spec = spectrum(params)
    options = {
        "tol": method_tol,
        "max_n": max_n,
        "n_trunc": n_trunc,
        "quad_tol": quad_tol,
    }

    def work(z):
        return _evaluate(params, z, spec, options)

    threads = thread_count(threads)
    if threads > 1:
        pool = ThreadPool(processes=threads)
        try:
            results = pool.map(work, list(z_grid))
        finally:
            pool.close()
            pool.join()
    else:
        results = [work(z) for z in z_grid]

    reports = [
        JostReport(point, values, diagnostics, tol, fact_tol)
        for point, values, diagnostics in results
    ]
    flagged = sum(1 for report in reports if report.flags)
    if flagged:
        logger.warning(
            "%d of %d grid points disagree beyond tolerance", flagged, len(reports)
        )
    return reports
