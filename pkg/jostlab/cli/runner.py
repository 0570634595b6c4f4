import logging

from jostlab.asymptotics_lab.boundary_l2 import boundary_l2_error
from jostlab.asymptotics_lab.cross_validation import Absent, cross_validate
from jostlab.asymptotics_lab.jost_routes import (
    jost_via_factorization,
    jost_via_log_sum,
    jost_via_weyl,
)
from jostlab.asymptotics_lab.sum_rule import step_sum_rule_residual
from jostlab.asymptotics_lab.survey import bound_state_survey
from jostlab.cli import experiment_config
from jostlab.cli.experiment_config import command_tol
from jostlab.cli.reports import SCHEMA, write_report
from jostlab.determinants.det2 import jost_via_det
from jostlab.exceptions import NumericFailure, ValidationError
from jostlab.jacobi_core.conditions import check_conditions
from jostlab.jacobi_core.families import section9_family
from jostlab.jacobi_core.params_config import load_params
from jostlab.poisson.quadrature import QuadratureSpec
from jostlab.recursions.disk import DiskPoint
from jostlab.recursions.geronimo_case import gc_limit
from jostlab.weyl_m.m_function import m_function
from jostlab.weyl_m.spectrum import DEFAULT_TRUNC_SIZES, spectrum

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERIC = 2


def _horizon(params, config):
    if params.max_index is None:
        return config.horizon
    return min(config.horizon, params.max_index)


def _check_conditions(params, config):
    tol = command_tol(config)
    report = check_conditions(params, _horizon(params, config), tol=tol)
    return {
        "sum_sq": report.sum_sq,
        "g_sum": report.g_sum,
        "k_bound": report.k_bound,
        "alpha_ok": report.alpha_ok,
        "beta_ok": report.beta_ok,
        "gamma_ok": report.gamma_ok,
        "gamma_leading": report.gamma_leading,
        "lambda_n": report.lambda_n,
        "horizon": report.horizon,
        "tail_window": report.tail_window,
        "oscillations": report.oscillations,
    }


def _m(params, config):
    z = DiskPoint.parse(config.z)
    return {"z": z, "m": m_function(params, z, config.depth)}


def _spectrum(params, config):
    trunc = list(config.trunc or DEFAULT_TRUNC_SIZES)
    return spectrum(params, trunc, tol=command_tol(config)).to_dict()


def _gc(params, config):
    z = DiskPoint.parse(config.z)
    tol = command_tol(config)
    value, info = gc_limit(params, z, tol, config.max_n, full_output=True)
    return {
        "value": value,
        "n_used": info["n_used"],
        "oscillation": info["oscillation"],
    }


def _jost(params, config):
    z = DiskPoint.parse(config.z)
    method = config.method
    tol = command_tol(config)
    if method == "weyl":
        u, info = jost_via_weyl(params, z, tol, config.max_n, full_output=True)
    elif method == "det2":
        u, info = jost_via_det(
            params, z, config.n_trunc, _horizon(params, config), full_output=True
        )
    elif method == "fact":
        u, info = jost_via_factorization(
            params, z, quad_tol=config.quad_tol, full_output=True
        )
    elif method == "log-sum":
        u = jost_via_log_sum(params, z)
        info = {}
    else:
        u, info = gc_limit(params, z, tol, config.max_n, full_output=True)
    report = {"z": z, "method": method, "u": u}
    report.update((key, value) for key, value in info.items() if key not in report)
    return report


def _cross_validate(params, config):
    reports = cross_validate(
        params,
        [DiskPoint.parse(point) for point in config.grid],
        tol=command_tol(config),
        fact_tol=config.fact_tol,
        threads=config.threads,
        max_n=config.max_n,
        n_trunc=config.n_trunc,
        quad_tol=config.quad_tol,
    )
    rows = []
    for report in reports:
        row = {"z": report.z.z, "flags": ";".join("/".join(f) for f in report.flags)}
        for method, value in report.values.items():
            row["u_" + method] = None if isinstance(value, Absent) else value
        rows.append(row)
    return {"reports": [report.to_dict() for report in reports], "rows": rows}


def _boundary_l2(params, config):
    n_values = list(config.n or experiment_config.DEFAULT_L2_N)
    quadrature = QuadratureSpec(panels=config.quad_panels, tol=config.quad_tol)
    curve = boundary_l2_error(params, n_values, quadrature)
    rows = [
        {"n": n, "error": error, "norm": norm, "singular_norm": singular}
        for n, error, norm, singular in zip(
            curve.n_values, curve.errors, curve.norms, curve.singular_norms
        )
    ]
    return {"rows": rows}


def _survey9(params, config):
    trunc = list(config.trunc or experiment_config.DEFAULT_SURVEY_TRUNC)
    q_exponents = list(config.q or experiment_config.DEFAULT_Q)
    if params is None:
        params = section9_family(
            config.alpha, config.p, config.c1, config.m0, horizon=max(trunc)
        )
    table = bound_state_survey(params, q_exponents, trunc)
    return {"rows": table.to_dict("records")}


def _sumrule(params, config):
    z = DiskPoint.parse(config.z)
    n_values = list(config.n or experiment_config.DEFAULT_SUMRULE_N)
    rows = []
    for n in n_values:
        residual = step_sum_rule_residual(params, n, z, config.quad_tol)
        rows.append({"n": n, "residual": residual, "abs_residual": abs(residual)})
    return {"z": z, "rows": rows}


COMMAND_HANDLERS = {
    "check-conditions": _check_conditions,
    "m": _m,
    "spectrum": _spectrum,
    "gc": _gc,
    "jost": _jost,
    "cross-validate": _cross_validate,
    "boundary-l2": _boundary_l2,
    "survey9": _survey9,
    "sumrule": _sumrule,
}


def execute(config):
    """Run the command of a validated configuration and return its report.

    :raises ValidationError: if the parameter file is invalid.
    :raises ValueError: if the options do not fit the parameters.
    :raises NumericFailure: if the computation fails.
    """
    params = load_params(config.params) if config.params is not None else None
    report = {"schema": SCHEMA, "command": config.command, "status": "ok"}
    report.update(COMMAND_HANDLERS[config.command](params, config))
    return report


def run(config_dict):
    """Validate config_dict, execute it and write the report.

    Returns 0 on success, 1 if the configuration or the parameter file is
    invalid and 2 on numeric failure. A failure report carrying reason and
    message is written for numeric failures.
    """
    try:
        config = experiment_config.load_experiment_config(config_dict)
    except ValidationError as err:
        logger.error("%s", err)
        return EXIT_INVALID

    output = config.output
    try:
        report = execute(config)
    except ValueError as err:
        logger.error("%s", err)
        return EXIT_INVALID
    except NumericFailure as err:
        logger.error("%s failed: %s (%s)", config.command, err.reason, err)
        report = {
            "schema": SCHEMA,
            "command": config.command,
            "status": "numeric_failure",
            "reason": err.reason,
            "message": str(err),
        }
        write_report(report, output.path, output.format)
        return EXIT_NUMERIC

    write_report(report, output.path, output.format)
    return EXIT_OK
