"""JSON and CSV reports. Complex numbers are written as {"re": x, "im": y}."""
import json
import logging
import math
import sys

import numpy as np
import pandas as pd

from jostlab.recursions.disk import DiskPoint

logger = logging.getLogger(__name__)

SCHEMA = "jostlab/1"
STDOUT = "-"


def _complex(value):
    return {"re": float(value.real), "im": float(value.imag)}


def _real(value):
    value = float(value)
    return value if math.isfinite(value) else None


def to_jsonable(value):
    """Recursively convert numpy and complex values to plain JSON types.
    Non-finite floats become null."""
    if isinstance(value, DiskPoint):
        return _complex(value.z)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return _complex(value)
    if isinstance(value, (float, np.floating)):
        return _real(value)
    return value


def _flatten(row):
    flat = {}
    for key, value in row.items():
        if isinstance(value, (complex, np.complexfloating)):
            flat["{}_re".format(key)] = float(value.real)
            flat["{}_im".format(key)] = float(value.imag)
        else:
            flat[key] = value
    return flat


def report_table(report):
    """DataFrame of the report rows, or of its scalar fields if it has none."""
    if "rows" in report:
        return pd.DataFrame([_flatten(row) for row in report["rows"]])
    scalars = {
        key: value
        for key, value in report.items()
        if not isinstance(value, (dict, list, tuple, np.ndarray))
    }
    return pd.DataFrame([_flatten(scalars)])


def write_report(report, path=STDOUT, fmt="json"):
    """Write report as JSON or CSV to path; "-" writes to stdout."""
    if fmt == "json":
        text = json.dumps(to_jsonable(report), indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        text = report_table(report).to_csv(index=False)
    else:
        raise ValueError("Unknown report format {}".format(fmt))

    if path == STDOUT:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fout:
            fout.write(text)
        logger.info("Wrote %s report to %s", fmt, path)


def read_report(path, fmt="json"):
    if fmt == "csv":
        return pd.read_csv(path)
    with open(path, "r") as fin:
        return json.load(fin)
