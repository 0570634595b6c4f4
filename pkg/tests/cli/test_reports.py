import json

import numpy as np
import pytest

from jostlab.cli.reports import read_report, report_table, to_jsonable, write_report
from jostlab.recursions.disk import DiskPoint


@pytest.mark.parametrize(
    "value,expected",
    [
        (0.5 - 2j, {"re": 0.5, "im": -2.0}),
        (np.complex128(1j), {"re": 0.0, "im": 1.0}),
        (DiskPoint(0.3j), {"re": 0.0, "im": 0.3}),
        (float("nan"), None),
        (np.float64(np.inf), None),
        (np.int64(3), 3),
        (np.bool_(True), True),
        (np.array([1.0, 2.0]), [1.0, 2.0]),
        ((1, "a"), [1, "a"]),
        ({1: [0.25]}, {"1": [0.25]}),
        (None, None),
    ],
)
def test_to_jsonable(value, expected):
    assert to_jsonable(value) == expected


def test_json_report(tmpdir):
    path = tmpdir.join("report.json").strpath
    report = {"command": "gc", "z": DiskPoint(0.4), "u": 0.2 + 0j, "n_used": 12}
    write_report(report, path)
    loaded = read_report(path)
    assert loaded["command"] == "gc"
    assert loaded["u"] == {"re": 0.2, "im": 0.0}
    assert loaded["n_used"] == 12
    with open(path) as fin:
        assert json.load(fin) == loaded


def test_json_report_to_stdout(capsys):
    write_report({"status": "ok", "value": np.nan})
    captured = json.loads(capsys.readouterr().out)
    assert captured == {"status": "ok", "value": None}


def test_report_table_splits_complex_columns():
    report = {
        "command": "cross-validate",
        "rows": [{"z": 0.4 + 0j, "u_gc": 0.2 - 0.1j}, {"z": 0.5j, "u_gc": 1.0 + 0j}],
    }
    table = report_table(report)
    assert list(table["z_re"]) == [0.4, 0.0]
    assert list(table["z_im"]) == [0.0, 0.5]
    assert list(table["u_gc_im"]) == [-0.1, 0.0]


def test_report_table_without_rows():
    table = report_table({"command": "gc", "u": 0.2 + 0.3j, "info": {"ignored": 1}})
    assert len(table) == 1
    assert table["u_re"][0] == 0.2
    assert "info" not in table.columns


def test_csv_report(tmpdir):
    path = tmpdir.join("report.csv").strpath
    report = {"rows": [{"n": 1, "error": 0.5}, {"n": 2, "error": 0.25}]}
    write_report(report, path, "csv")
    table = read_report(path, "csv")
    assert list(table["n"]) == [1, 2]
    assert list(table["error"]) == [0.5, 0.25]


def test_unknown_format(tmpdir):
    with pytest.raises(ValueError):
        write_report({}, tmpdir.join("report.xml").strpath, "xml")
