import numpy as np
import pytest

from jostlab.asymptotics_lab.szego import szego_limit_check, szego_rate_fit
from jostlab.jacobi_core import families
from jostlab.jacobi_core.params import JacobiParams


@pytest.mark.parametrize(
    "params,z,c_limit",
    [
        (families.free(), 0.5, 4.0 / 3.0),
        (families.rank_one(2.0), 0.4, 0.2 / 0.84),
    ],
)
def test_szego_limit_check(params, z, c_limit):
    record = szego_limit_check(params, z)
    assert record["c_limit"] == pytest.approx(c_limit, abs=1e-9)
    assert record["residual"] < 1e-9
    assert record["equivalence_residual"] < 1e-9


def test_szego_limit_check_random_head():
    params = JacobiParams([1.1, 0.9, 1.05], [0.2, -0.1, 0.3])
    record = szego_limit_check(params, 0.3 - 0.4j)
    assert record["residual"] < 1e-9
    assert record["n_used"] > 3


def test_szego_limit_check_generator_tail():
    params = families.power_family(1.5, horizon=10 ** 5)
    record = szego_limit_check(params, 0.5, tol=1e-6)
    assert record["n_used"] > 100
    assert record["residual"] < 1e-4
    assert record["equivalence_residual"] < 1e-4


def test_szego_rate():
    params = JacobiParams([1.1, 0.9, 1.05], [0.2, -0.1, 0.3])
    z = 0.7 + 0.2j
    fit = szego_rate_fit(params, z, range(5, 60, 5))
    assert fit["expected"] == pytest.approx(2 * np.log(abs(z)))
    assert fit["slope"] == pytest.approx(fit["expected"], abs=0.05)


def test_szego_rate_needs_two_points():
    with pytest.raises(ValueError):
        szego_rate_fit(families.free(), 0.5, [10])
