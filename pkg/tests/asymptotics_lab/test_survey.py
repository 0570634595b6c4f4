import numpy as np
import pytest

from jostlab.asymptotics_lab.survey import bound_state_survey
from jostlab.jacobi_core import families
from jostlab.jacobi_core.params import JacobiParams


def test_free_matrix_has_no_bound_states():
    table = bound_state_survey(families.free(), [0.9, 1.5], [100, 200])
    assert table["count"].tolist() == [0, 0]
    assert table["sum_q=0.9"].tolist() == [0.0, 0.0]
    assert table["status_q=1.5"].tolist() == [None, "stable"]


def test_finite_head_is_stable():
    params = JacobiParams([], [2.0, 0.0, 0.0, -3.0])
    table = bound_state_survey(params, [1.0], [200, 400, 800])
    assert table["count"].tolist() == [2, 2, 2]
    assert np.isnan(table["growth_q=1"][0])
    assert table["status_q=1"].tolist()[1:] == ["stable", "stable"]


@pytest.mark.slow
def test_sparse_block_family():
    trunc_sizes = [1000, 2000, 4000, 8000]
    params = families.section9_family(0.51, 0.35, 0.1, 20, horizon=8000)
    table = bound_state_survey(params, [0.9, 1.5], trunc_sizes)
    counts = table["count"].tolist()
    assert all(lo < hi for lo, hi in zip(counts, counts[1:]))
    slow_growth = table["growth_q=0.9"].tolist()[1:]
    assert all(growth > 0.05 for growth in slow_growth)
    assert table["status_q=0.9"].tolist()[1:] == ["grows"] * 3
    # q = 1.5 sums converge only logarithmically slowly for this family
    fast_growth = table["growth_q=1.5"].tolist()[1:]
    assert fast_growth[-1] < fast_growth[0]
    assert fast_growth[-1] < 0.1
    assert all(fast < slow for fast, slow in zip(fast_growth, slow_growth))


@pytest.mark.parametrize(
    "q_exponents,trunc_sizes",
    [([1.0], [200, 100]), ([], [100, 200]), ([-1.0], [100, 200])],
)
def test_invalid_arguments(q_exponents, trunc_sizes):
    with pytest.raises(ValueError):
        bound_state_survey(families.free(), q_exponents, trunc_sizes)
