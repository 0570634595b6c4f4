import numpy as np
import pytest

from jostlab.jacobi_core import families
from jostlab.jacobi_core.params import JacobiParams
from jostlab.recursions.geronimo_case import exact_jost
from jostlab.weyl_m.spectrum import energy_to_disk, spectrum


def test_free_spectrum_is_empty():
    data = spectrum(families.free(), [100, 200])
    assert len(data) == 0
    assert data.all_converged
    assert data.zeros.size == 0


@pytest.mark.parametrize(
    "beta,energy,zero",
    [(2.0, 2.5, 0.5), (-3.0, -10.0 / 3.0, -1.0 / 3.0)],
)
def test_rank_one_bound_state(beta, energy, zero):
    data = spectrum(families.rank_one(beta), [200, 400])
    assert len(data) == 1
    assert data.energies[0] == pytest.approx(energy, abs=1e-10)
    assert data.zeros[0] == pytest.approx(zero, abs=1e-10)
    assert data.all_converged


def test_ordering():
    params = JacobiParams([], [4.0, 0.0, 0.0, 0.0, 3.0, 0.0, 0.0, 0.0, -5.0])
    data = spectrum(params, [300, 600])
    assert data.e_plus.size == 2
    assert data.e_minus.size == 1
    assert data.e_plus[0] > data.e_plus[1] > 2
    assert np.all(np.abs(data.z_plus) < 1)
    record = data.to_dict()
    assert record["e_minus"] == data.e_minus.tolist()
    assert record["trunc_size"] == 600


def test_unconverged_eigenvalues_are_flagged():
    params = families.power_family(0.3, sign="positive", horizon=10 ** 4)
    data = spectrum(params, [100, 200], tol=1e-8)
    assert not data.all_converged
    kept = data.converged_only()
    assert kept.all_converged
    assert len(kept) < len(data)


@pytest.mark.parametrize("sizes", [[100], [200, 100], [1, 10]])
def test_truncation_sizes(sizes):
    with pytest.raises(ValueError):
        spectrum(families.free(), sizes)


def test_energy_to_disk():
    energies = np.array([2.5, -10.0 / 3.0])
    zeros = energy_to_disk(energies)
    assert np.allclose(zeros + 1 / zeros, energies)


@pytest.mark.parametrize(
    "params",
    [
        families.rank_one(2.0),
        families.rank_one(-1.6),
        JacobiParams([], [2.0, 0.0, 0.0, -3.0]),
        JacobiParams([1.8, 0.6], [0.4, -0.3]),
    ],
)
def test_jost_function_vanishes_exactly_at_the_spectrum(params):
    zeros = spectrum(params, [200, 400]).zeros
    assert zeros.size > 0
    assert np.all(np.abs(exact_jost(params, zeros)) < 1e-8)
    for shift in (-0.01, 0.01):
        assert np.all(np.abs(exact_jost(params, zeros + shift)) > 1e-4)
