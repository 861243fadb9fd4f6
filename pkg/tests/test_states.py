import numpy as np
import pytest

from sklearn.utils import check_random_state

from interferolab.states import (
    JonesVector, TwoBeamState, DensityMatrix, presence_probability,
    pure_density, unpolarized, validate_density
)
from interferolab.utils.checks_utils import ValidationError
from interferolab.utils.random_utils import random_jones, random_density

h = np.sqrt(0.5)

##########################################
#                                        #
#         Test presence probability      #
#                                        #
##########################################

@pytest.mark.parametrize("c_h, c_v, expected", [
    (0, 0, 0.0),
    (1, 0, 1.0),
    (h, 1j * h, 1.0),
    (1, 1, 2.0),
])
def test_presence_probability(c_h, c_v, expected):
    assert presence_probability(JonesVector(c_h, c_v)) == pytest.approx(expected, abs=1e-15)


def test_dark_beam_is_exactly_zero():
    assert presence_probability(JonesVector.dark()) == 0.0


def test_presence_probability_global_phase():
    rng = check_random_state(0)
    for _ in range(100):
        s = random_jones(rng, max_presence=3.0)
        phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
        t = JonesVector.from_array(phase * s.amplitudes)
        assert abs(presence_probability(s) - presence_probability(t)) <= 1e-12


def test_jones_vector_is_immutable():
    s = JonesVector(1, 0)
    with pytest.raises(ValueError):
        s.amplitudes[0] = 2


def test_two_beam_state_is_immutable():
    s = TwoBeamState(JonesVector(1, 0), JonesVector(0, 1))
    with pytest.raises(AttributeError):
        s.beam1 = JonesVector(5, 5)
    with pytest.raises(AttributeError):
        s.beam2 = JonesVector.dark()
    assert s.beam1 == JonesVector(1, 0)
    assert s == TwoBeamState(JonesVector(1, 0), JonesVector(0, 1))
    assert hash(s) == hash(TwoBeamState(JonesVector(1, 0), JonesVector(0, 1)))


def test_jones_vector_rejects_non_finite():
    with pytest.raises(ValidationError):
        JonesVector(np.nan, 0)


def test_two_beam_single_photon():
    TwoBeamState(JonesVector(h, 0), JonesVector(0, h), single_photon=True)
    with pytest.raises(ValidationError):
        TwoBeamState(JonesVector(1, 0), JonesVector(0, 1), single_photon=True)
    # multiphoton reading is allowed without the flag
    assert TwoBeamState(JonesVector(1, 0), JonesVector(0, 1)).presence_probability() == 2.0

##########################################
#                                        #
#           Test density matrices        #
#                                        #
##########################################

@pytest.mark.parametrize("s, expected", [
    (JonesVector(1, 0), [[1, 0], [0, 0]]),
    (JonesVector(0, 0), [[0, 0], [0, 0]]),
    (JonesVector(h, h), [[0.5, 0.5], [0.5, 0.5]]),
])
def test_pure_density(s, expected):
    assert np.allclose(pure_density(s).m, expected, atol=1e-15)


def test_pure_density_trace_and_rank():
    rng = check_random_state(1)
    for _ in range(100):
        s = random_jones(rng, max_presence=5.0)
        rho = pure_density(s)
        p = presence_probability(s)
        assert abs(rho.trace - p) <= 1e-14 * max(p, 1)
        assert np.linalg.eigvalsh(rho.m).min() <= 1e-12 * max(rho.trace, 1)


@pytest.mark.parametrize("m, valid, violation", [
    ([[1, 0], [0, 0]], True, None),
    ([[0, 1], [0, 0]], False, 'hermitian'),
    ([[1, 2], [2, 1]], False, 'positive semidefinite'),
])
def test_validate_density(m, valid, violation):
    verdict = validate_density(DensityMatrix(m))
    assert verdict.valid == valid
    assert bool(verdict) == valid
    if violation is not None:
        assert violation in verdict.violations
        assert violation in verdict.diagnostic


def test_validate_density_reports_negative_eigenvalue():
    verdict = validate_density(DensityMatrix([[1, 2], [2, 1]]))
    reported = verdict.diagnostic.split("smallest eigenvalue = ")[1].split(")")[0]
    assert float(reported) == pytest.approx(-1.0)


def test_validate_density_negative_trace():
    verdict = validate_density(DensityMatrix([[-1, 0], [0, -1]]))
    assert not verdict.valid
    assert 'real trace' in verdict.violations


def test_random_density_is_valid():
    rng = check_random_state(2)
    for _ in range(50):
        rho = random_density(rng, trace=rng.uniform(0, 10))
        assert validate_density(rho).valid


@pytest.mark.parametrize("n", [1.0, 2.0, 10.0])
def test_unpolarized(n):
    rho = unpolarized(n)
    assert rho.mean_photon_number == pytest.approx(n)
    assert np.allclose(rho.m, n / 2 * np.eye(2))


def test_density_scaled():
    rho = pure_density(JonesVector(h, 1j * h)).scaled(10)
    assert rho.trace == pytest.approx(10.0)
    assert validate_density(rho).valid
