import numpy as np
import pytest

from sklearn.utils import check_random_state

from interferolab.circuits import NBeamState, detection_probabilities, evolve
from interferolab.elements import LinearFilter, identity_filter, symmetric_beamsplitter
from interferolab.experiments import (
    measurement_netlist, measurement_probability, preparation_netlist,
    prepare_entangled
)
from interferolab.states import JonesVector, TwoBeamState
from interferolab.utils.random_utils import (
    random_beamsplitter, random_filter, random_jones
)

h = np.sqrt(0.5)


def test_prepare_entangled_example():
    sa = symmetric_beamsplitter()
    state = prepare_entangled(
        sa, LinearFilter(np.diag([1, 0])), LinearFilter(np.diag([0, 1])), JonesVector(h, h)
    )
    assert np.allclose(state.beam1.amplitudes, [0.5j, 0], atol=1e-15)
    assert np.allclose(state.beam2.amplitudes, [0, 0.5], atol=1e-15)
    assert state.presence_probability() == pytest.approx(0.5, abs=1e-15)


def test_prepare_without_filters_is_a_split():
    sa = symmetric_beamsplitter()
    state = prepare_entangled(sa, identity_filter(), identity_filter(), JonesVector(1, 0))
    assert np.allclose(state.to_array(), [[1j * h, 0], [h, 0]], atol=1e-15)
    assert state.presence_probability() == pytest.approx(1.0, abs=1e-15)


def test_prepare_matches_netlist():
    rng = check_random_state(0)
    for _ in range(100):
        sa = random_beamsplitter(rng)
        a1 = random_filter(rng)
        a2 = random_filter(rng)
        psi2 = random_jones(rng)
        expected = prepare_entangled(sa, a1, a2, psi2).to_array()
        out = evolve(preparation_netlist(sa, a1, a2), NBeamState([JonesVector.dark(), psi2]))
        assert np.abs(out.to_array() - expected).max() <= 1e-12


def test_measurement_matches_netlist():
    rng = check_random_state(1)
    for _ in range(100):
        sb = random_beamsplitter(rng)
        q = rng.uniform()
        a1 = random_filter(rng)
        a2 = random_filter(rng)
        state = TwoBeamState(random_jones(rng, 0.5), random_jones(rng, 0.5))
        [(beam, p)] = detection_probabilities(
            measurement_netlist(sb, q, a1, a2), NBeamState([state.beam1, state.beam2])
        )
        assert beam == 1
        assert abs(p - measurement_probability(sb, q, a1, a2, state)) <= 1e-12


def test_prepare_then_measure_recovers_interference():
    # preparing with S^a and measuring with S^b is the full experiment
    sa = symmetric_beamsplitter()
    sb = symmetric_beamsplitter()
    psi = JonesVector(1, 0)
    state = prepare_entangled(sa, identity_filter(), identity_filter(), psi)
    # swap the beams: the photon enters port 1 of the full experiment
    swapped = TwoBeamState(state.beam2, state.beam1)
    p = measurement_probability(sb, 1.0, identity_filter(), identity_filter(), swapped)
    assert p == pytest.approx(0.0, abs=1e-15)
