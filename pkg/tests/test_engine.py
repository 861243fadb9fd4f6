import numpy as np
import pytest

from sklearn.utils import check_random_state

from interferolab.circuits import (
    Netlist, Placement, NBeamState, evolve, evolve_batch, detection_probabilities
)
from interferolab.elements import (
    BeamSplitter, LinearFilter, Mirror, Detector, symmetric_beamsplitter,
    absorber, identity_filter
)
from interferolab.experiments import ExperimentConfig, interference_netlist
from interferolab.states import JonesVector
from interferolab.utils.checks_utils import NetlistError, ValidationError
from interferolab.utils.random_utils import (
    haar_unitary, random_config, random_filter, random_jones
)

import logging

LOGGER = logging.getLogger(__name__)


def random_state(n_beams, rng, max_presence=1.0):
    return NBeamState([random_jones(rng, max_presence / n_beams) for _ in range(n_beams)])


def random_unitary_netlist(n_beams, n_elements, rng):
    elements = []
    for _ in range(n_elements):
        if rng.uniform() < 0.7 and n_beams > 1:
            i, j = rng.choice(n_beams, size=2, replace=False) + 1
            elements.append(Placement(BeamSplitter(haar_unitary(2, rng)), (int(i), int(j))))
        else:
            phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
            elements.append(Placement(Mirror(phase), int(rng.randint(1, n_beams + 1))))
    return Netlist(n_beams, elements=elements)

##########################################
#                                        #
#          Test netlist structure        #
#                                        #
##########################################

def test_netlist_beam_out_of_range():
    with pytest.raises(NetlistError, match="element 2"):
        Netlist(2, elements=[
            Placement(identity_filter(), 1),
            Placement(symmetric_beamsplitter(), (1, 3)),
        ])


def test_netlist_same_beam_twice():
    with pytest.raises(NetlistError):
        Netlist(2, elements=[Placement(symmetric_beamsplitter(), (2, 2))])


def test_netlist_wrong_arity():
    with pytest.raises(NetlistError):
        Netlist(2, elements=[Placement(identity_filter(), (1, 2))])


def test_netlist_detector_among_elements():
    with pytest.raises(NetlistError):
        Netlist(1, elements=[Placement(Detector(), 1)])


@pytest.mark.parametrize("n_beams", [0, -1, 1.5])
def test_netlist_invalid_size(n_beams):
    with pytest.raises(NetlistError):
        Netlist(n_beams)


def test_input_size_mismatch():
    with pytest.raises(ValidationError):
        evolve(Netlist(3), NBeamState([JonesVector(1, 0)]))

##########################################
#                                        #
#             Test propagation           #
#                                        #
##########################################

def test_n_beam_state_is_immutable():
    state = NBeamState([JonesVector(1, 0), JonesVector.dark()])
    with pytest.raises(AttributeError):
        state.beams = (JonesVector(5, 5), JonesVector.dark())
    assert isinstance(state.beams, tuple)
    assert state[1] == JonesVector(1, 0)
    assert hash(state) == hash(NBeamState([JonesVector(1, 0), JonesVector.dark()]))


def test_empty_netlist_is_identity():
    rng = check_random_state(0)
    s = random_state(3, rng)
    assert np.array_equal(evolve(Netlist(3), s).to_array(), s.to_array())


def test_dark_port_amplitude():
    cfg = ExperimentConfig.dark_port()
    net = interference_netlist(cfg, identity_filter(), identity_filter())
    out = evolve(net, NBeamState([JonesVector(1, 0), JonesVector.dark()]))
    assert np.abs(out[1].amplitudes).max() <= 1e-15


def test_detection_probabilities_dark_port():
    cfg = ExperimentConfig.dark_port()
    state = NBeamState([JonesVector(1, 0), JonesVector.dark()])
    net = interference_netlist(cfg, identity_filter(), identity_filter())
    [(beam, p)] = detection_probabilities(net, state)
    assert beam == 1
    assert p == pytest.approx(0.0, abs=1e-15)
    net = interference_netlist(cfg, identity_filter(), absorber())
    [(beam, p)] = detection_probabilities(net, state)
    assert p == pytest.approx(0.25, abs=1e-15)


def test_no_detectors():
    assert detection_probabilities(Netlist(2), NBeamState([JonesVector(1, 0)] * 2)) == []


def test_detectors_do_not_alter_state():
    net = Netlist(2, detectors=[Placement(Detector(0.5), 1), Placement(Detector(1.0), 2)])
    s = NBeamState([JonesVector(0.6, 0), JonesVector(0, 0.8)])
    probabilities = detection_probabilities(net, s)
    assert probabilities[0] == (1, pytest.approx(0.18))
    assert probabilities[1] == (2, pytest.approx(0.64))


@pytest.mark.parametrize("n_beams", [2, 3, 5])
def test_unitary_netlists_conserve_presence(n_beams):
    rng = check_random_state(n_beams)
    for _ in range(100):
        net = random_unitary_netlist(n_beams, 8, rng)
        s = random_state(n_beams, rng)
        out = evolve(net, s)
        assert abs(out.presence_probability() - s.presence_probability()) <= 1e-12


def test_evolve_is_linear():
    rng = check_random_state(10)
    net = random_unitary_netlist(3, 10, rng)
    net = Netlist(3, elements=list(net.elements) + [Placement(random_filter(rng), 2)])
    for _ in range(20):
        x = random_state(3, rng).to_array()
        y = random_state(3, rng).to_array()
        alpha, beta = rng.normal(size=2) + 1j * rng.normal(size=2)
        combined = evolve(net, NBeamState.from_array(alpha * x + beta * y)).to_array()
        separate = (alpha * evolve(net, NBeamState.from_array(x)).to_array()
                    + beta * evolve(net, NBeamState.from_array(y)).to_array())
        assert np.abs(combined - separate).max() <= 1e-12


def test_operator_matches_evolve():
    rng = check_random_state(11)
    net = random_unitary_netlist(4, 12, rng)
    op = net.operator()
    for _ in range(10):
        s = random_state(4, rng)
        expected = (op @ s.to_array().reshape(-1)).reshape(4, 2)
        assert np.abs(evolve(net, s).to_array() - expected).max() <= 1e-12


def test_evolve_batch_matches_evolve():
    rng = check_random_state(12)
    net = random_unitary_netlist(3, 6, rng)
    states = np.stack([random_state(3, rng).to_array() for _ in range(50)])
    batch = evolve_batch(net, states)
    for k in range(states.shape[0]):
        one = evolve(net, NBeamState.from_array(states[k])).to_array()
        assert np.abs(batch[k] - one).max() <= 1e-15


def test_evolve_batch_wrong_shape():
    with pytest.raises(ValidationError):
        evolve_batch(Netlist(2), np.zeros((4, 3, 2)))


def test_interference_netlist_matches_closed_form():
    rng = check_random_state(13)
    max_err = 0.0
    for _ in range(1000):
        cfg = random_config(rng)
        a1 = random_filter(rng)
        a2 = random_filter(rng)
        out = evolve(
            interference_netlist(cfg, a1, a2), NBeamState([cfg.psi1, JonesVector.dark()])
        )
        psi = cfg.psi1.amplitudes
        expected = (cfg.sa.t1 * cfg.sb.t1 * (a1.a @ psi) + cfg.sa.r1 * cfg.sb.r2 * (a2.a @ psi))
        max_err = max(max_err, np.abs(out[1].amplitudes - expected).max())
    LOGGER.info("Largest deviation of the propagated detector amplitude: %.3g", max_err)
    assert max_err <= 1e-12
