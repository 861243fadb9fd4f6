import numpy as np
import pytest

from sklearn.utils import check_random_state

from interferolab.circuits import NBeamState, evolve
from interferolab.compilers import (
    AttenuationStage, MixerStage, PhaseStage, SUBUNITARY, UNITARY, TargetOperator,
    check_stages, compile_operator, decompose_subunitary, decompose_unitary,
    to_netlist, verify
)
from interferolab.elements import BeamSplitter, LinearFilter, Mirror
from interferolab.states import JonesVector
from interferolab.utils.checks_utils import ValidationError
from interferolab.utils.random_utils import haar_unitary, random_subunitary

import logging

LOGGER = logging.getLogger(__name__)


def propagate_modes(net, x):
    # one horizontally polarized amplitude per mode
    state = NBeamState([JonesVector(c, 0) for c in x])
    return evolve(net, state).to_array()[:, 0]

##########################################
#                                        #
#            Test target kinds           #
#                                        #
##########################################

def test_target_kind():
    assert TargetOperator(np.eye(3)).kind == UNITARY
    assert TargetOperator(np.diag([1, 0.5])).kind == SUBUNITARY
    assert TargetOperator(np.zeros((2, 2))).kind == SUBUNITARY


def test_target_not_subunitary():
    with pytest.raises(ValidationError, match="not subunitary") as excinfo:
        TargetOperator(2 * np.eye(3))
    assert "4" in str(excinfo.value)


def test_target_not_square():
    with pytest.raises(ValidationError):
        TargetOperator(np.ones((2, 3)))


def test_decompose_unitary_rejects_subunitary():
    with pytest.raises(ValidationError, match="not unitary"):
        decompose_unitary(np.diag([1, 0.5]))

##########################################
#                                        #
#         Test unitary compilation       #
#                                        #
##########################################

@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
def test_haar_unitaries(n):
    rng = check_random_state(n)
    worst = 0.0
    for _ in range(100):
        u = haar_unitary(n, rng)
        c = decompose_unitary(u)
        report = verify(c, u)
        assert report.passed
        assert c.n_mixers <= n * (n - 1) // 2
        assert check_stages(c)
        worst = max(worst, report.max_error)
    LOGGER.info("n=%d: largest reconstruction error %.3g", n, worst)


def test_identity_needs_no_mixer():
    c = decompose_unitary(np.eye(4))
    assert c.n_mixers == 0
    assert verify(c, np.eye(4)).max_error == 0.0


def test_two_mode_unitary_single_mixer():
    u = haar_unitary(2, 0)
    c = decompose_unitary(u)
    assert c.n_mixers == 1
    assert verify(c, u)


def test_phases_come_first():
    c = decompose_unitary(haar_unitary(4, 1))
    kinds = [type(s) for s in c.stages]
    assert kinds[:4] == [PhaseStage] * 4
    assert all(k is MixerStage for k in kinds[4:])
    for stage in c.stages[4:]:
        i, j = stage.modes
        assert j == i + 1


def test_diagonal_unitary():
    u = np.diag(np.exp(1j * np.array([0.1, 0.2, 0.3])))
    c = decompose_unitary(u)
    assert c.n_mixers == 0
    assert verify(c, u)

##########################################
#                                        #
#        Test subunitary compilation     #
#                                        #
##########################################

@pytest.mark.parametrize("n", [2, 3, 5])
def test_random_subunitaries(n):
    rng = check_random_state(10 + n)
    for _ in range(100):
        s = random_subunitary(n, rng)
        c = decompose_subunitary(s)
        assert verify(c, s).passed
        assert check_stages(c)
        assert all(0 <= a <= 1 for a in c.attenuations)
        assert len(c.attenuations) == n
        assert c.n_mixers <= n * (n - 1)


def test_diagonal_subunitary():
    s = np.diag([1, 0.5, 0])
    c = compile_operator(s)
    assert verify(c, s).passed
    assert sorted(c.attenuations) == pytest.approx([0, 0.5, 1], abs=1e-15)


def test_zero_operator():
    c = compile_operator(np.zeros((3, 3)))
    assert verify(c, np.zeros((3, 3))).passed
    assert c.attenuations == [0.0, 0.0, 0.0]


def test_compile_operator_dispatch():
    u = haar_unitary(3, 2)
    assert all(not isinstance(s, AttenuationStage) for s in compile_operator(u).stages)
    s = random_subunitary(3, 3, max_singular_value=0.9)
    assert len(compile_operator(s).attenuations) == 3


def test_verify_dimension_mismatch():
    c = decompose_unitary(np.eye(2))
    with pytest.raises(ValidationError):
        verify(c, np.eye(3))


def test_verify_detects_wrong_target():
    c = decompose_unitary(haar_unitary(3, 4))
    report = verify(c, haar_unitary(3, 5))
    assert not report
    assert report.to_dict()['passed'] is False

##########################################
#                                        #
#             Test netlist output        #
#                                        #
##########################################

def test_netlist_realizes_operator():
    rng = check_random_state(20)
    for k in range(50):
        n = 2 + k % 5
        m = haar_unitary(n, rng) if k % 2 == 0 else random_subunitary(n, rng)
        net = to_netlist(compile_operator(m))
        for _ in range(3):
            x = rng.normal(size=n) + 1j * rng.normal(size=n)
            assert np.abs(propagate_modes(net, x) - m @ x).max() <= 1e-10


def test_identity_netlist_is_empty():
    net = to_netlist(compile_operator(np.eye(4)))
    assert net.n_beams == 4
    assert len(net) == 0


def test_netlist_element_kinds():
    net = to_netlist(compile_operator(haar_unitary(3, 6)))
    for placement in net.elements:
        assert isinstance(placement.element, (BeamSplitter, Mirror))
        assert placement.note.startswith("stage ")


def test_attenuation_netlist():
    net = to_netlist(compile_operator(np.diag([1, 0.5])))
    filters = [p.element for p in net.elements if isinstance(p.element, LinearFilter)]
    assert len(filters) == 1
    out = propagate_modes(net, np.array([1.0, 1.0]))
    assert np.allclose(out, [1.0, 0.5], atol=1e-15)
