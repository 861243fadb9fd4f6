# -*- coding: utf-8 -*-
"""
Quantum predictions for the two-splitter experiment. With the second input
beam dark, the amplitude at the detector is

    psi_D = t1^a t1^b A1 psi1 + r1^a r2^b A2 psi1

and the detection probability is p(A1, A2) = q |psi_D|^2. Expanding the
square gives the interference witness

    Delta(A1, A2) = p(A1, A2) - p(A1, 0) - p(0, A2)
                  = 2 q Re[kappa psi1^* A1^* A2 psi1],

with kappa = conj(t1^a t1^b) r1^a r2^b.
"""
import numpy as np

from interferolab.circuits import Netlist, Placement, NBeamState, detection_probabilities
from interferolab.elements import LinearFilter, Mirror, Detector, absorber
from interferolab.states import JonesVector, validate_density
from interferolab.utils.checks_utils import ValidationError


class DeltaResult:
    """
    The three detection probabilities entering Delta and their difference.

    Attributes
    ----------
    p_both : float
        p(A1, A2).
    p_1 : float
        p(A1, 0).
    p_2 : float
        p(0, A2).
    delta : float
        Interference witness.

    """

    __slots__ = ('p_both', 'p_1', 'p_2', 'delta')

    def __init__(self, p_both, p_1, p_2, delta=None):
        self.p_both = float(p_both)
        self.p_1 = float(p_1)
        self.p_2 = float(p_2)
        self.delta = self.p_both - self.p_1 - self.p_2 if delta is None else float(delta)

    def to_dict(self):
        return {
            'p_both': self.p_both, 'p_1': self.p_1, 'p_2': self.p_2,
            'delta': self.delta,
        }

    def __repr__(self):
        return "DeltaResult(p_both={!r}, p_1={!r}, p_2={!r}, delta={!r})".format(
            self.p_both, self.p_1, self.p_2, self.delta
        )


def _detector_operator(cfg, a1, a2):
    return cfg.direct_weight * a1.a + cfg.crossed_weight * a2.a


def _require_pure(cfg):
    if not cfg.is_pure:
        raise ValidationError(
            "This prediction needs a pure input psi1, use the mixed variant for rho1"
        )


def detector_amplitude(cfg, a1, a2):
    """
    Jones vector psi_D reaching the detector.

    Parameters
    ----------
    cfg : ExperimentConfig
        Apparatus with a pure input.
    a1, a2 : LinearFilter
        Filters on beam 1 and beam 2.

    Returns
    -------
    JonesVector

    """
    _require_pure(cfg)
    return JonesVector.from_array(_detector_operator(cfg, a1, a2) @ cfg.psi1.amplitudes)


def p_quantum(cfg, a1, a2):
    """
    Detection probability q |t1^a t1^b A1 psi1 + r1^a r2^b A2 psi1|^2.

    Parameters
    ----------
    cfg : ExperimentConfig
        Apparatus with a pure input.
    a1, a2 : LinearFilter
        Filters on beam 1 and beam 2.

    Returns
    -------
    float

    """
    return cfg.q * detector_amplitude(cfg, a1, a2).presence_probability()


def p_quantum_mixed(cfg, a1, a2):
    """
    Detection probability q tr(B rho B^*) with B = t1^a t1^b A1 + r1^a r2^b A2.
    For multiphoton inputs it is the mean detected count.
    """
    b = _detector_operator(cfg, a1, a2)
    return cfg.q * float(np.trace(b @ cfg.rho.m @ b.conj().T).real)


def delta_quantum(cfg, a1, a2):
    """
    Quantum prediction of Delta(A1, A2), in closed form.

    The probabilities are evaluated separately so that ``p_both - p_1 - p_2``
    can be compared with the closed form stored in ``delta``.

    Parameters
    ----------
    cfg : ExperimentConfig
        Apparatus with a pure input.
    a1, a2 : LinearFilter
        Filters on beam 1 and beam 2.

    Returns
    -------
    DeltaResult

    """
    _require_pure(cfg)
    psi = cfg.psi1.amplitudes
    overlap = np.vdot(a1.a @ psi, a2.a @ psi)
    delta = 2 * cfg.q * (cfg.kappa * overlap).real
    zero = absorber()
    return DeltaResult(
        p_quantum(cfg, a1, a2), p_quantum(cfg, a1, zero), p_quantum(cfg, zero, a2),
        delta=delta
    )


def delta_quantum_mixed(cfg, a1, a2, rho=None):
    """
    Quantum prediction of Delta(A1, A2) = 2 q Re[kappa tr(rho A1^* A2)] for a
    mixed or multiphoton input. It is linear in rho, so scaling the mean
    photon number scales Delta.

    Parameters
    ----------
    cfg : ExperimentConfig
        Apparatus.
    a1, a2 : LinearFilter
        Filters on beam 1 and beam 2.
    rho : DensityMatrix, optional
        Input state overriding cfg.rho.

    Raises
    ------
    ValidationError
        If rho is not a valid density matrix.

    Returns
    -------
    DeltaResult

    """
    if rho is not None:
        verdict = validate_density(rho)
        if not verdict.valid:
            raise ValidationError("rho is " + verdict.diagnostic)
        cfg = cfg.with_input(rho1=rho)
    m = cfg.rho.m
    delta = 2 * cfg.q * (cfg.kappa * np.trace(m @ a1.a.conj().T @ a2.a)).real
    zero = absorber()
    return DeltaResult(
        p_quantum_mixed(cfg, a1, a2), p_quantum_mixed(cfg, a1, zero),
        p_quantum_mixed(cfg, zero, a2), delta=delta
    )


def interference_netlist(cfg, a1, a2):
    """
    The experiment as a two beam netlist: splitter S^a, a mirror on each
    beam, filter A1 on beam 1 and A2 on beam 2, splitter S^b, and the
    detector on beam 1.

    Parameters
    ----------
    cfg : ExperimentConfig
        Apparatus.
    a1, a2 : LinearFilter
        Filters on beam 1 and beam 2.

    Returns
    -------
    Netlist

    """
    return Netlist(
        2,
        elements=[
            Placement(cfg.sa, (1, 2)),
            Placement(Mirror(label='m1'), 1),
            Placement(Mirror(label='m2'), 2),
            Placement(LinearFilter(a1.a, label='A1'), 1),
            Placement(LinearFilter(a2.a, label='A2'), 2),
            Placement(cfg.sb, (1, 2)),
        ],
        detectors=[Placement(Detector(cfg.q, label='D'), 1)],
    )


def p_circuit(cfg, a1, a2):
    """Detection probability computed by propagating through the netlist."""
    _require_pure(cfg)
    net = interference_netlist(cfg, a1, a2)
    state = NBeamState([cfg.psi1, JonesVector.dark()])
    return detection_probabilities(net, state)[0][1]


def delta_circuit(cfg, a1, a2):
    """Delta(A1, A2) from three circuit engine evaluations."""
    zero = absorber()
    return DeltaResult(
        p_circuit(cfg, a1, a2), p_circuit(cfg, a1, zero), p_circuit(cfg, zero, a2)
    )
