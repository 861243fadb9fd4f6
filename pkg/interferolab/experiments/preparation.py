# -*- coding: utf-8 -*-
"""
The two halves of the interference experiment used on their own: a
preparation stage producing a path-polarization entangled single photon
from a splitter whose first input beam is dark, and a detection stage
measuring an unknown two beam input through two filters and a splitter.
"""
from interferolab.circuits import Netlist, Placement
from interferolab.elements import LinearFilter, Detector
from interferolab.states import JonesVector, TwoBeamState


def prepare_entangled(sa, a1, a2, psi2):
    """
    Output of the preparation stage: (A1 r2^a psi2, A2 t2^a psi2).

    Parameters
    ----------
    sa : BeamSplitter
        Preparation splitter, its first input beam is dark.
    a1, a2 : LinearFilter
        Filters on the two output beams.
    psi2 : JonesVector
        State entering the second input port.

    Returns
    -------
    TwoBeamState
        Path and polarization entangled state when A1 and A2 differ.

    """
    psi = psi2.amplitudes
    return TwoBeamState(
        JonesVector.from_array(a1.a @ (sa.r2 * psi)),
        JonesVector.from_array(a2.a @ (sa.t2 * psi)),
    )


def preparation_netlist(sa, a1, a2):
    """Netlist of the preparation stage, for the circuit engine."""
    return Netlist(
        2,
        elements=[
            Placement(sa, (1, 2)),
            Placement(LinearFilter(a1.a, label='A1'), 1),
            Placement(LinearFilter(a2.a, label='A2'), 2),
        ],
    )


def measurement_probability(sb, q, a1, a2, state):
    """
    Detection probability of the detection stage,
    q |t1^b A1 psi1 + r2^b A2 psi2|^2.

    Parameters
    ----------
    sb : BeamSplitter
        Recombining splitter.
    q : float
        Detector efficiency.
    a1, a2 : LinearFilter
        Analysing filters on the two input beams.
    state : TwoBeamState
        Unknown input state.

    Returns
    -------
    float

    """
    amplitude = (
        sb.t1 * (a1.a @ state.beam1.amplitudes) + sb.r2 * (a2.a @ state.beam2.amplitudes)
    )
    return q * JonesVector.from_array(amplitude).presence_probability()


def measurement_netlist(sb, q, a1, a2):
    """Netlist of the detection stage, detector on beam 1."""
    return Netlist(
        2,
        elements=[
            Placement(LinearFilter(a1.a, label='A1'), 1),
            Placement(LinearFilter(a2.a, label='A2'), 2),
            Placement(sb, (1, 2)),
        ],
        detectors=[Placement(Detector(q, label='D'), 1)],
    )
