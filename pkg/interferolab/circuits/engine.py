# -*- coding: utf-8 -*-
import logging

import numpy as np

from interferolab.circuits._netlist import NBeamState
from interferolab.circuits._propagation import (
    encode_netlist, propagate_one_state, propagate_all_states, beam_presence
)
from interferolab.utils.checks_utils import ValidationError

LOGGER = logging.getLogger(__name__)


def _check_input(net, input):
    if input.n_beams != net.n_beams:
        raise ValidationError(
            "The input has {} beams but the netlist expects {}".format(
                input.n_beams, net.n_beams
            )
        )


def evolve(net, input):
    """
    Propagate a state through every element of a netlist, in order.

    Parameters
    ----------
    net : Netlist
        A validated netlist.
    input : NBeamState
        Input state with net.n_beams beams.

    Returns
    -------
    NBeamState
        The state after the last element. Detectors do not alter it.

    """
    _check_input(net, input)
    ops, beams, mats = encode_netlist(net)
    return NBeamState.from_array(
        propagate_one_state(input.to_array(), ops, beams, mats)
    )


def evolve_batch(net, states):
    """
    Propagate a batch of states through a netlist in one pass.

    Parameters
    ----------
    net : Netlist
        A validated netlist.
    states : array, shape=(n_states, n_beams, 2)
        Jones vectors of each beam of each input state.

    Returns
    -------
    array, shape=(n_states, n_beams, 2)
        Evolved states.

    """
    states = np.asarray(states, dtype=np.complex128)
    if states.ndim != 3 or states.shape[1:] != (net.n_beams, 2):
        raise ValidationError(
            "states must have shape (n_states, {}, 2), but found {}".format(
                net.n_beams, states.shape
            )
        )
    ops, beams, mats = encode_netlist(net)
    LOGGER.debug(
        "Propagating %d states through %d elements", states.shape[0], ops.shape[0]
    )
    return propagate_all_states(np.ascontiguousarray(states), ops, beams, mats)


def detection_probabilities(net, input):
    """
    Detection probability q |psi|^2 of every detector tap, read on the
    evolved state.

    Parameters
    ----------
    net : Netlist
        A validated netlist.
    input : NBeamState
        Input state.

    Returns
    -------
    list of (int, float)
        (1-based beam index, probability) for each detector, in netlist
        order. Empty when the netlist has no detector.

    """
    if len(net.detectors) == 0:
        _check_input(net, input)
        return []
    evolved = evolve(net, input)
    presence = beam_presence(evolved.to_array())
    return [
        (tap.beams[0], tap.element.q * float(presence[tap.beams[0] - 1]))
        for tap in net.detectors
    ]
