# -*- coding: utf-8 -*-

from numba import njit, prange
from numpy import empty, zeros, int64, complex128

from interferolab import (
    __USE_NUMBA_CACHE__, __USE_NUMBA_FASTMATH__,
    __USE_NUMBA_NOGIL__, __USE_NUMBA_PARALLEL__
)
from interferolab.elements import BeamSplitter, LinearFilter, Mirror

###############################################################################
#                                                                             #
#                            NETLIST ENCODING                                 #
#                                                                             #
###############################################################################

OP_TWO_BEAM = 0
OP_ONE_BEAM = 1


def encode_netlist(net):
    """
    Flatten the propagating elements of a netlist into arrays usable by the
    numba kernels.

    Parameters
    ----------
    net : Netlist
        A validated netlist.

    Returns
    -------
    ops : array, shape=(n_elements)
        OP_TWO_BEAM for beam splitters, OP_ONE_BEAM for filters and mirrors.
    beams : array, shape=(n_elements, 2)
        0-based beam indices, the second one is unused for one beam ops.
    mats : array, shape=(n_elements, 2, 2)
        Spatial scattering matrix, or polarization matrix.

    """
    n = len(net.elements)
    ops = zeros(n, dtype=int64)
    beams = zeros((n, 2), dtype=int64)
    mats = zeros((n, 2, 2), dtype=complex128)
    for e, placement in enumerate(net.elements):
        element = placement.element
        if isinstance(element, BeamSplitter):
            ops[e] = OP_TWO_BEAM
            beams[e, 0] = placement.beams[0] - 1
            beams[e, 1] = placement.beams[1] - 1
            mats[e] = element.s
        elif isinstance(element, LinearFilter):
            ops[e] = OP_ONE_BEAM
            beams[e, 0] = placement.beams[0] - 1
            mats[e] = element.a
        elif isinstance(element, Mirror):
            ops[e] = OP_ONE_BEAM
            beams[e, 0] = placement.beams[0] - 1
            mats[e, 0, 0] = element.phase
            mats[e, 1, 1] = element.phase
    return ops, beams, mats

###############################################################################
#                                                                             #
#                           PROPAGATION KERNELS                               #
#                                                                             #
###############################################################################


@njit(
  fastmath=__USE_NUMBA_FASTMATH__, cache=__USE_NUMBA_CACHE__, nogil=__USE_NUMBA_NOGIL__
)
def propagate_one_state(state, ops, beams, mats):
    """
    Apply every encoded element, in order, to one state.

    Parameters
    ----------
    state : array, shape=(n_beams, 2)
        Jones vector of each beam.
    ops : array, shape=(n_elements)
        Element kinds.
    beams : array, shape=(n_elements, 2)
        0-based beam indices.
    mats : array, shape=(n_elements, 2, 2)
        Element matrices.

    Returns
    -------
    array, shape=(n_beams, 2)
        The evolved state.

    """
    out = state.copy()
    for e in range(ops.shape[0]):
        m = mats[e]
        i = beams[e, 0]
        if ops[e] == OP_TWO_BEAM:
            j = beams[e, 1]
            # spatial mixing, polarization by polarization
            for p in range(2):
                x = out[i, p]
                y = out[j, p]
                out[i, p] = m[0, 0] * x + m[0, 1] * y
                out[j, p] = m[1, 0] * x + m[1, 1] * y
        else:
            h = out[i, 0]
            v = out[i, 1]
            out[i, 0] = m[0, 0] * h + m[0, 1] * v
            out[i, 1] = m[1, 0] * h + m[1, 1] * v
    return out


@njit(
  fastmath=__USE_NUMBA_FASTMATH__, cache=__USE_NUMBA_CACHE__,
  nogil=__USE_NUMBA_NOGIL__, parallel=__USE_NUMBA_PARALLEL__
)
def propagate_all_states(states, ops, beams, mats):
    """
    Apply the encoded elements to a batch of states.

    Parameters
    ----------
    states : array, shape=(n_states, n_beams, 2)
        Input states.

    Returns
    -------
    array, shape=(n_states, n_beams, 2)
        Evolved states.

    """
    out = empty(states.shape, dtype=complex128)
    for k in prange(states.shape[0]):
        out[k] = propagate_one_state(states[k], ops, beams, mats)
    return out


@njit(
  fastmath=__USE_NUMBA_FASTMATH__, cache=__USE_NUMBA_CACHE__, nogil=__USE_NUMBA_NOGIL__
)
def beam_presence(state):
    """Presence probability of each beam of a (n_beams, 2) state."""
    n_beams = state.shape[0]
    out = zeros(n_beams)
    for i in range(n_beams):
        for p in range(2):
            out[i] += state[i, p].real ** 2 + state[i, p].imag ** 2
    return out
