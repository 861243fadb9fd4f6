# -*- coding: utf-8 -*-

from numba import njit
from numpy import zeros

from interferolab import (
    __USE_NUMBA_CACHE__, __USE_NUMBA_FASTMATH__, __USE_NUMBA_NOGIL__
)

# Layout of the accumulator returned by hv_detection_counts
N_BOTH = 0
N_FIRST = 1
N_SECOND = 2
SUM_DELTA = 3
SUM_DELTA_SQ = 4
N_CLAMPED = 5
N_FIELDS = 6


@njit(
  fastmath=__USE_NUMBA_FASTMATH__, cache=__USE_NUMBA_CACHE__, nogil=__USE_NUMBA_NOGIL__
)
def hv_detection_counts(u, p1, p2):
    """
    Count detections of the three runs entering Delta with common random
    numbers: the same uniform draw u decides the joint run (probability
    min(p1 + p2, 1)) and both single filter runs.

    Parameters
    ----------
    u : array, shape=(n_samples)
        Uniform draws in [0, 1).
    p1 : array, shape=(n_samples)
        p1(A1, lambda) for each sampled hidden state.
    p2 : array, shape=(n_samples)
        p2(A2, lambda) for each sampled hidden state.

    Returns
    -------
    array, shape=(6)
        Joint, first and second detection counts, sum and sum of squares of
        the per sample Delta indicator, and the number of clamped samples.

    """
    acc = zeros(N_FIELDS)
    for i in range(u.shape[0]):
        joint = p1[i] + p2[i]
        if joint > 1.0:
            joint = 1.0
            acc[N_CLAMPED] += 1
        d = 0
        if u[i] < joint:
            acc[N_BOTH] += 1
            d += 1
        if u[i] < p1[i]:
            acc[N_FIRST] += 1
            d -= 1
        if u[i] < p2[i]:
            acc[N_SECOND] += 1
            d -= 1
        acc[SUM_DELTA] += d
        acc[SUM_DELTA_SQ] += d * d
    return acc
