# -*- coding: utf-8 -*-
"""
Seeded random generators of apparatus settings and states.
"""
import numpy as np
from scipy.stats import unitary_group
from sklearn.utils import check_random_state

from interferolab.elements import BeamSplitter, LinearFilter
from interferolab.experiments import ExperimentConfig
from interferolab.states import JonesVector, DensityMatrix


def haar_unitary(n, random_state=None):
    """
    Haar distributed n x n unitary.

    Parameters
    ----------
    n : int
        Dimension.
    random_state : int or RandomState, optional
        Seed or generator.

    Returns
    -------
    array, shape=(n, n)

    """
    rng = check_random_state(random_state)
    if n == 1:
        return np.exp(2j * np.pi * rng.uniform()) * np.ones((1, 1), dtype=np.complex128)
    return unitary_group.rvs(n, random_state=rng)


def random_subunitary(n, random_state=None, max_singular_value=1.0):
    """
    Random n x n subunitary matrix U diag(s) V with Haar U, V and singular
    values uniform in [0, max_singular_value].
    """
    rng = check_random_state(random_state)
    u = haar_unitary(n, rng)
    v = haar_unitary(n, rng)
    s = rng.uniform(0, max_singular_value, size=n)
    return u @ np.diag(s) @ v


def random_beamsplitter(random_state=None, label=None):
    return BeamSplitter(haar_unitary(2, random_state), label=label)


def random_filter(random_state=None, label=None):
    return LinearFilter(random_subunitary(2, random_state), label=label)


def random_jones(random_state=None, max_presence=1.0):
    """Random Jones vector with presence probability at most max_presence."""
    rng = check_random_state(random_state)
    z = rng.normal(size=2) + 1j * rng.normal(size=2)
    z *= np.sqrt(rng.uniform(0, max_presence)) / np.linalg.norm(z)
    return JonesVector.from_array(z)


def random_density(random_state=None, trace=1.0):
    """Random valid density matrix with the given trace."""
    rng = check_random_state(random_state)
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    m = g @ g.conj().T
    m = trace * m / np.trace(m).real
    return DensityMatrix((m + m.conj().T) / 2)


def random_config(random_state=None, mixed=False):
    """
    Random apparatus: Haar splitters, q uniform in [0, 1] and a random
    single photon input, pure or mixed.
    """
    rng = check_random_state(random_state)
    sa = random_beamsplitter(rng, label='sa')
    sb = random_beamsplitter(rng, label='sb')
    q = rng.uniform(0, 1)
    if mixed:
        return ExperimentConfig(sa, sb, q=q, rho1=random_density(rng, trace=rng.uniform(0, 1)))
    return ExperimentConfig(sa, sb, q=q, psi1=random_jones(rng))
