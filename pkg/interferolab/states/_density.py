# -*- coding: utf-8 -*-
from typing import NamedTuple, Tuple

import numpy as np
from scipy.linalg import eigvalsh

from interferolab.utils.checks_utils import check_complex_matrix, ELEMENT_TOL

HERMITIAN = 'hermitian'
POSITIVE_SEMIDEFINITE = 'positive semidefinite'
REAL_TRACE = 'real trace'


class DensityMatrix:
    """
    Polarization density matrix of a beam. Its trace is the mean number of
    photons in the reference time interval, so it may exceed 1 for
    multiphoton inputs (effective single-photon density matrix).

    The constructor only checks shape and finiteness, use
    :func:`validate_density` to check the physical invariants.

    Parameters
    ----------
    m : array-like, shape=(2, 2)
        Matrix entries.

    """

    __slots__ = ('_m',)

    def __init__(self, m):
        m = check_complex_matrix(m, shape=(2, 2), name='DensityMatrix')
        m.flags.writeable = False
        self._m = m

    @property
    def m(self):
        return self._m

    @property
    def trace(self):
        return float(np.trace(self._m).real)

    mean_photon_number = trace

    def scaled(self, factor):
        return DensityMatrix(factor * self._m)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._m.copy()
        return self._m.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return np.array_equal(self._m, other._m)

    def __hash__(self):
        return hash(self._m.tobytes())

    def __repr__(self):
        return "DensityMatrix({!r})".format(self._m.tolist())


class DensityCheck(NamedTuple):
    """Verdict of :func:`validate_density`."""
    valid: bool
    violations: Tuple[str, ...]
    diagnostic: str

    def __bool__(self):
        return self.valid


def pure_density(s):
    """
    Density matrix of a pure beam state, the outer product psi psi^*.

    Parameters
    ----------
    s : JonesVector
        Beam state.

    Returns
    -------
    DensityMatrix
        Rank one matrix whose trace is the presence probability of s.

    """
    x = s.amplitudes
    return DensityMatrix(np.outer(x, x.conj()))


def unpolarized(mean_photons=1.0):
    """Unpolarized density matrix (mean_photons / 2) * I."""
    return DensityMatrix(0.5 * mean_photons * np.eye(2))


def validate_density(rho, tol=ELEMENT_TOL):
    """
    Check the structural invariants of a density matrix.

    Parameters
    ----------
    rho : DensityMatrix
        Matrix to check.
    tol : float, optional
        Absolute tolerance. The default is 1e-12.

    Returns
    -------
    DensityCheck
        ``valid`` is True iff the matrix is Hermitian, positive semidefinite
        and has a real non negative trace. ``violations`` names every violated
        property and ``diagnostic`` gives the measured values.

    """
    m = rho.m
    violations = []
    details = []
    herm_err = float(np.abs(m - m.conj().T).max())
    if herm_err > tol:
        violations.append(HERMITIAN)
        details.append("max|m - m*| = {:.3g}".format(herm_err))
    # Eigenvalues of the Hermitian part, only meaningful once Hermitian
    min_eig = float(eigvalsh(0.5 * (m + m.conj().T)).min())
    if herm_err <= tol and min_eig < -tol:
        violations.append(POSITIVE_SEMIDEFINITE)
        details.append("smallest eigenvalue = {:.17g}".format(min_eig))
    tr = np.trace(m)
    if abs(tr.imag) > tol or tr.real < -tol:
        violations.append(REAL_TRACE)
        details.append("trace = {!r}".format(complex(tr)))
    if violations:
        diagnostic = "not a valid density matrix: " + "; ".join(
            "{} ({})".format(v, d) for v, d in zip(violations, details)
        )
    else:
        diagnostic = "valid density matrix, trace = {:.17g}".format(tr.real)
    return DensityCheck(not violations, tuple(violations), diagnostic)
