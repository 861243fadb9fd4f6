# -*- coding: utf-8 -*-
"""
Compilation of n x n unitary and subunitary operators into cascades of two
mode mixers, single mode phases and single mode attenuations.

Unitary targets are reduced to a diagonal of phases by Givens rotations on
adjacent modes, annihilating the sub-diagonal entries column by column
from the left, so that L U = D with L = T_k ... T_1. The circuit applies D
first, then T_k^*, ..., T_1^*. Subunitary targets are factored as
S = U diag(sigma) V^* and compiled as V^*, attenuations sigma, U.
"""
import logging
from typing import NamedTuple

import numpy as np
from scipy.linalg import svd

from interferolab.circuits import Netlist, Placement
from interferolab.elements import BeamSplitter, Mirror, scalar_filter
from interferolab.utils.checks_utils import (
    check_complex_matrix, gram_max_eigenvalue, unitarity_error,
    ELEMENT_TOL, OPERATOR_TOL, ValidationError
)

LOGGER = logging.getLogger(__name__)

UNITARY = 'unitary'
SUBUNITARY = 'subunitary'

# Entries below this modulus are already annihilated
ZERO_TOL = 1e-15
# Stages this close to the identity are left out of netlists
IDENTITY_TOL = 1e-14


class TargetOperator:
    """
    Operator to compile. Its kind is detected from the matrix: unitary when
    max|m^* m - I| <= 1e-10, subunitary when every eigenvalue of m^* m is
    at most 1 + 1e-10.

    Parameters
    ----------
    m : array, shape=(n, n)
        Complex square matrix acting on n spatial modes.

    Raises
    ------
    ValidationError
        If m is not square or not subunitary. The message reports the
        largest eigenvalue of m^* m.

    """

    def __init__(self, m):
        m = check_complex_matrix(m, name='target operator')
        m.setflags(write=False)
        self._m = m
        if unitarity_error(m) <= OPERATOR_TOL:
            self.kind = UNITARY
        else:
            largest = gram_max_eigenvalue(m)
            if largest > 1 + OPERATOR_TOL:
                raise ValidationError(
                    "target operator is not subunitary: the largest eigenvalue of"
                    " S*S is {!r} (singular value {!r}) > 1".format(
                        largest, float(np.sqrt(largest))
                    )
                )
            self.kind = SUBUNITARY

    @property
    def m(self):
        return self._m

    @property
    def n_modes(self):
        return self._m.shape[0]

    @property
    def is_unitary(self):
        return self.kind == UNITARY

    def __repr__(self):
        return "TargetOperator(n_modes={}, kind={!r})".format(self.n_modes, self.kind)


def _as_target(target):
    if isinstance(target, TargetOperator):
        return target
    return TargetOperator(target)


###############################################################################
#                                                                             #
#                                   STAGES                                    #
#                                                                             #
###############################################################################

class MixerStage:
    """
    Two mode unitary mixer on modes (i, j), i < j, 0-based.

    Parameters
    ----------
    modes : tuple of int
        The mixed modes.
    matrix : array, shape=(2, 2)
        Unitary acting on (mode i, mode j).
    note : str, optional
        Provenance of the stage.

    """

    def __init__(self, modes, matrix, note=None):
        self.modes = (int(modes[0]), int(modes[1]))
        self.matrix = np.asarray(matrix, dtype=np.complex128)
        self.note = note

    def embed(self, n_modes):
        out = np.eye(n_modes, dtype=np.complex128)
        out[np.ix_(self.modes, self.modes)] = self.matrix
        return out

    def is_identity(self, tol=IDENTITY_TOL):
        return np.abs(self.matrix - np.eye(2)).max() <= tol

    def __repr__(self):
        return "MixerStage(modes={}, note={!r})".format(self.modes, self.note)


class PhaseStage:
    """Unit modulus phase on one mode."""

    def __init__(self, mode, phase, note=None):
        self.mode = int(mode)
        self.phase = complex(phase)
        self.note = note

    def embed(self, n_modes):
        out = np.eye(n_modes, dtype=np.complex128)
        out[self.mode, self.mode] = self.phase
        return out

    def is_identity(self, tol=IDENTITY_TOL):
        return abs(self.phase - 1) <= tol

    def __repr__(self):
        return "PhaseStage(mode={}, phase={!r})".format(self.mode, self.phase)


class AttenuationStage:
    """Attenuation factor in [0, 1] on one mode."""

    def __init__(self, mode, factor, note=None):
        self.mode = int(mode)
        self.factor = float(factor)
        self.note = note

    def embed(self, n_modes):
        out = np.eye(n_modes, dtype=np.complex128)
        out[self.mode, self.mode] = self.factor
        return out

    def is_identity(self, tol=IDENTITY_TOL):
        return abs(self.factor - 1) <= tol

    def __repr__(self):
        return "AttenuationStage(mode={}, factor={!r})".format(self.mode, self.factor)


class CompiledCircuit:
    """
    Ordered stages acting on n modes. Stages are listed in application
    order: the first stage acts first on the input.

    Parameters
    ----------
    stages : list of MixerStage, PhaseStage or AttenuationStage
        The stages in application order.
    n_modes : int
        Number of modes.

    """

    def __init__(self, stages, n_modes):
        self.stages = list(stages)
        self.n_modes = int(n_modes)

    @property
    def n_mixers(self):
        return sum(isinstance(s, MixerStage) for s in self.stages)

    @property
    def attenuations(self):
        """Attenuation factors in stage order."""
        return [s.factor for s in self.stages if isinstance(s, AttenuationStage)]

    def matrix(self):
        """Ordered product of the embedded stage matrices."""
        product = np.eye(self.n_modes, dtype=np.complex128)
        for stage in self.stages:
            product = stage.embed(self.n_modes) @ product
        return product

    def __len__(self):
        return len(self.stages)

    def __repr__(self):
        return "CompiledCircuit(n_modes={}, {} stages, {} mixers)".format(
            self.n_modes, len(self.stages), self.n_mixers
        )


###############################################################################
#                                                                             #
#                                DECOMPOSITION                                #
#                                                                             #
###############################################################################

def _givens(a, b):
    # T @ (a, b) = (norm, 0)
    norm = np.sqrt(abs(a) ** 2 + abs(b) ** 2)
    return np.array([[np.conj(a), np.conj(b)], [-b, a]], dtype=np.complex128) / norm


def _unitary_stages(u, label=None):
    n = u.shape[0]
    w = np.array(u, dtype=np.complex128)
    rotations = []
    for c in range(n - 1):
        for r in range(n - 1, c, -1):
            a, b = w[r - 1, c], w[r, c]
            if abs(b) < ZERO_TOL:
                continue
            t = _givens(a, b)
            w[[r - 1, r], :] = t @ w[[r - 1, r], :]
            rotations.append(((r - 1, r), t, (r, c)))
    prefix = "" if label is None else label + " "
    stages = []
    for i in range(n):
        d = w[i, i]
        stages.append(PhaseStage(
            i, d / abs(d), note="{}residual phase of mode {}".format(prefix, i)
        ))
    for k in range(len(rotations) - 1, -1, -1):
        modes, t, (r, c) = rotations[k]
        stages.append(MixerStage(
            modes, t.conj().T,
            note="{}rotation {}: eliminates entry ({}, {})".format(prefix, k + 1, r, c)
        ))
    return stages


def decompose_unitary(u):
    """
    Compile a unitary operator into at most n(n-1)/2 two mode mixers on
    adjacent modes, preceded by n single mode phases.

    Parameters
    ----------
    u : TargetOperator or array, shape=(n, n)
        Unitary target.

    Raises
    ------
    ValidationError
        If the target is not unitary within 1e-10.

    Returns
    -------
    CompiledCircuit

    """
    target = _as_target(u)
    if not target.is_unitary:
        raise ValidationError(
            "target operator is not unitary: max|U*U - I| = {!r}".format(
                unitarity_error(target.m)
            )
        )
    circuit = CompiledCircuit(_unitary_stages(target.m), target.n_modes)
    LOGGER.debug("Compiled %d x %d unitary into %d mixers", target.n_modes,
                 target.n_modes, circuit.n_mixers)
    return circuit


def decompose_subunitary(s):
    """
    Compile a subunitary operator S = U diag(sigma) V^*: the stages of V^*,
    one attenuation sigma_i per mode, then the stages of U.

    Parameters
    ----------
    s : TargetOperator or array, shape=(n, n)
        Subunitary target. Unitary targets are accepted.

    Raises
    ------
    ValidationError
        If a singular value exceeds 1 + 1e-10.

    Returns
    -------
    CompiledCircuit

    """
    target = _as_target(s)
    n = target.n_modes
    left, sigma, right = svd(target.m)
    if sigma.max() > 1 + OPERATOR_TOL:
        raise ValidationError(
            "target operator is not subunitary: singular value {!r} > 1".format(sigma.max())
        )
    sigma = np.clip(sigma, 0.0, 1.0)
    stages = _unitary_stages(right, label='V*')
    for i in range(n):
        stages.append(AttenuationStage(
            i, sigma[i], note="singular value {} of mode {}".format(i + 1, i)
        ))
    stages.extend(_unitary_stages(left, label='U'))
    circuit = CompiledCircuit(stages, n)
    LOGGER.debug("Compiled %d x %d subunitary into %d mixers, singular values %s",
                 n, n, circuit.n_mixers, sigma)
    return circuit


def compile_operator(m):
    """Compile m with decompose_unitary or decompose_subunitary, by kind."""
    target = _as_target(m)
    if target.is_unitary:
        return decompose_unitary(target)
    return decompose_subunitary(target)


###############################################################################
#                                                                             #
#                           VERIFICATION AND OUTPUT                           #
#                                                                             #
###############################################################################

class VerificationReport(NamedTuple):
    passed: bool
    max_error: float
    tolerance: float
    n_modes: int
    n_mixers: int

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return {
            'passed': self.passed, 'max_error': self.max_error,
            'tolerance': self.tolerance, 'n_modes': self.n_modes,
            'n_mixers': self.n_mixers,
        }


def verify(c, target, tol=OPERATOR_TOL):
    """
    Compare the ordered product of the circuit stages with the target.

    Parameters
    ----------
    c : CompiledCircuit
        Circuit to check.
    target : TargetOperator or array, shape=(n, n)
        Expected operator.
    tol : float, optional
        Largest accepted entry-wise error. The default is 1e-10.

    Raises
    ------
    ValidationError
        If the dimensions differ.

    Returns
    -------
    VerificationReport

    """
    m = target.m if isinstance(target, TargetOperator) else check_complex_matrix(target, name='target')
    if m.shape != (c.n_modes, c.n_modes):
        raise ValidationError(
            "circuit acts on {} modes but target has shape {}".format(c.n_modes, m.shape)
        )
    error = float(np.abs(c.matrix() - m).max())
    return VerificationReport(error <= tol, error, tol, c.n_modes, c.n_mixers)


def check_stages(c, tol=ELEMENT_TOL):
    """
    Return True if every mixer and phase is unitary and every attenuation
    is in [0, 1], each within tol.
    """
    for stage in c.stages:
        if isinstance(stage, AttenuationStage):
            if stage.factor < -tol or stage.factor > 1 + tol:
                return False
        elif unitarity_error(stage.embed(c.n_modes)) > tol:
            return False
    return True


def to_netlist(c):
    """
    Netlist over n_modes beams realizing the circuit. Mixers become beam
    splitters on beams (i + 1, j + 1), phases become mirrors and
    attenuations become scalar filters; identity stages are left out. The
    provenance of each stage is kept in the placement note.

    Parameters
    ----------
    c : CompiledCircuit
        Circuit to translate.

    Returns
    -------
    Netlist

    """
    placements = []
    for index, stage in enumerate(c.stages, start=1):
        if stage.is_identity():
            continue
        note = "stage {}: {}".format(index, stage.note) if stage.note else "stage {}".format(index)
        if isinstance(stage, MixerStage):
            placements.append(Placement(
                BeamSplitter(stage.matrix, label='m{}'.format(index)),
                (stage.modes[0] + 1, stage.modes[1] + 1), note=note
            ))
        elif isinstance(stage, PhaseStage):
            placements.append(Placement(
                Mirror(stage.phase, label='p{}'.format(index)), stage.mode + 1, note=note
            ))
        else:
            placements.append(Placement(
                scalar_filter(stage.factor, label='a{}'.format(index)), stage.mode + 1,
                note=note
            ))
    return Netlist(c.n_modes, elements=placements)
