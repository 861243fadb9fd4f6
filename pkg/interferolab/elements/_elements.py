# -*- coding: utf-8 -*-
"""
Optical elements. Every element validates its physical invariant when it is
built, propagation code never re-validates.
"""
import numpy as np

from interferolab.states import JonesVector, TwoBeamState, presence_probability
from interferolab.utils.checks_utils import (
    check_complex_matrix, check_complex_vector, check_is_numeric,
    unitarity_error, gram_max_eigenvalue, InvalidElementError,
    ValidationError, ELEMENT_TOL
)

BEAMSPLITTER = 'beamsplitter'
FILTER = 'filter'
MIRROR = 'mirror'
DETECTOR = 'detector'


def _name(kind, label):
    return kind if label is None else "{} {}".format(kind, label)


def _matrix(m, kind, label):
    try:
        m = check_complex_matrix(m, shape=(2, 2), name=_name(kind, label))
    except ValidationError as e:
        raise InvalidElementError(str(e))
    m.flags.writeable = False
    return m


class BeamSplitter:
    """
    Non-polarizing beam splitter with a fixed unitary scattering matrix over
    two spatial modes. The same matrix acts on each polarization component.

    Parameters
    ----------
    s : array-like, shape=(2, 2)
        Scattering matrix [[t1, r2], [r1, t2]].
    label : str, optional
        Name used in error messages and netlist files.

    Raises
    ------
    InvalidElementError
        If s is not unitary within 1e-12.

    """

    kind = BEAMSPLITTER

    def __init__(self, s, label=None):
        self.label = label
        self.s = _matrix(s, self.kind, label)
        err = unitarity_error(self.s)
        if err > ELEMENT_TOL:
            raise InvalidElementError(
                "{} is not unitary: max|S*S - I| = {:.3g} > {:g}".format(
                    _name(self.kind, label), err, ELEMENT_TOL
                )
            )

    @property
    def t1(self):
        return complex(self.s[0, 0])

    @property
    def r2(self):
        return complex(self.s[0, 1])

    @property
    def r1(self):
        return complex(self.s[1, 0])

    @property
    def t2(self):
        return complex(self.s[1, 1])

    def __eq__(self, other):
        return isinstance(other, BeamSplitter) and np.array_equal(self.s, other.s)

    def __repr__(self):
        return "BeamSplitter(s={!r}, label={!r})".format(self.s.tolist(), self.label)


class LinearFilter:
    """
    Linear polarization filter transforming psi into A psi. Any subunitary
    matrix is accepted; combinations of polarizers realize the rank one
    matrices u v^* with |u||v| noticeably below 1.

    Parameters
    ----------
    a : array-like, shape=(2, 2)
        Transformation matrix.
    label : str, optional
        Name used in error messages and netlist files.

    Raises
    ------
    InvalidElementError
        If the largest singular value of a exceeds 1 + 1e-12.

    """

    kind = FILTER

    def __init__(self, a, label=None):
        self.label = label
        self.a = _matrix(a, self.kind, label)
        top = gram_max_eigenvalue(self.a)
        if top > 1 + ELEMENT_TOL:
            raise InvalidElementError(
                "{} is not subunitary: largest eigenvalue of A*A is {:.17g}".format(
                    _name(self.kind, label), top
                )
            )

    def __matmul__(self, other):
        """Filter equivalent to applying `other` first, then self."""
        if not isinstance(other, LinearFilter):
            return NotImplemented
        return LinearFilter(self.a @ other.a)

    def __eq__(self, other):
        return isinstance(other, LinearFilter) and np.array_equal(self.a, other.a)

    def __repr__(self):
        return "LinearFilter(a={!r}, label={!r})".format(self.a.tolist(), self.label)


class Mirror:
    """
    Mirror multiplying both polarization components by a unit phase.

    Parameters
    ----------
    phase : complex, optional
        Unit modulus factor. The default is 1.
    label : str, optional
        Name used in error messages and netlist files.

    """

    kind = MIRROR

    def __init__(self, phase=1.0, label=None):
        self.label = label
        try:
            phase = complex(phase)
        except (TypeError, ValueError):
            raise InvalidElementError(
                "{} phase must be a complex number, but got {}".format(
                    _name(self.kind, label), type(phase)
                )
            )
        if not np.isfinite(phase) or abs(abs(phase) - 1) > ELEMENT_TOL:
            raise InvalidElementError(
                "{} phase must have unit modulus, but |phase| = {!r}".format(
                    _name(self.kind, label), abs(phase)
                )
            )
        self.phase = phase

    def __eq__(self, other):
        return isinstance(other, Mirror) and self.phase == other.phase

    def __repr__(self):
        return "Mirror(phase={!r}, label={!r})".format(self.phase, self.label)


class Detector:
    """
    Photon detector with efficiency q.

    Parameters
    ----------
    q : float, optional
        Detection efficiency in [0, 1]. The default is 1.
    label : str, optional
        Name used in error messages and netlist files.

    """

    kind = DETECTOR

    def __init__(self, q=1.0, label=None):
        self.label = label
        q = float(check_is_numeric(q))
        if not np.isfinite(q) or q < 0 or q > 1:
            raise InvalidElementError(
                "{} efficiency must be in [0, 1], but found {!r}".format(
                    _name(self.kind, label), q
                )
            )
        self.q = q

    def __eq__(self, other):
        return isinstance(other, Detector) and self.q == other.q

    def __repr__(self):
        return "Detector(q={!r}, label={!r})".format(self.q, self.label)


###############################################################################
#                                                                             #
#                          SINGLE ELEMENT ACTIONS                             #
#                                                                             #
###############################################################################

def apply_beamsplitter(b, s):
    """
    Mix the two beams of a state: beam1' = t1 beam1 + r2 beam2 and
    beam2' = r1 beam1 + t2 beam2, component by component.

    Parameters
    ----------
    b : BeamSplitter
        The beam splitter.
    s : TwoBeamState
        Input state.

    Returns
    -------
    TwoBeamState
        Output state, with the same total presence probability.

    """
    out = b.s @ s.to_array()
    return TwoBeamState(JonesVector.from_array(out[0]), JonesVector.from_array(out[1]))


def apply_filter(f, s):
    """Return the Jones vector A s."""
    return JonesVector.from_array(f.a @ s.amplitudes)


def apply_mirror(m, s):
    """Return the Jones vector phase * s."""
    return JonesVector.from_array(m.phase * s.amplitudes)


def detect(d, s):
    """
    Detection probability q |s|^2. It reads as a mean count when the
    presence probability of s exceeds 1.
    """
    return d.q * presence_probability(s)


def is_subunitary(a):
    """
    Check whether every eigenvalue of a*a is at most 1 + 1e-12.

    Parameters
    ----------
    a : array-like, shape=(2, 2)
        Matrix to check.

    Returns
    -------
    bool

    """
    a = check_complex_matrix(a, name='matrix')
    return gram_max_eigenvalue(a) <= 1 + ELEMENT_TOL


###############################################################################
#                                                                             #
#                             COMMON ELEMENTS                                 #
#                                                                             #
###############################################################################

def symmetric_beamsplitter(label=None):
    """The 50/50 splitter (1/sqrt(2)) [[1, i], [i, 1]]."""
    h = np.sqrt(0.5)
    return BeamSplitter([[h, 1j * h], [1j * h, h]], label=label)


def polarizer(angle, label=None):
    """
    Ideal linear polarizer transmitting e(angle) = (cos angle, sin angle).

    Parameters
    ----------
    angle : float
        Transmission axis, in radians.

    """
    e = np.array([np.cos(angle), np.sin(angle)])
    return LinearFilter(np.outer(e, e), label=label)


def rank_one_filter(u, v, label=None):
    """Filter A = u v^*. Rejected when |u||v| > 1."""
    u = check_complex_vector(u, size=2, name='u')
    v = check_complex_vector(v, size=2, name='v')
    return LinearFilter(np.outer(u, v.conj()), label=label)


def scalar_filter(factor, label=None):
    """Polarization independent attenuator factor * I, factor in [0, 1]."""
    return LinearFilter(factor * np.eye(2), label=label)


def phase_shift(angle, label=None):
    """Filter multiplying both components by exp(i angle)."""
    return LinearFilter(np.exp(1j * angle) * np.eye(2), label=label)


def identity_filter(label=None):
    return LinearFilter(np.eye(2), label=label)


def absorber(label=None):
    """Total absorber, A = 0."""
    return LinearFilter(np.zeros((2, 2)), label=label)
