# -*- coding: utf-8 -*-
"""
Beam states as unnormalized Jones vectors. The squared norm of a vector is
the probability of presence of a photon in the beam during the reference
time interval, so no renormalization is ever applied.
"""
import numpy as np

from interferolab.utils.checks_utils import check_complex_vector, ValidationError

SINGLE_PHOTON_TOL = 1e-12


def _frozen(x):
    x.flags.writeable = False
    return x


class JonesVector:
    """
    Polarization state of one beam, stored unnormalized.

    Parameters
    ----------
    c_h : complex
        Horizontal amplitude.
    c_v : complex
        Vertical amplitude.

    """

    __slots__ = ('_amplitudes',)

    def __init__(self, c_h=0.0, c_v=0.0):
        self._amplitudes = _frozen(
            check_complex_vector([c_h, c_v], size=2, name='JonesVector')
        )

    @classmethod
    def from_array(cls, x):
        x = check_complex_vector(x, size=2, name='JonesVector')
        return cls(x[0], x[1])

    @classmethod
    def dark(cls):
        """The dark beam, which carries no photon."""
        return cls(0.0, 0.0)

    @property
    def c_h(self):
        return complex(self._amplitudes[0])

    @property
    def c_v(self):
        return complex(self._amplitudes[1])

    @property
    def amplitudes(self):
        """Read-only complex128 array (c_h, c_v)."""
        return self._amplitudes

    def presence_probability(self):
        return presence_probability(self)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._amplitudes.copy()
        return self._amplitudes.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, JonesVector):
            return NotImplemented
        return np.array_equal(self._amplitudes, other._amplitudes)

    def __hash__(self):
        return hash(self._amplitudes.tobytes())

    def __repr__(self):
        return "JonesVector(c_h={!r}, c_v={!r})".format(self.c_h, self.c_v)


def presence_probability(s):
    """
    Probability of presence of a photon in a beam, |c_h|^2 + |c_v|^2.

    Parameters
    ----------
    s : JonesVector
        Beam state.

    Returns
    -------
    float
        The presence probability, exactly 0 for the dark beam.

    """
    x = s.amplitudes
    return float(x.real @ x.real + x.imag @ x.imag)


class TwoBeamState:
    """
    State of a photon spread over two spatial beams.

    Parameters
    ----------
    beam1, beam2 : JonesVector
        Polarization state of each beam.
    single_photon : bool, optional
        If True, the total presence probability must lie in [0, 1]
        (within 1e-12). The default is False.

    """

    __slots__ = ('_beam1', '_beam2')

    def __init__(self, beam1, beam2=None, single_photon=False):
        if beam2 is None:
            beam2 = JonesVector.dark()
        for name, beam in (('beam1', beam1), ('beam2', beam2)):
            if not isinstance(beam, JonesVector):
                raise ValidationError(
                    "{} must be a JonesVector, but got {}".format(name, type(beam))
                )
        self._beam1 = beam1
        self._beam2 = beam2
        if single_photon:
            total = self.presence_probability()
            if total > 1 + SINGLE_PHOTON_TOL:
                raise ValidationError(
                    "A single photon input must have a total presence probability"
                    " <= 1, but found {}".format(total)
                )

    @property
    def beam1(self):
        return self._beam1

    @property
    def beam2(self):
        return self._beam2

    def presence_probability(self):
        return presence_probability(self.beam1) + presence_probability(self.beam2)

    def to_array(self):
        """Return a (2, 2) array, one row of amplitudes per beam."""
        return np.stack([self.beam1.amplitudes, self.beam2.amplitudes])

    @classmethod
    def from_array(cls, x):
        x = np.asarray(x, dtype=np.complex128)
        if x.shape != (2, 2):
            raise ValidationError(
                "A two beam state array must have shape (2, 2), but found {}".format(x.shape)
            )
        return cls(JonesVector.from_array(x[0]), JonesVector.from_array(x[1]))

    def __eq__(self, other):
        if not isinstance(other, TwoBeamState):
            return NotImplemented
        return self.beam1 == other.beam1 and self.beam2 == other.beam2

    def __hash__(self):
        return hash((self._beam1, self._beam2))

    def __repr__(self):
        return "TwoBeamState(beam1={!r}, beam2={!r})".format(self.beam1, self.beam2)
