# -*- coding: utf-8 -*-
import numpy as np

from interferolab.elements import (
    BeamSplitter, LinearFilter, Mirror, Detector
)
from interferolab.states import JonesVector, presence_probability
from interferolab.utils.checks_utils import (
    is_int, NetlistError, ValidationError
)

SINGLE_PHOTON_TOL = 1e-12


class Placement:
    """
    An element placed on one beam (filter, mirror, detector) or on an
    ordered pair of beams (beam splitter). Beam indices are 1-based.

    Parameters
    ----------
    element : BeamSplitter, LinearFilter, Mirror or Detector
        The placed element.
    beams : int or tuple of int
        Beam index, or (first, second) for a beam splitter.
    note : str, optional
        Free text provenance kept in netlist files.

    """

    __slots__ = ('element', 'beams', 'note')

    def __init__(self, element, beams, note=None):
        if is_int(beams):
            beams = (int(beams),)
        self.element = element
        self.beams = tuple(int(b) if is_int(b) else b for b in beams)
        self.note = note

    @property
    def kind(self):
        return self.element.kind

    def __eq__(self, other):
        if not isinstance(other, Placement):
            return NotImplemented
        return (
            self.element == other.element and self.beams == other.beams
            and self.note == other.note
        )

    def __repr__(self):
        return "Placement({!r}, beams={!r})".format(self.element, self.beams)


def _describe(position, placement):
    label = getattr(placement.element, 'label', None)
    name = placement.kind if label is None else "{} {}".format(placement.kind, label)
    return "element {} ({})".format(position, name)


class Netlist:
    """
    Feed-forward arrangement of optical elements over indexed beams. The
    elements are evaluated in a single left to right pass; detectors are
    terminal taps reading the evolved state.

    Parameters
    ----------
    n_beams : int
        Number of beams.
    elements : list of Placement, optional
        Ordered beam splitters, filters and mirrors.
    detectors : list of Placement, optional
        Detectors, each placed on one beam.

    Raises
    ------
    NetlistError
        If a beam index is out of range, a beam splitter acts twice on the
        same beam, a placement has the wrong arity, or a detector is placed
        among the propagating elements.

    """

    def __init__(self, n_beams, elements=None, detectors=None):
        if not is_int(n_beams) or n_beams < 1:
            raise NetlistError(
                "n_beams must be a positive integer, but found {!r}".format(n_beams)
            )
        self.n_beams = int(n_beams)
        self.elements = tuple(elements or ())
        self.detectors = tuple(detectors or ())
        self._validate()

    def _validate(self):
        for position, placement in enumerate(self.elements, start=1):
            self._check_placement(position, placement)
            if isinstance(placement.element, Detector):
                raise NetlistError(
                    "{} is a detector, detectors must be listed as terminal"
                    " taps".format(_describe(position, placement))
                )
        for position, placement in enumerate(self.detectors, start=1):
            if not isinstance(placement.element, Detector):
                raise NetlistError(
                    "detector tap {} holds a {}".format(position, placement.kind)
                )
            self._check_placement(position, placement, prefix='detector tap')

    def _check_placement(self, position, placement, prefix=None):
        if not isinstance(placement, Placement):
            raise NetlistError(
                "element {} must be a Placement, but got {}".format(position, type(placement))
            )
        where = _describe(position, placement)
        if prefix is not None:
            where = "{} {}".format(prefix, position)
        if not isinstance(placement.element, (BeamSplitter, LinearFilter, Mirror, Detector)):
            raise NetlistError("{} is not an optical element".format(where))
        arity = 2 if isinstance(placement.element, BeamSplitter) else 1
        if len(placement.beams) != arity:
            raise NetlistError(
                "{} must act on {} beam(s), but got {!r}".format(where, arity, placement.beams)
            )
        for b in placement.beams:
            if not is_int(b) or b < 1 or b > self.n_beams:
                raise NetlistError(
                    "{} acts on beam {!r}, outside [1, {}]".format(where, b, self.n_beams)
                )
        if arity == 2 and placement.beams[0] == placement.beams[1]:
            raise NetlistError(
                "{} acts twice on beam {}".format(where, placement.beams[0])
            )

    def operator(self):
        """
        The linear map of the netlist on the direct sum of the per beam
        polarization spaces, as a (2 n_beams, 2 n_beams) matrix with
        index 2 * (beam - 1) + polarization.
        """
        dim = 2 * self.n_beams
        op = np.eye(dim, dtype=np.complex128)
        for placement in self.elements:
            step = np.eye(dim, dtype=np.complex128)
            element = placement.element
            if isinstance(element, BeamSplitter):
                i, j = (b - 1 for b in placement.beams)
                for p in range(2):
                    idx = [2 * i + p, 2 * j + p]
                    step[np.ix_(idx, idx)] = element.s
            else:
                i = placement.beams[0] - 1
                block = element.a if isinstance(element, LinearFilter) else element.phase * np.eye(2)
                step[2 * i:2 * i + 2, 2 * i:2 * i + 2] = block
            op = step @ op
        return op

    def __eq__(self, other):
        if not isinstance(other, Netlist):
            return NotImplemented
        return (
            self.n_beams == other.n_beams and self.elements == other.elements
            and self.detectors == other.detectors
        )

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "Netlist(n_beams={}, {} elements, {} detectors)".format(
            self.n_beams, len(self.elements), len(self.detectors)
        )


class NBeamState:
    """
    State of a photon spread over n spatial beams.

    Parameters
    ----------
    beams : list of JonesVector
        Polarization state of each beam.
    single_photon : bool, optional
        If True, the total presence probability must be at most 1 + 1e-12.
        The default is False.

    """

    __slots__ = ('_beams',)

    def __init__(self, beams, single_photon=False):
        beams = tuple(beams)
        if len(beams) == 0:
            raise ValidationError("An NBeamState needs at least one beam")
        for k, beam in enumerate(beams, start=1):
            if not isinstance(beam, JonesVector):
                raise ValidationError(
                    "beam {} must be a JonesVector, but got {}".format(k, type(beam))
                )
        self._beams = beams
        total = self.presence_probability()
        if not np.isfinite(total):
            raise ValidationError("Total presence probability is not finite")
        if single_photon and total > 1 + SINGLE_PHOTON_TOL:
            raise ValidationError(
                "A single photon input must have a total presence probability"
                " <= 1, but found {}".format(total)
            )

    @property
    def beams(self):
        """Tuple of the JonesVector of each beam."""
        return self._beams

    @property
    def n_beams(self):
        return len(self.beams)

    def presence_probability(self):
        return sum(presence_probability(b) for b in self.beams)

    def to_array(self):
        """Return a (n_beams, 2) complex array."""
        return np.stack([b.amplitudes for b in self.beams])

    @classmethod
    def from_array(cls, x):
        x = np.asarray(x, dtype=np.complex128)
        if x.ndim != 2 or x.shape[1] != 2:
            raise ValidationError(
                "An n beam state array must have shape (n_beams, 2), but found {}".format(x.shape)
            )
        return cls([JonesVector.from_array(row) for row in x])

    @classmethod
    def from_two_beam(cls, s):
        return cls([s.beam1, s.beam2])

    def __getitem__(self, beam):
        """Beam by 1-based index."""
        if beam < 1 or beam > len(self.beams):
            raise IndexError("beam {} outside [1, {}]".format(beam, len(self.beams)))
        return self.beams[beam - 1]

    def __eq__(self, other):
        if not isinstance(other, NBeamState):
            return NotImplemented
        return self.beams == other.beams

    def __hash__(self):
        return hash(self._beams)

    def __repr__(self):
        return "NBeamState({!r})".format(list(self.beams))
