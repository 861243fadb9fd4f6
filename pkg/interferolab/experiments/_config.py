# -*- coding: utf-8 -*-
import numpy as np

from interferolab.elements import BeamSplitter, symmetric_beamsplitter
from interferolab.states import (
    JonesVector, DensityMatrix, pure_density, validate_density, presence_probability
)
from interferolab.utils.checks_utils import check_probability, ValidationError


class ExperimentConfig:
    """
    Fixed apparatus of the two-splitter interference experiment: splitter
    S^a, two filters, splitter S^b and a detector on the first output beam.
    The second input beam is dark.

    Parameters
    ----------
    sa : BeamSplitter
        First splitter S^a.
    sb : BeamSplitter
        Second splitter S^b.
    q : float, optional
        Detector efficiency in [0, 1]. The default is 1.
    psi1 : JonesVector, optional
        Pure input state of beam 1.
    rho1 : DensityMatrix, optional
        Mixed input state of beam 1, used instead of psi1.

    Raises
    ------
    ValidationError
        If both or none of psi1 and rho1 are given, if psi1 carries more than
        one photon, or if rho1 is not a valid density matrix.

    """

    def __init__(self, sa, sb, q=1.0, psi1=None, rho1=None):
        for name, b in (('sa', sa), ('sb', sb)):
            if not isinstance(b, BeamSplitter):
                raise ValidationError(
                    "{} must be a BeamSplitter, but got {}".format(name, type(b))
                )
        if (psi1 is None) == (rho1 is None):
            raise ValidationError("Exactly one of psi1 and rho1 must be given")
        if psi1 is not None:
            if not isinstance(psi1, JonesVector):
                raise ValidationError(
                    "psi1 must be a JonesVector, but got {}".format(type(psi1))
                )
            if presence_probability(psi1) > 1 + 1e-12:
                raise ValidationError(
                    "psi1 must describe at most one photon, but |psi1|^2 = {}".format(
                        presence_probability(psi1)
                    )
                )
        if rho1 is not None:
            if not isinstance(rho1, DensityMatrix):
                raise ValidationError(
                    "rho1 must be a DensityMatrix, but got {}".format(type(rho1))
                )
            verdict = validate_density(rho1)
            if not verdict.valid:
                raise ValidationError("rho1 is " + verdict.diagnostic)
        self.sa = sa
        self.sb = sb
        self.q = check_probability(q, name='q')
        self.psi1 = psi1
        self.rho1 = rho1

    @classmethod
    def dark_port(cls, q=1.0):
        """Symmetric 50/50 splitters and psi1 = (1, 0)."""
        return cls(
            symmetric_beamsplitter(label='sa'), symmetric_beamsplitter(label='sb'),
            q=q, psi1=JonesVector(1.0, 0.0)
        )

    @property
    def is_pure(self):
        return self.psi1 is not None

    @property
    def rho(self):
        """Density matrix of beam 1, psi1 psi1^* for a pure input."""
        return self.rho1 if self.rho1 is not None else pure_density(self.psi1)

    @property
    def direct_weight(self):
        """Amplitude t1^a t1^b of the path through filter 1."""
        return self.sa.t1 * self.sb.t1

    @property
    def crossed_weight(self):
        """Amplitude r1^a r2^b of the path through filter 2."""
        return self.sa.r1 * self.sb.r2

    @property
    def kappa(self):
        """Interference constant conj(t1^a t1^b) r1^a r2^b, recomputed on access."""
        return np.conj(self.direct_weight) * self.crossed_weight

    def with_input(self, psi1=None, rho1=None):
        return ExperimentConfig(self.sa, self.sb, q=self.q, psi1=psi1, rho1=rho1)

    def __repr__(self):
        source = "psi1={!r}".format(self.psi1) if self.is_pure else "rho1={!r}".format(self.rho1)
        return "ExperimentConfig(sa={!r}, sb={!r}, q={!r}, {})".format(
            self.sa, self.sb, self.q, source
        )
