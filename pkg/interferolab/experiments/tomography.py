# -*- coding: utf-8 -*-
"""
Inference of the input density matrix from Delta measurements. Each
setting (A1, A2) measures the real linear functional

    rho -> 2 q Re[kappa tr(rho A1^* A2)]

of the Hermitian matrix rho = (x0 I + x1 sx + x2 sy + x3 sz) / 2, so four
spanning settings determine the real parameters x by least squares.
"""
import logging

import numpy as np
from scipy.linalg import lstsq, svd
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from interferolab.elements import LinearFilter, identity_filter
from interferolab.states import DensityMatrix, validate_density
from interferolab.utils.checks_utils import (
    check_probability, EstimationError, ValidationError
)

LOGGER = logging.getLogger(__name__)

PAULI_BASIS = (
    np.eye(2, dtype=np.complex128),
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def _hermitian_from_parameters(x):
    return sum(xj * sj for xj, sj in zip(x, PAULI_BASIS)) / 2


def default_design(cfg):
    """
    Smallest spanning design: A1 = I and A2 running over the Pauli basis
    {I, sx, sy, sz}, multiplied by the unit phase conj(kappa) / |kappa| so
    that every functional reads Re[|kappa| tr(rho sigma)]. All settings are
    unitary, hence valid filters.

    Parameters
    ----------
    cfg : ExperimentConfig
        Apparatus.

    Raises
    ------
    EstimationError
        If kappa vanishes, no setting is sensitive to rho.

    Returns
    -------
    list of (LinearFilter, LinearFilter)

    """
    kappa = cfg.kappa
    if abs(kappa) == 0:
        raise EstimationError(
            "kappa = 0: the apparatus has no interference term, rho cannot be inferred"
        )
    phase = np.conj(kappa) / abs(kappa)
    return [
        (identity_filter(label='A1'), LinearFilter(phase * sigma, label='A2'))
        for sigma in PAULI_BASIS
    ]


class DensityTomography(BaseEstimator):
    """
    Least squares estimator of the input density matrix from Delta
    measurements under various filter settings.

    The estimate is not projected on the positive semidefinite cone, its
    validity is reported in ``validity_``.

    Parameters
    ----------
    kappa : complex, optional
        Interference constant conj(t1^a t1^b) r1^a r2^b of the apparatus.
        The default is -0.25 (symmetric 50/50 splitters).
    q : float, optional
        Detector efficiency. The default is 1.
    rcond : float, optional
        Singular values below rcond times the largest one count as zero
        when checking that the settings span. The default is 1e-10.

    Attributes
    ----------
    rho_ : DensityMatrix
        Estimated density matrix.
    parameters_ : array, shape=(4)
        Estimated coordinates on (I, sx, sy, sz) / 2.
    residuals_ : array, shape=(n_settings)
        Measured minus fitted Delta.
    rank_ : int
        Rank of the design.
    singular_values_ : array, shape=(4)
        Singular values of the design matrix.
    validity_ : DensityCheck
        Structural check of rho_.

    """

    def __init__(self, kappa=-0.25, q=1.0, rcond=1e-10):
        self.kappa = kappa
        self.q = q
        self.rcond = rcond

    def design_matrix(self, settings):
        """
        Real (n_settings, 4) matrix mapping the parameters x to Delta.

        Parameters
        ----------
        settings : list of (LinearFilter, LinearFilter)
            Filter settings (A1, A2).

        Returns
        -------
        array, shape=(n_settings, 4)

        """
        q = check_probability(self.q, name='q')
        kappa = complex(self.kappa)
        rows = []
        for a1, a2 in settings:
            m = a1.a.conj().T @ a2.a
            rows.append([q * (kappa * np.trace(sigma @ m)).real for sigma in PAULI_BASIS])
        return np.asarray(rows, dtype=np.float64).reshape(len(rows), 4)

    def fit(self, settings, deltas):
        """
        Fit the density matrix to measured Delta values.

        Parameters
        ----------
        settings : list of (LinearFilter, LinearFilter)
            Filter settings (A1, A2).
        deltas : array, shape=(n_settings)
            Measured Delta(A1, A2) for each setting.

        Raises
        ------
        EstimationError
            If the settings do not span the Hermitian 2x2 matrices. The
            exception lists the undetermined directions.

        """
        settings = list(settings)
        deltas = np.asarray(deltas, dtype=np.float64).reshape(-1)
        if len(settings) != deltas.shape[0]:
            raise ValidationError(
                "Got {} settings but {} Delta values".format(len(settings), deltas.shape[0])
            )
        if len(settings) == 0:
            raise EstimationError("No measurement given", null_directions=list(PAULI_BASIS))
        X = self.design_matrix(settings)
        _, s, vh = svd(X)
        s_full = np.zeros(4)
        s_full[:s.shape[0]] = s
        threshold = self.rcond * s_full[0] if s_full[0] > 0 else np.inf
        rank = int(np.sum(s_full > threshold))
        self.singular_values_ = s_full
        self.rank_ = rank
        if rank < 4:
            # rows of vh past the rank span the null space of X
            _, _, vh_full = svd(X, full_matrices=True)
            null = [_hermitian_from_parameters(v) for v in vh_full[rank:]]
            raise EstimationError(
                "The {} settings only span {} of the 4 real dimensions of"
                " Hermitian 2x2 matrices; undetermined directions: {}".format(
                    len(settings), rank,
                    "; ".join(str(np.round(n, 6).tolist()) for n in null)
                ),
                null_directions=null,
            )
        x, _, _, _ = lstsq(X, deltas)
        self.parameters_ = x
        self.rho_ = DensityMatrix(_hermitian_from_parameters(x))
        self.residuals_ = deltas - X @ x
        self.validity_ = validate_density(self.rho_)
        LOGGER.info(
            "Tomography on %d settings: max residual %.3g, %s",
            len(settings), np.abs(self.residuals_).max(), self.validity_.diagnostic
        )
        return self

    def predict(self, settings):
        """Delta values predicted by the fitted density matrix."""
        check_is_fitted(self, ['rho_'])
        return self.design_matrix(settings) @ self.parameters_


def infer_density(measurements, cfg, rcond=1e-10):
    """
    Infer the input density matrix from Delta measurements.

    Parameters
    ----------
    measurements : list of (LinearFilter, LinearFilter, float)
        Settings (A1, A2) and the measured Delta(A1, A2).
    cfg : ExperimentConfig
        Apparatus providing kappa and q; its input state is ignored.
    rcond : float, optional
        Relative singular value threshold for the span check.

    Raises
    ------
    EstimationError
        If the settings do not span.

    Returns
    -------
    DensityMatrix
        Least squares estimate, not projected on valid density matrices.

    """
    measurements = list(measurements)
    settings = [(a1, a2) for a1, a2, _ in measurements]
    deltas = [d for _, _, d in measurements]
    return DensityTomography(kappa=cfg.kappa, q=cfg.q, rcond=rcond).fit(settings, deltas).rho_
