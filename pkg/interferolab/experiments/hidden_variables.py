# -*- coding: utf-8 -*-
"""
Classical hidden variable models of the experiment. A source emits photons
in a hidden state lambda drawn from a density p(lambda), and whether a photon
passing filter k is detected depends only on A_k and lambda, through
p_k(A, lambda). The joint detection probability is then additive in the two
paths, so that Delta(A1, A2) vanishes for every model.
"""
import logging

import numpy as np
from scipy import integrate, stats
from sklearn.utils.validation import check_random_state

from interferolab.elements import LinearFilter
from interferolab.experiments.quantum import DeltaResult
from interferolab.utils.checks_utils import check_complex_matrix, ValidationError

LOGGER = logging.getLogger(__name__)


def _as_matrix(a):
    if isinstance(a, LinearFilter):
        return a.a
    return check_complex_matrix(a, shape=(2, 2), name='filter matrix')


class HVModel:
    """
    A hidden variable model.

    Parameters
    ----------
    distribution : frozen scipy.stats distribution
        Distribution of the hidden state lambda. It must provide ``rvs``,
        ``pdf`` and ``support``.
    p1 : callable
        ``p1(a, lambdas)`` returning the detection probabilities through
        filter 1 with matrix ``a`` (array of shape (2, 2)) for an array of
        hidden states.
    p2 : callable
        Same for filter 2.
    name : str, optional
        Model name used in logs and outputs.

    """

    def __init__(self, distribution, p1, p2, name='custom'):
        self.distribution = distribution
        self._p1 = p1
        self._p2 = p2
        self.name = name

    @property
    def support(self):
        lo, hi = self.distribution.support()
        return float(lo), float(hi)

    def sample_lambda(self, random_state, size):
        """Draw `size` hidden states from the model density."""
        return np.asarray(
            self.distribution.rvs(size=size, random_state=random_state), dtype=np.float64
        ).reshape(size)

    def density(self, lambdas):
        return self.distribution.pdf(lambdas)

    def p1(self, a, lambdas):
        return np.asarray(self._p1(_as_matrix(a), np.atleast_1d(lambdas)), dtype=np.float64)

    def p2(self, a, lambdas):
        return np.asarray(self._p2(_as_matrix(a), np.atleast_1d(lambdas)), dtype=np.float64)

    def check(self, filters, lambdas, tol=1e-12):
        """
        Check the model invariants on a set of filters and hidden states:
        p_k(0, lambda) = 0 and p_k(A, lambda) in [0, 1].

        Raises
        ------
        ValidationError
            If an invariant is violated.

        """
        zero = np.zeros((2, 2))
        for k, p in ((1, self.p1), (2, self.p2)):
            if np.abs(p(zero, lambdas)).max() > tol:
                raise ValidationError(
                    "model {}: p{} does not vanish for a total absorber".format(self.name, k)
                )
            for a in filters:
                values = p(a, lambdas)
                if values.min() < -tol or values.max() > 1 + tol:
                    raise ValidationError(
                        "model {}: p{} leaves [0, 1], range [{}, {}]".format(
                            self.name, k, values.min(), values.max()
                        )
                    )
        return self

    def __repr__(self):
        return "HVModel(name={!r})".format(self.name)


def _analyser_probability(a, vectors, weight):
    # weight * |A e(lambda)|^2 for each row e(lambda) of vectors
    transmitted = vectors @ a.T
    return weight * (transmitted.real ** 2 + transmitted.imag ** 2).sum(axis=1)


def malus_model(cfg):
    """
    Polarization angle model: lambda is uniform on [0, pi) and
    p_k(A, lambda) = w_k q |A e(lambda)|^2 with e(lambda) = (cos, sin) and
    path weights w_1 = |t1^a t1^b|^2, w_2 = |r1^a r2^b|^2.

    Averaged over lambda, the single filter predictions reproduce the
    quantum ones for an unpolarized single photon.

    Parameters
    ----------
    cfg : ExperimentConfig
        Apparatus providing the path weights and q.

    Returns
    -------
    HVModel

    """
    w1 = abs(cfg.direct_weight) ** 2 * cfg.q
    w2 = abs(cfg.crossed_weight) ** 2 * cfg.q

    def e(lambdas):
        return np.stack([np.cos(lambdas), np.sin(lambdas)], axis=1)

    return HVModel(
        stats.uniform(loc=0.0, scale=np.pi),
        lambda a, lambdas: _analyser_probability(a, e(lambdas), w1),
        lambda a, lambdas: _analyser_probability(a, e(lambdas), w2),
        name='malus',
    )


def random_hv_model(cfg, random_state=None):
    """
    Randomized hidden variable model. lambda follows a normal density
    truncated to [0, pi), each path has its own elliptic analyser
    e_k(lambda) = (cos(lambda + d_k), exp(i c_k) sin(lambda + d_k)) and the
    path weights satisfy w_1 + w_2 <= 1.

    Parameters
    ----------
    cfg : ExperimentConfig
        Apparatus providing q.
    random_state : int or RandomState, optional
        Seed of the model parameters.

    Returns
    -------
    HVModel

    """
    rng = check_random_state(random_state)
    loc = rng.uniform(0, np.pi)
    scale = rng.uniform(0.2, 2.0)
    distribution = stats.truncnorm(
        (0 - loc) / scale, (np.pi - loc) / scale, loc=loc, scale=scale
    )
    w1, w2 = rng.dirichlet([1.0, 1.0, 1.0])[:2] * cfg.q
    d1, d2 = rng.uniform(0, np.pi, size=2)
    c1, c2 = rng.uniform(0, 2 * np.pi, size=2)

    def analyser(d, c):
        def e(lambdas):
            return np.stack(
                [np.cos(lambdas + d), np.exp(1j * c) * np.sin(lambdas + d)], axis=1
            )
        return e

    e1 = analyser(d1, c1)
    e2 = analyser(d2, c2)
    return HVModel(
        distribution,
        lambda a, lambdas: _analyser_probability(a, e1(lambdas), w1),
        lambda a, lambdas: _analyser_probability(a, e2(lambdas), w2),
        name='random',
    )


def delta_hv(model, a1, a2):
    """
    Hidden variable prediction of Delta(A1, A2). Additivity of the joint
    detection probability makes it identically 0 for every model.
    """
    return 0.0


def expected_delta_hv(model, a1, a2, epsabs=1e-13, epsrel=1e-12):
    """
    Expectation of Delta(A1, A2) under a model, by quadrature over lambda of
    [p1 + p2], [p1] and [p2]. The joint probability is clamped to 1.

    Parameters
    ----------
    model : HVModel
        The hidden variable model.
    a1, a2 : LinearFilter or array, shape=(2, 2)
        Filter settings.
    epsabs, epsrel : float, optional
        Quadrature tolerances.

    Returns
    -------
    DeltaResult

    """
    lo, hi = model.support
    m1 = _as_matrix(a1)
    m2 = _as_matrix(a2)

    def expectation(f):
        value, _ = integrate.quad(
            lambda lam: model.density(lam) * f(lam), lo, hi,
            epsabs=epsabs, epsrel=epsrel, limit=200
        )
        return value

    p_both = expectation(
        lambda lam: min(model.p1(m1, lam)[0] + model.p2(m2, lam)[0], 1.0)
    )
    p_1 = expectation(lambda lam: model.p1(m1, lam)[0])
    p_2 = expectation(lambda lam: model.p2(m2, lam)[0])
    LOGGER.debug(
        "Quadrature for model %s: p_both=%r, p_1=%r, p_2=%r",
        model.name, p_both, p_1, p_2
    )
    return DeltaResult(p_both, p_1, p_2)
