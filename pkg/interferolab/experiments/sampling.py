# -*- coding: utf-8 -*-
"""
Monte Carlo photon counting. Every run is a deterministic function of
(seed, n_samples, n_jobs): the master seed is split into one independent
substream per worker with numpy's SeedSequence, and worker results are
combined in worker order.
"""
import logging
import warnings

import numpy as np
from joblib import Parallel, delayed

from interferolab.elements import absorber
from interferolab.experiments._sampling_kernels import (
    hv_detection_counts, N_BOTH, N_FIRST, N_SECOND, SUM_DELTA, SUM_DELTA_SQ,
    N_CLAMPED, N_FIELDS
)
from interferolab.experiments.hidden_variables import _as_matrix
from interferolab.experiments.quantum import DeltaResult, p_quantum, p_quantum_mixed
from interferolab.utils.checks_utils import (
    check_n_jobs, check_n_samples, is_int, ValidationError
)

LOGGER = logging.getLogger(__name__)

# Hidden states drawn per batch inside a worker
BATCH_SIZE = 1 << 18


class MonteCarloEstimate:
    """
    Result of a Monte Carlo run.

    Attributes
    ----------
    estimate : float
        The estimated quantity.
    stderr : float
        Standard error of the estimate, NaN when it cannot be estimated
        (single sample).
    n : int
        Number of samples.
    seed : int
        Master seed.
    n_workers : int
        Number of substreams the run was split into.
    clamp_warnings : int
        Number of samples whose joint detection probability was clamped.
    components : DeltaResult or None
        Estimated p_both, p_1 and p_2 for Delta estimates.

    """

    def __init__(self, estimate, stderr, n, seed, n_workers, clamp_warnings=0,
                 components=None):
        self.estimate = float(estimate)
        self.stderr = float(stderr)
        self.n = int(n)
        self.seed = seed
        self.n_workers = int(n_workers)
        self.clamp_warnings = int(clamp_warnings)
        self.components = components

    def to_dict(self):
        return {
            'estimate': self.estimate,
            'stderr': None if np.isnan(self.stderr) else self.stderr,
            'n': self.n,
            'seed': self.seed,
            'workers': self.n_workers,
            'clamp_warnings': self.clamp_warnings,
        }

    def __repr__(self):
        return "MonteCarloEstimate(estimate={!r}, stderr={!r}, n={}, seed={!r})".format(
            self.estimate, self.stderr, self.n, self.seed
        )


def _check_seed(seed):
    if isinstance(seed, np.random.SeedSequence):
        return seed
    if not is_int(seed) or seed < 0:
        raise ValidationError(
            "A non negative integer seed is required, but found {!r}".format(seed)
        )
    return np.random.SeedSequence(int(seed))


def _split(n_samples, n_workers):
    base, extra = divmod(n_samples, n_workers)
    return [base + (1 if i < extra else 0) for i in range(n_workers)]


def _run_workers(worker, n_samples, seed_seq, n_jobs, **kwargs):
    n_workers = check_n_jobs(n_jobs)
    sizes = _split(n_samples, n_workers)
    streams = seed_seq.spawn(n_workers)
    results = Parallel(n_jobs=n_workers, prefer="threads")(
        delayed(worker)(size, stream, **kwargs)
        for size, stream in zip(sizes, streams) if size > 0
    )
    return results, n_workers


###############################################################################
#                                                                             #
#                           HIDDEN VARIABLE RUNS                              #
#                                                                             #
###############################################################################

def _hv_worker(size, stream, model=None, m1=None, m2=None):
    rng = np.random.default_rng(stream)
    acc = np.zeros(N_FIELDS)
    remaining = size
    while remaining > 0:
        batch = min(BATCH_SIZE, remaining)
        lambdas = model.sample_lambda(rng, batch)
        u = rng.random(batch)
        acc += hv_detection_counts(
            u, np.ascontiguousarray(model.p1(m1, lambdas)),
            np.ascontiguousarray(model.p2(m2, lambdas))
        )
        remaining -= batch
    return acc


def mc_hv(model, a1, a2, n_samples, seed, n_jobs=1):
    """
    Estimate Delta(A1, A2) under a hidden variable model by photon counting.

    Hidden states are drawn i.i.d. from the model density. One uniform draw
    per photon decides the joint run, detected with probability
    min(p1(A1, lambda) + p2(A2, lambda), 1), and both single filter runs
    (common random numbers).

    Parameters
    ----------
    model : HVModel
        The hidden variable model.
    a1, a2 : LinearFilter
        Filter settings.
    n_samples : int
        Number of photons, at least 1.
    seed : int
        Master seed.
    n_jobs : int, optional
        Number of substreams and threads. The default is 1.

    Returns
    -------
    MonteCarloEstimate
        Estimate of Delta with its standard error. ``clamp_warnings`` counts
        the photons for which p1 + p2 exceeded 1.

    """
    n_samples = check_n_samples(n_samples)
    seed_seq = _check_seed(seed)
    results, n_workers = _run_workers(
        _hv_worker, n_samples, seed_seq, n_jobs,
        model=model, m1=_as_matrix(a1), m2=_as_matrix(a2)
    )
    acc = np.sum(results, axis=0)
    n = float(n_samples)
    mean = acc[SUM_DELTA] / n
    if n_samples > 1:
        var = max(acc[SUM_DELTA_SQ] - n * mean ** 2, 0.0) / (n - 1)
        stderr = np.sqrt(var / n)
    else:
        stderr = np.nan
    clamped = int(acc[N_CLAMPED])
    if clamped > 0:
        warnings.warn(
            "Model {}: p1 + p2 exceeded 1 for {} sampled hidden states, the joint"
            " detection probability was clamped to 1".format(model.name, clamped),
            RuntimeWarning
        )
    components = DeltaResult(acc[N_BOTH] / n, acc[N_FIRST] / n, acc[N_SECOND] / n)
    LOGGER.info(
        "mc_hv model=%s n=%d seed=%r workers=%d: delta=%r stderr=%r",
        model.name, n_samples, seed, n_workers, mean, stderr
    )
    return MonteCarloEstimate(
        mean, stderr, n_samples, seed if is_int(seed) else None, n_workers,
        clamp_warnings=clamped, components=components
    )


###############################################################################
#                                                                             #
#                              QUANTUM RUNS                                   #
#                                                                             #
###############################################################################

def _bernoulli_worker(size, stream, p=0.0):
    # the sum of `size` Bernoulli(p) detections
    return np.random.default_rng(stream).binomial(size, p)


def _checked_probability(p):
    if p < -1e-12 or p > 1 + 1e-12:
        raise ValidationError(
            "Photon counting needs a detection probability in [0, 1], but found {!r}"
            " (multiphoton inputs give mean counts)".format(p)
        )
    return min(max(p, 0.0), 1.0)


def _mc_bernoulli(p, n_samples, seed_seq, n_jobs):
    results, n_workers = _run_workers(_bernoulli_worker, n_samples, seed_seq, n_jobs, p=p)
    p_hat = float(np.sum(results)) / n_samples
    stderr = np.sqrt(p_hat * (1 - p_hat) / n_samples)
    return p_hat, stderr, n_workers


def _probability(cfg, a1, a2):
    if cfg.is_pure:
        return _checked_probability(p_quantum(cfg, a1, a2))
    return _checked_probability(p_quantum_mixed(cfg, a1, a2))


def mc_quantum(cfg, a1, a2, n_samples, seed, n_jobs=1):
    """
    Estimate the quantum detection probability p(A1, A2) by counting
    Bernoulli detections of n_samples photons.

    Parameters
    ----------
    cfg : ExperimentConfig
        Apparatus and input (pure or mixed, at most one photon).
    a1, a2 : LinearFilter
        Filter settings.
    n_samples : int
        Number of photons, at least 1.
    seed : int
        Master seed.
    n_jobs : int, optional
        Number of substreams and threads. The default is 1.

    Returns
    -------
    MonteCarloEstimate
        Unbiased estimate of p(A1, A2) with its binomial standard error.

    """
    n_samples = check_n_samples(n_samples)
    seed_seq = _check_seed(seed)
    p = _probability(cfg, a1, a2)
    p_hat, stderr, n_workers = _mc_bernoulli(p, n_samples, seed_seq, n_jobs)
    LOGGER.info(
        "mc_quantum n=%d seed=%r workers=%d: p=%r estimate=%r",
        n_samples, seed, n_workers, p, p_hat
    )
    return MonteCarloEstimate(
        p_hat, stderr, n_samples, seed if is_int(seed) else None, n_workers
    )


def mc_delta_quantum(cfg, a1, a2, n_samples, seed, n_jobs=1):
    """
    Estimate Delta(A1, A2) from three independent photon counting runs
    for p(A1, A2), p(A1, 0) and p(0, A2), each with n_samples photons.

    Returns
    -------
    MonteCarloEstimate
        Estimate of Delta, its standard error (the three runs are
        independent) and the estimated probabilities in ``components``.

    """
    n_samples = check_n_samples(n_samples)
    seed_seq = _check_seed(seed)
    zero = absorber()
    runs = []
    for (f1, f2), stream in zip(((a1, a2), (a1, zero), (zero, a2)), seed_seq.spawn(3)):
        runs.append(_mc_bernoulli(_probability(cfg, f1, f2), n_samples, stream, n_jobs))
    (p_both, s_both, n_workers), (p_1, s_1, _), (p_2, s_2, _) = runs
    components = DeltaResult(p_both, p_1, p_2)
    stderr = np.sqrt(s_both ** 2 + s_1 ** 2 + s_2 ** 2)
    return MonteCarloEstimate(
        components.delta, stderr, n_samples, seed if is_int(seed) else None,
        n_workers, components=components
    )
