# -*- coding: utf-8 -*-
"""
Experiment harness: parameter sweeps, fringe fits and measurement tables,
returned as pandas DataFrames ready to be written as CSV.
"""
import json
import logging
from typing import NamedTuple

import numpy as np
import pandas as pd
from scipy.linalg import lstsq

from interferolab.elements import LinearFilter, polarizer
from interferolab.experiments import (
    default_design, delta_quantum, delta_quantum_mixed, delta_hv, expected_delta_hv,
    mc_delta_quantum, mc_hv
)
from interferolab.utils.checks_utils import check_n_samples, is_int, ValidationError
from interferolab.utils.io_utils import array_to_json, loads_matrix

LOGGER = logging.getLogger(__name__)

SWEEP_COLUMNS = ['setting', 'p_both', 'p_1', 'p_2', 'delta_qm', 'delta_hv', 'stderr']
MEASUREMENT_COLUMNS = ['a1', 'a2', 'delta', 'stderr']
HV_COLUMNS = ['case', 'model', 'delta_qm', 'expected_delta_hv', 'estimate', 'stderr', 'z_score']


def write_csv(df, path_or_buf=None):
    """
    Write a DataFrame as UTF-8 CSV with LF line endings and 17 significant
    digits; missing values are written as empty fields.
    """
    return df.to_csv(
        path_or_buf, index=False, float_format="%.17g", lineterminator="\n",
        na_rep="", encoding="utf-8"
    )


def sweep_values(lo, hi, steps, endpoint=True):
    """
    Settings of a sweep over [lo, hi] (or [lo, hi) without endpoint).

    Raises
    ------
    ValidationError
        If steps < 2 or the range is empty.

    """
    if not is_int(steps) or steps < 2:
        raise ValidationError("A sweep needs at least 2 steps, but got {!r}".format(steps))
    if not np.isfinite(lo) or not np.isfinite(hi) or hi <= lo:
        raise ValidationError("Empty sweep range [{}, {}]".format(lo, hi))
    return np.linspace(lo, hi, steps, endpoint=endpoint)


def _delta(cfg, a1, a2):
    if cfg.is_pure:
        return delta_quantum(cfg, a1, a2)
    return delta_quantum_mixed(cfg, a1, a2)


def _sweep(cfg, filters, values, n_samples=None, seed=None, n_jobs=1):
    rows = []
    streams = None
    if n_samples is not None:
        n_samples = check_n_samples(n_samples)
        if seed is None:
            raise ValidationError("A seed is required for Monte Carlo rows")
        streams = np.random.SeedSequence(seed).spawn(len(values))
    for i, value in enumerate(values):
        a1, a2 = filters(value)
        result = _delta(cfg, a1, a2)
        rows.append([
            value, result.p_both, result.p_1, result.p_2, result.delta,
            delta_hv(None, a1, a2), np.nan
        ])
        if streams is not None:
            estimate = mc_delta_quantum(cfg, a1, a2, n_samples, streams[i], n_jobs=n_jobs)
            c = estimate.components
            rows.append([
                value, c.p_both, c.p_1, c.p_2, estimate.estimate,
                delta_hv(None, a1, a2), estimate.stderr
            ])
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def phase_sweep(cfg, a1, a2, lo=0.0, hi=2 * np.pi, steps=64, endpoint=False,
                n_samples=None, seed=None, n_jobs=1):
    """
    Sweep a unit phase exp(i theta) applied to A2.

    Parameters
    ----------
    cfg : ExperimentConfig
        Apparatus and input.
    a1, a2 : LinearFilter
        Base filter settings.
    lo, hi : float, optional
        Phase range in radians. The default is [0, 2 pi).
    steps : int, optional
        Number of settings. The default is 64.
    endpoint : bool, optional
        Include hi. The default is False.
    n_samples : int, optional
        When given, each setting gets a second row estimated by photon
        counting, with its standard error.
    seed : int, optional
        Master seed of the Monte Carlo rows.
    n_jobs : int, optional
        Workers of each Monte Carlo run.

    Returns
    -------
    DataFrame
        Columns setting, p_both, p_1, p_2, delta_qm, delta_hv, stderr.

    """
    values = sweep_values(lo, hi, steps, endpoint)
    return _sweep(
        cfg, lambda theta: (a1, LinearFilter(np.exp(1j * theta) * a2.a, label='A2')),
        values, n_samples=n_samples, seed=seed, n_jobs=n_jobs
    )


def angle_sweep(cfg, a1=None, lo=0.0, hi=np.pi, steps=64, endpoint=True,
                n_samples=None, seed=None, n_jobs=1):
    """
    Sweep the axis angle of a polarizer used as A2, with A1 fixed (the
    horizontal polarizer by default).
    """
    a1 = polarizer(0.0, label='A1') if a1 is None else a1
    values = sweep_values(lo, hi, steps, endpoint)
    return _sweep(
        cfg, lambda theta: (a1, polarizer(theta, label='A2')),
        values, n_samples=n_samples, seed=seed, n_jobs=n_jobs
    )


def crossed_sweep(cfg, lo=0.0, hi=np.pi, steps=64, endpoint=True,
                  n_samples=None, seed=None, n_jobs=1):
    """
    Sweep a pair of crossed polarizers, A1 at theta and A2 at theta + pi/2,
    for which A1^* A2 = 0 at every angle.
    """
    values = sweep_values(lo, hi, steps, endpoint)
    return _sweep(
        cfg,
        lambda theta: (polarizer(theta, label='A1'), polarizer(theta + np.pi / 2, label='A2')),
        values, n_samples=n_samples, seed=seed, n_jobs=n_jobs
    )


class FringeFit(NamedTuple):
    amplitude: float
    phase: float
    offset: float
    max_residual: float


def fit_fringe(settings, deltas):
    """
    Least squares fit of deltas = offset + amplitude cos(theta + phase).

    Parameters
    ----------
    settings : array, shape=(n)
        Phases theta in radians.
    deltas : array, shape=(n)
        Measured or predicted Delta.

    Returns
    -------
    FringeFit

    """
    settings = np.asarray(settings, dtype=np.float64)
    deltas = np.asarray(deltas, dtype=np.float64)
    if settings.shape != deltas.shape or settings.shape[0] < 3:
        raise ValidationError(
            "A fringe fit needs at least 3 settings with one Delta each"
        )
    X = np.stack([np.ones_like(settings), np.cos(settings), np.sin(settings)], axis=1)
    c, _, _, _ = lstsq(X, deltas)
    residual = float(np.abs(deltas - X @ c).max())
    return FringeFit(
        float(np.hypot(c[1], c[2])), float(np.arctan2(-c[2], c[1])), float(c[0]), residual
    )


###############################################################################
#                                                                             #
#                             MEASUREMENT TABLES                              #
#                                                                             #
###############################################################################

def measurement_table(cfg, rho, design=None, n_samples=None, seed=None, n_jobs=1):
    """
    Delta measurements of an input density matrix under a design of filter
    settings, exact or estimated by photon counting.

    Parameters
    ----------
    cfg : ExperimentConfig
        Apparatus; its input is replaced by rho.
    rho : DensityMatrix
        Measured input.
    design : list of (LinearFilter, LinearFilter), optional
        Settings. The default is default_design(cfg).
    n_samples : int, optional
        Photons per probability when estimating. Exact values otherwise.
    seed : int, optional
        Master seed, required with n_samples.
    n_jobs : int, optional
        Workers of each Monte Carlo run.

    Returns
    -------
    DataFrame
        Columns a1, a2 (JSON matrices), delta and stderr.

    """
    design = default_design(cfg) if design is None else list(design)
    cfg = cfg.with_input(rho1=rho)
    streams = None
    if n_samples is not None:
        if seed is None:
            raise ValidationError("A seed is required for Monte Carlo measurements")
        streams = np.random.SeedSequence(seed).spawn(len(design))
    rows = []
    for i, (a1, a2) in enumerate(design):
        if streams is None:
            delta, stderr = delta_quantum_mixed(cfg, a1, a2).delta, np.nan
        else:
            estimate = mc_delta_quantum(cfg, a1, a2, n_samples, streams[i], n_jobs=n_jobs)
            delta, stderr = estimate.estimate, estimate.stderr
        rows.append([
            json.dumps(array_to_json(a1.a)), json.dumps(array_to_json(a2.a)), delta, stderr
        ])
    return pd.DataFrame(rows, columns=MEASUREMENT_COLUMNS)


def read_measurements(path_or_buf):
    """
    Read a measurement CSV with columns a1, a2 and delta.

    Returns
    -------
    list of (LinearFilter, LinearFilter, float)

    """
    df = pd.read_csv(path_or_buf, dtype={'a1': str, 'a2': str})
    missing = [c for c in ('a1', 'a2', 'delta') if c not in df.columns]
    if missing:
        raise ValidationError("measurement table is missing columns {}".format(missing))
    measurements = []
    for i, row in enumerate(df.itertuples(index=False), start=1):
        a1 = LinearFilter(loads_matrix(row.a1, name='a1 of row {}'.format(i)), label='A1')
        a2 = LinearFilter(loads_matrix(row.a2, name='a2 of row {}'.format(i)), label='A2')
        measurements.append((a1, a2, float(row.delta)))
    return measurements



###############################################################################
#                                                                             #
#                           HIDDEN VARIABLE CHECKS                            #
#                                                                             #
###############################################################################

def hidden_variable_table(cases, n_samples, seed, n_jobs=1):
    """
    Confront hidden variable models with the quantum prediction: for each
    case, the quantum Delta, the quadrature of Delta under the model and its
    photon counting estimate with the z-score estimate / stderr.

    Parameters
    ----------
    cases : list of (case, ExperimentConfig, LinearFilter, LinearFilter, HVModel)
        Label, apparatus, filter settings and model of each row.
    n_samples : int
        Photons of each Monte Carlo run.
    seed : int
        Master seed, split into one substream per case.
    n_jobs : int, optional
        Workers of each Monte Carlo run.

    Returns
    -------
    DataFrame
        Columns of HV_COLUMNS, one row per case. The z-score is 0 when the
        standard error vanishes.

    """
    cases = list(cases)
    n_samples = check_n_samples(n_samples)
    if not is_int(seed) or seed < 0:
        raise ValidationError(
            "A non negative integer seed is required, but found {!r}".format(seed)
        )
    streams = np.random.SeedSequence(seed).spawn(len(cases))
    rows = []
    for (case, cfg, a1, a2, model), stream in zip(cases, streams):
        result = mc_hv(model, a1, a2, n_samples, stream, n_jobs=n_jobs)
        z = result.estimate / result.stderr if result.stderr > 0 else 0.0
        rows.append([
            case, model.name, _delta(cfg, a1, a2).delta,
            expected_delta_hv(model, a1, a2).delta, result.estimate, result.stderr, z
        ])
        LOGGER.info("Case %r, model %s: z-score %r", case, model.name, z)
    return pd.DataFrame(rows, columns=HV_COLUMNS)
