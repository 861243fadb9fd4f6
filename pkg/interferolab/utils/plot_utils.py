# -*- coding: utf-8 -*-
"""
Figures of sweep results.
"""
import numpy as np
import seaborn as sns

from matplotlib import pyplot as plt

from interferolab.utils.checks_utils import ValidationError
from interferolab.utils.experiments_utils import SWEEP_COLUMNS


def plot_sweep(
    df, ax=None, xlabel='setting (rad)', title=None, sns_context='talk',
    figsize=None, dpi=None
):
    """
    Plot a sweep DataFrame: the quantum Delta as a line, the hidden variable
    prediction as a dashed line and the photon counting rows, when present,
    as points with 2 standard error bars.

    Parameters
    ----------
    df : DataFrame
        Output of phase_sweep, angle_sweep or crossed_sweep.
    ax : Axes, optional
        Axes to draw on. A new figure is created if None.
    xlabel : str, optional
        Label of the x axis. The default is 'setting (rad)'.
    title : str, optional
        Title of the axes.
    sns_context : str, optional
        Type of seaborn context to apply, use None to not use sns style.
        The default is 'talk'.
    figsize : tuple, optional
        Size of the new figure.
    dpi : int, optional
        Resolution of the new figure.

    Returns
    -------
    Axes

    """
    missing = [c for c in SWEEP_COLUMNS if c not in df.columns]
    if missing:
        raise ValidationError("sweep table is missing columns {}".format(missing))
    if sns_context is not None:
        sns.set_context(sns_context)
    if ax is None:
        _, ax = plt.subplots(figsize=figsize, dpi=dpi)

    exact = df[df['stderr'].isna()]
    counted = df[df['stderr'].notna()]
    ax.plot(exact['setting'], exact['delta_qm'], color='tab:blue', label='quantum')
    ax.plot(exact['setting'], exact['delta_hv'], color='tab:red', linestyle='--',
            label='hidden variables')
    if counted.shape[0] > 0:
        ax.errorbar(
            counted['setting'], counted['delta_qm'], yerr=2 * counted['stderr'],
            fmt='o', markersize=3, color='black', label='photon counting'
        )
    top = max(np.abs(df['delta_qm']).max(), 1e-3)
    ax.set_ylim(-1.1 * top, 1.1 * top)
    ax.axhline(0, color='grey', linewidth=0.5)
    ax.set_xlabel(xlabel)
    ax.set_ylabel('Delta')
    if title is not None:
        ax.set_title(title)
    ax.legend(loc='best')
    return ax
