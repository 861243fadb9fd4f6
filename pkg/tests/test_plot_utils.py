import matplotlib
matplotlib.use("Agg")

import pytest

from matplotlib import pyplot as plt

from interferolab.elements import identity_filter
from interferolab.experiments import ExperimentConfig
from interferolab.utils.checks_utils import ValidationError
from interferolab.utils.experiments_utils import phase_sweep
from interferolab.utils.plot_utils import plot_sweep


def test_plot_sweep_lines():
    df = phase_sweep(ExperimentConfig.dark_port(), identity_filter(), identity_filter(), steps=16)
    ax = plot_sweep(df, sns_context=None)
    assert len(ax.get_lines()) >= 2
    assert ax.get_ylim()[0] < -0.5 < 0.5 < ax.get_ylim()[1]
    plt.close(ax.figure)


def test_plot_sweep_with_counting_rows():
    df = phase_sweep(
        ExperimentConfig.dark_port(), identity_filter(), identity_filter(), steps=4,
        n_samples=1000, seed=0
    )
    fig, ax = plt.subplots()
    assert plot_sweep(df, ax=ax, title='dark port') is ax
    assert ax.get_title() == 'dark port'
    plt.close(fig)


def test_plot_sweep_missing_columns():
    df = phase_sweep(ExperimentConfig.dark_port(), identity_filter(), identity_filter(), steps=4)
    with pytest.raises(ValidationError):
        plot_sweep(df.drop(columns=['delta_hv']), sns_context=None)
