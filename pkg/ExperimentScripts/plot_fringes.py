# -*- coding: utf-8 -*-
"""
Interference fringes
====================

Delta for a phase sweep exp(i theta) A2 and for a polarizer angle sweep on
the second beam, with the photon counting estimates of each setting.
"""

import numpy as np
from matplotlib import pyplot as plt

from interferolab.elements import identity_filter
from interferolab.experiments import ExperimentConfig
from interferolab.utils.experiments_utils import (
    angle_sweep, fit_fringe, phase_sweep, write_csv
)
from interferolab.utils.plot_utils import plot_sweep

# Number of photons per probability for the counting rows
n_samples = 100_000
# Number of parallel threads for each run
n_jobs = 4
seed = 0

cfg = ExperimentConfig.dark_port()

# In[Phase sweep]:
df_phase = phase_sweep(
    cfg, identity_filter(), identity_filter(), steps=32,
    n_samples=n_samples, seed=seed, n_jobs=n_jobs
)
write_csv(df_phase, 'phase_fringe.csv')

exact = df_phase[df_phase['stderr'].isna()]
fit = fit_fringe(exact['setting'].values, exact['delta_qm'].values)
print("Phase fringe : amplitude {:.6f}, phase {:.6f}, offset {:.2e}".format(
    fit.amplitude, fit.phase, fit.offset))

# In[Angle sweep]:
df_angle = angle_sweep(
    cfg, lo=0.0, hi=np.pi, steps=32, n_samples=n_samples, seed=seed + 1,
    n_jobs=n_jobs
)
write_csv(df_angle, 'angle_fringe.csv')

# In[Figure]:
fig, ax = plt.subplots(ncols=2, figsize=(16, 6))
plot_sweep(df_phase, ax=ax[0], xlabel='phase of A2 (rad)', title='Phase sweep')
plot_sweep(df_angle, ax=ax[1], xlabel='polarizer angle of A2 (rad)', title='Angle sweep')
fig.tight_layout()
fig.savefig('fringes.png')
plt.show()
