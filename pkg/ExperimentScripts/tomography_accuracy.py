# -*- coding: utf-8 -*-
"""
Tomography accuracy
===================

Error of the density matrix inferred from photon counting estimates of Delta
under the default design, as a function of the number of photons.
"""

from io import StringIO

import numpy as np
import pandas as pd

from sklearn.utils import check_random_state

from interferolab.experiments import ExperimentConfig, infer_density
from interferolab.states import validate_density
from interferolab.utils.checks_utils import EstimationError
from interferolab.utils.experiments_utils import (
    measurement_table, read_measurements, write_csv
)
from interferolab.utils.random_utils import random_density

# Number of random input states for each photon count
n_trials = 100
photon_counts = [10_000, 100_000, 1_000_000]
# Number of parallel threads for each run
n_jobs = 4

csv_name = 'tomography_accuracy.csv'
cfg = ExperimentConfig.dark_port()
rng = check_random_state(0)

df = pd.DataFrame(columns=['n_samples', 'trial', 'max_error', 'valid'])
i_df = 0
for n_samples in photon_counts:
    for trial in range(n_trials):
        rho = random_density(rng)
        table = measurement_table(cfg, rho, n_samples=n_samples, seed=trial, n_jobs=n_jobs)
        measurements = read_measurements(StringIO(write_csv(table)))
        try:
            estimate = infer_density(measurements, cfg)
        except EstimationError as e:
            print("trial {} failed : {}".format(trial, e))
            continue
        df.loc[i_df] = [
            n_samples, trial, np.abs(estimate.m - rho.m).max(),
            validate_density(estimate).valid
        ]
        i_df += 1
    errors = df[df['n_samples'] == n_samples]['max_error']
    print("{} photons : median error {:.2e}, within 0.01 {:.2%}".format(
        n_samples, errors.median(), (errors <= 0.01).mean()))

write_csv(df, csv_name)
