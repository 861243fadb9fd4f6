# -*- coding: utf-8 -*-
"""
Hidden variable models
======================

Photon counting estimates of Delta under random hidden variable models, for
random configurations and filters. Every estimate should be compatible with
zero while the quantum prediction is not.
"""

import numpy as np

from sklearn.utils import check_random_state

from interferolab.experiments import malus_model, random_hv_model
from interferolab.utils.experiments_utils import hidden_variable_table, write_csv
from interferolab.utils.random_utils import random_config, random_filter

# Number of random settings
n_cases = 50
# Number of photons for each estimate
n_samples = 1_000_000
# Number of parallel threads for each run
n_jobs = 4

csv_name = 'hidden_variables_check.csv'
rng = check_random_state(0)

# In[Cases]:
cases = []
for case in range(n_cases):
    cfg = random_config(rng, mixed=bool(case % 2))
    a1, a2 = random_filter(rng), random_filter(rng)
    cases.append((case, cfg, a1, a2, malus_model(cfg)))
    cases.append((case, cfg, a1, a2, random_hv_model(cfg, rng)))

# In[Photon counting]:
df = hidden_variable_table(cases, n_samples, seed=0, n_jobs=n_jobs)
write_csv(df, csv_name)

print("Largest |expected Delta| : {:.2e}".format(np.abs(df['expected_delta_hv']).max()))
print("Largest |z| : {:.3f}".format(np.abs(df['z_score']).max()))
print("Fraction of |z| > 4 : {:.4f}".format((np.abs(df['z_score']) > 4).mean()))
print("Mean |delta_qm| : {:.4f}".format(np.abs(df['delta_qm']).mean()))
