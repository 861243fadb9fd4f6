# -*- coding: utf-8 -*-
"""
Compiler accuracy
=================

Reconstruction error, number of beamsplitters and compilation time for Haar
random unitary matrices and random subunitary matrices of growing size.
"""

import pandas as pd

from sklearn.utils import check_random_state

from interferolab.compilers import check_stages, compile_operator, to_netlist, verify
from interferolab.utils.experiments_utils import write_csv
from interferolab.utils.random_utils import haar_unitary, random_subunitary

from timeit import default_timer as timer

# Number of random matrices for each size
n_cases = 100
sizes = range(2, 17)

csv_name = 'compiler_accuracy.csv'
rng = check_random_state(0)

# In[Compilation]:
df = pd.DataFrame(columns=[
    'kind', 'n', 'case', 'max_error', 'n_mixers', 'n_elements', 'valid_stages', 'time'
])
i_df = 0
for n in sizes:
    for case in range(n_cases):
        for kind, m in [('unitary', haar_unitary(n, rng)), ('subunitary', random_subunitary(n, rng))]:
            t0 = timer()
            circuit = compile_operator(m)
            t1 = timer()
            report = verify(circuit, m)
            df.loc[i_df] = [
                kind, n, case, report.max_error, circuit.n_mixers,
                len(to_netlist(circuit).elements), check_stages(circuit), t1 - t0
            ]
            i_df += 1
    print("n = {} : largest error {:.2e}".format(n, df[df['n'] == n]['max_error'].max()))

write_csv(df, csv_name)

# In[Summary]:
summary = df.groupby(['kind', 'n']).agg(
    max_error=('max_error', 'max'), n_mixers=('n_mixers', 'max'), time=('time', 'mean')
)
print(summary)
