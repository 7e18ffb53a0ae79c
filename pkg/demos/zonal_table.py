"""
Zonal spherical functions of (G(r,1,n), S_n)
============================================

The table is indexed by two compositions of n into r parts. Rows are
irreducibles k, columns are configuration types l (how many balls sit in
each urn).
"""

import numpy as np

from ehrenfest import zonal_table

# %%
# For two urns and one ball the table is the character table of Z/2.
print(zonal_table(2, 1).values.real)

# %%
# Two balls in three urns. The first row (trivial representation) and the
# first column (all balls in urn 0) are exactly one.
table = zonal_table(3, 2)
for k, row in zip(table.index, table.values):
    print(k, np.round(row, 3))

# %%
# Orthogonality: weighting columns by the number of configurations of each
# type gives a diagonal Gram matrix with entries 1 / dim V(k).
gram = (table.values * table.orbit_sizes) @ table.values.conj().T / 3**2
print(np.allclose(gram, np.diag(1 / table.dimensions)))

# %%
# Large tables are cheap: r = 3, n = 20 has only 231 types.
print(zonal_table(3, 20).values.shape)
