"""Worked example: a [16,8,4] self-dual code from the dihedral group of order 8.

Run with ``python3 notebooks/01_example_d8.py``.
"""

import numpy as np

from gmrcodes import catalog
from gmrcodes.codes import brute_force_weights, code_from_rows, is_self_dual, min_distance
from gmrcodes.gmr import involution, is_unit, sigma_tau

# The element: eight 2x2 coefficients, one per group element x^i y^j.
v = catalog.example1_element()
for label, c in zip(v.group.labels, v.coeffs):
    print(f"{label:>6}: {c.to_array().tolist()}")

# Its block matrix.  Block (i, j) holds the coefficient of g_i^{-1} g_j.
tau = sigma_tau(v)
print()
print(tau.to_text())
print("matches the printed matrix:", tau == catalog.example1_tau())

# tau has rank 8, so v is not a unit; the code is the row space of tau itself.
code = code_from_rows(tau)
print("rank", code.rank, "unit:", is_unit(v))
print("self-dual:", is_self_dual(code), " d =", min_distance(code))

# The involution transposes: tau(v*) = tau(v)^T.
print("tau(v*) == tau^T:", sigma_tau(involution(v)) == tau.T)

# Full enumeration of all 256 codewords.
spectrum = brute_force_weights(code)
print("weights:", spectrum.counts)
assert spectrum.nonzero_min() == 4 and np.array_equal(tau.to_array(), catalog.example1_tau().to_array())
