"""Rebuild all twenty [72,36,12] table codes and print their weight-enumerator parameters.

Each code is [I_36 | tau], with tau assembled from the listed first rows.
Takes about half a minute.
"""

import time

from gmrcodes import catalog
from gmrcodes.codes import classify_72, weights_upto

print(f"{'code':<5} {'construction':<13} {'kind':<9} {'params':<22} {'A_12':>6} {'secs':>5}")
for e in catalog.load_catalog():
    t0 = time.perf_counter()
    code = e.code()
    profile = weights_upto(code, 16)
    c = classify_72(code, profile)
    params = ", ".join(f"{k}={v}" for k, v in c.params().items())
    mark = "" if c.params() == e.expected_params() else "  <-- differs from table"
    print(f"{e.name:<5} {e.spec:<13} {c.kind:<9} {params:<22} {c.a12:>6} {time.perf_counter() - t0:5.1f}{mark}")

# Type II codes: A_12 = 4398 + alpha.  Type I W_{72,1}: A_12 = 2 beta, A_14 = 8640 - 64 gamma.
c2 = classify_72(catalog.get_entry("C2").code())
print("\nC2:", c2.to_text().replace("\n", "  "))
