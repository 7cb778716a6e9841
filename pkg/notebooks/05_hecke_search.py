"""
Searching for Hecke paths
=========================

Whenever a structure constant is nonzero there should be a Hecke path in the
dominant chamber from alpha to gamma with Delta-length beta.  The search
below is exhaustive, so a negative answer is final.
"""

# %%
from pathmodel.hecke_search import block_types, dilation_sweep, enumerate_generalized_hecke, hecke_exists
from pathmodel.root_system import build
from pathmodel.tensor import oracle_decompose

B2 = build("B2")
res = hecke_exists(B2, (1, 1), (1, 1), (1, 1))
print("exists:", res.exists, " witness:", res.witness)

# %%
# Every nonzero entry of a table has a witness
# --------------------------------------------
a, b = (1, 1), (0, 2)
for gamma in oracle_decompose(B2, a, b).entries:
    print(gamma, hecke_exists(B2, a, b, gamma).exists)

# %%
# Generalized Hecke paths and dilation
# ------------------------------------
paths = enumerate_generalized_hecke(B2, [(0, 1)], 1)
for p in paths:
    print(p)
total = sum(dilation_sweep(B2, lams, 2).paths_checked for lams in block_types(B2))
print(total, "paths checked; dilating each by k_R =", B2.k_R, "gives a generalized LS path")
