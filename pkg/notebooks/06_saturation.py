"""
Saturation experiments
======================

A triple is live if some dilation N has invariants.  Saturation with factor
k says the k-fold dilation then has invariants too.  Type A saturates with
k = 1; B2 does not, but k_R^2 = 4 is enough.
"""

# %%
from pathmodel.saturation import ScanConfig, saturation_scan

for name, k in [("A2", 1), ("B2", 1), ("B2", 4)]:
    rep = saturation_scan(ScanConfig(name, coord_bound=2, n_max=3, k=k))
    print(f"{name} k={k}: {rep.triples_with_some_N_nonzero} live of {rep.triples_scanned}, "
          f"{len(rep.violations)} violations  [{rep.label}]")
    for v in rep.violations[:3]:
        print("   ", v)
