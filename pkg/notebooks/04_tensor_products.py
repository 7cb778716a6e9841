"""
Tensor products from paths
==========================

Counting LS paths of shape beta that stay in the dominant chamber when
started at alpha gives the multiplicities of the tensor product.  Here the
count is compared with the Brauer-Klimyk formula.
"""

# %%
from itertools import product

from pathmodel.root_system import build
from pathmodel.tensor import decompose_paths, dim, invariant_triple_nonzero, oracle_decompose

A2 = build("A2")
t = decompose_paths(A2, (1, 1), (1, 1))
for gamma, m in t.rows():
    print(gamma, "x", m, " dim", dim(A2, gamma))
print("total:", sum(m * dim(A2, g) for g, m in t.rows()), "=", dim(A2, (1, 1)) ** 2)

# %%
# Agreement over a small box
# --------------------------
for name, bound in [("A2", 2), ("B2", 2), ("G2", 1)]:
    R = build(name)
    ws = list(product(range(bound + 1), repeat=2))
    same = all(decompose_paths(R, a, b) == oracle_decompose(R, a, b) for a, b in product(ws, repeat=2))
    print(f"{name}: {len(ws) ** 2} pairs, tables agree: {same}")

# %%
# Invariants in triple products
# -----------------------------
print(invariant_triple_nonzero(A2, (1, 0), (1, 0), (1, 0)))
print(invariant_triple_nonzero(A2, (1, 0), (1, 0), (0, 1)))
G2 = build("G2")
print("G2, 7 x 7 =", oracle_decompose(G2, (0, 1), (0, 1)).rows())
