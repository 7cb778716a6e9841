"""
LS paths, Hecke paths and chains
================================

Both classes are billiard paths whose breaks are governed by chains in the
local stabilizer.  LS paths need chains whose steps are maximal in the whole
Weyl group, while Hecke paths accept any chain.
"""

# %%
from pathlib import Path

from pathmodel.chains import chain_dist, find_chain, ge
from pathmodel.operators import generate_F_orbit
from pathmodel.paths import concat, height_min, load, pi_lambda
from pathmodel.predicates import is_generalized_ls1, is_hecke_path, is_ls_path
from pathmodel.rational import fmt_vector
from pathmodel.root_system import build
from pathmodel.weyl import orbit

A2 = build("A2")

# %%
# Chains between orbit points
# ---------------------------
print("-theta^v >= theta^v:", ge(A2, (-1, -1), (1, 1)))
print("longest chain length:", chain_dist(A2, (-1, -1), (1, 1)))
c = find_chain(A2, (-1, -1), (1, 1))
print("a witness:", " -> ".join(fmt_vector(v) for v in c.vertices), "via roots", [A2.positive_roots[j] for j in c.reflection_roots])

# %%
# A path that separates the two classes
# -------------------------------------
# Go straight to -(w1+w2)/2 and come back.  The break sits on the wall of the
# highest root only, and that single reflection is not a maximal step.
fixture = Path(__file__).resolve().parent.parent / "fixtures" / "a2_hecke_not_ls.json"
p, _ = load(fixture)
print("Hecke:", is_hecke_path(A2, p).verdict)
v = is_ls_path(A2, p, (1, 1))
print("LS:", v.verdict, "-", v.reason)
print("height minima:", height_min(A2, p, 0), height_min(A2, p, 1))

# %%
# Every LS path is a Hecke path
# -----------------------------
orb = generate_F_orbit(A2, pi_lambda(A2, (2, 1)))
print(sum(bool(is_hecke_path(A2, q)) for q in orb), "of", len(orb), "LS paths are Hecke")

# %%
# Generalized LS paths
# --------------------
# Products of a w1-path and a w2-path model the tensor product of the two
# modules.  The junction condition keeps exactly the eight paths of the
# adjoint summand and drops the trivial one.
products = [concat(pi_lambda(A2, a), pi_lambda(A2, b)) for a in orbit(A2, (1, 0)) for b in orbit(A2, (0, 1))]
kept = [q for q in products if is_generalized_ls1(A2, q, [(1, 0), (0, 1)])]
print(len(kept), "of", len(products), "products pass")
