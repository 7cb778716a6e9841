"""
Root systems, Weyl orbits and the saturation factor
===================================================

Vectors live in the fundamental-coweight basis, so the value of the i-th
simple root on a vector is just its i-th coordinate.  Roots are stored as
integer rows over the simple roots.
"""

# %%
# Building a root system
# ----------------------
from fractions import Fraction

from pathmodel.rational import fmt_vector
from pathmodel.root_system import build, is_vertex
from pathmodel.weyl import affine_stabilizer, dominant_projection, is_special, orbit

G2 = build("G2")
print("Cartan matrix:", G2.cartan_matrix)
print("positive roots:", G2.positive_roots)
print("highest root coefficients:", G2.highest_root_coeffs)
print("k_R =", G2.k_R, " |W| =", G2.weyl_order)

# %%
# The saturation factor is the lcm of the highest-root coefficients.
for name in ["A3", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"]:
    R = build(name)
    print(f"{name:3s}  theta = {R.highest_root_coeffs[0]}  k_R = {R.k_R}")

# %%
# Weyl orbits and dominant projection
# -----------------------------------
A2 = build("A2")
print(sorted(orbit(A2, (1, 1))))
v, w = dominant_projection(A2, (-1, 0))
print("(-1,0) is moved to", fmt_vector(v), "by the word", w.word)

# %%
# Stabilizers in the affine Weyl group
# ------------------------------------
# The point -(w1+w2)/2 lies only on the wall of the highest root.
x = (Fraction(-1, 2), Fraction(-1, 2))
print("roots fixing x:", [A2.positive_roots[j] for j in sorted(affine_stabilizer(A2, x).root_indices)])

# %%
# In B2 the point w2/2 is a vertex of the Coxeter complex but not special.
# Dilating by k_R makes it special.
B2 = build("B2")
y = (0, Fraction(1, 2))
print("vertex:", is_vertex(B2, y), " special:", is_special(B2, y))
print("after dilation by k_R:", is_special(B2, tuple(B2.k_R * c for c in y)))
