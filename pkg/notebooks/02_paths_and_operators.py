"""
Piecewise-linear paths and root operators
=========================================

A path is a list of segment displacements.  Root operators reflect or
translate pieces of a path, and starting from a straight path they generate
a set whose size is the dimension of the corresponding module.
"""

# %%
from pathmodel.operators import apply_word, e_alpha, f_alpha, generate_F_orbit
from pathmodel.paths import PLPath, concat, height_min, pi_lambda
from pathmodel.rational import fmt_vector
from pathmodel.root_system import build
from pathmodel.tensor import dim

A2 = build("A2")
p = pi_lambda(A2, (1, 0))
print(p, "ends at", fmt_vector(p.endpoint()))

# %%
# Lowering and raising
# --------------------
q = f_alpha(A2, p, 0)
print("f1(p) =", q, " endpoint", fmt_vector(q.endpoint()))
print("e1(f1(p)) == p:", e_alpha(A2, q, 0) == p)
print("f1 f2 applied to p ends at", fmt_vector(apply_word(A2, p, "f1 f2").endpoint()))

# %%
# Operators are partial: a path whose height never drops to -1 cannot be raised.
print("e1 of the straight path:", e_alpha(A2, p, 0))

# %%
# Height functions
# ----------------
wiggle = PLPath(A2, [(-1, 2), (2, -1), (-1, 0)])
print("minimum of alpha_1 along the path:", height_min(A2, wiggle, 0))

# %%
# Orbits count dimensions
# -----------------------
for name, lam in [("A2", (1, 1)), ("B2", (1, 1)), ("G2", (0, 1)), ("G2", (1, 1))]:
    R = build(name)
    orb = generate_F_orbit(R, pi_lambda(R, lam))
    print(f"{name} {lam}: {len(orb)} paths, dim = {dim(R, lam)}")

# %%
# Concatenations
# --------------
# Time is spent on each segment in proportion to its size, so a concatenation
# of unequal pieces does not break at t = 1/2.
c = concat(pi_lambda(A2, (2, 0)), pi_lambda(A2, (0, 1)))
print("breakpoint times:", [str(t) for t in c.times])
