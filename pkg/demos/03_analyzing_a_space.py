#!/usr/bin/env python3
"""Anatomy of one verification: GL(n) on symmetric matrices.

The pipeline: certify a generic point by an exact rank computation, read
the isotropy subalgebra off a nullspace, count available characters as a
corank, check the determinant transforms by a character through exact
jets, and decide regularity from the Hessian determinant.
"""

from pvkit import classify, gl, sym2
from pvkit.analyzer import (
    action_matrix,
    character_space_dim,
    find_generic_point,
    hessian_regularity,
    isotropy_algebra,
    sample_certified_points,
    verify_relative_invariant,
)
from pvkit.invariants import determinant
from pvkit.linalg import rank

n = 3
rep = sym2(gl(n))        # s -> X s + s X^T in triangle coordinates
f = determinant(n, "sym")

print(f"algebra dim {rep.algebra_dim}, space dim {rep.space_dim}")

# 1. a generic point: the orbit map must be onto, checked by exact rank
point = find_generic_point(rep, seed=0)
m = action_matrix(rep, point.coordinates)
print(f"certified point {point.coordinates}; action matrix rank {rank(m)}")

# 2. the isotropy subalgebra is the nullspace of that matrix
iso = isotropy_algebra(rep, point)
print(f"isotropy dimension {iso.dim} "
      f"(= {rep.algebra_dim} - {rep.space_dim}); bracket closed: "
      f"{iso.is_bracket_closed()}")

# 3. characters available to relative invariants: a corank
print("character space dimension:", character_space_dim(rep, point))

# 4. the determinant is relatively invariant: same character at 10 points
pts = sample_certified_points(rep, 10, seed=0, avoid_zero_of=f)
ok, lam = verify_relative_invariant(rep, f, pts)
print(f"determinant verified: {ok}; character on the gl({n}) basis is "
      "twice the trace form:")
print("  lambda =", lam)

# 5. regularity: the Hessian determinant at a certified point
print("regular:", hessian_regularity(f, rep, pts[0]))

# ... or run the whole pipeline in one call:
report = classify(rep, [f], seed=0)
print()
print("classify:", f"qd1={report.qd1}", f"char={report.character_dim}",
      f"regular={report.regular}")
