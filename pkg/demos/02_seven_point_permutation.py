"""
The distinguished permutation of the seven-point projective plane
=================================================================

Every bijection sigma of P(F_2^3) yields a span set

    P_sigma = {0} x F_2^3  union  { (x, y) : x != 0, y in <sigma([x])> },

which is always transverse.  When sigma is a collineation the set is
bilinear; this particular sigma (three fixed points and one 3-cycle away
from a collineation) is the smallest witness that the converse fails.
"""

from transverse import (
    build_P_sigma,
    is_bilinear,
    is_transverse,
    recognize_projective,
    sigma_fig2,
)

sigma = sigma_fig2()
print("image table (point indices):", sigma.index_table())

# Not induced by any invertible matrix: the frame-based recognizer fails.
print("projective:", recognize_projective(sigma) is not None)

a = build_P_sigma(sigma)
print(f"|P_sigma| = {a.size}, transverse: {is_transverse(a)}")

verdict = is_bilinear(a)
print("verdict:", verdict.status)

# The annihilator is 2-dimensional; its four elements are exactly the
# matrices one can list by hand.
print("annihilator dimension:", verdict.ann.dim)
for mat in verdict.ann.elements():
    print("  ", mat)

# The biorthogonal closure picks up ((1,0,0),(0,1,0)) -- x-index 1,
# y-index 2 -- which P_sigma does not contain.  One extra point is all it
# takes to rule out every bilinear presentation at once.
print("closure size:", verdict.closed.size)
print("closure contains (1, 2):", verdict.closed.contains(1, 2))
print("P_sigma contains (1, 2): ", a.contains(1, 2))
print("first witness:", verdict.witness)
