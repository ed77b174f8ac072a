"""
Counting alone forces non-bilinear transverse sets to exist
============================================================

Span sets are parametrized by bijections of projective space; bilinear
ones only arise from the projective bijections, and there are far fewer
of those.  Once

    (number of span sets)  >  (number of bilinear candidates),

some span set must be non-bilinear.  The right side is bounded through
the subspace-counting bound, giving the explicit test implemented by
inequality_check: a lower bound on p^(n-1)! against (32/15) p^(n^4 / 2).
"""

from transverse import (
    bijection_vs_projective,
    inequality_check,
    n0_estimate,
    subspace_counts,
)

# On a projective line with p+1 points: (p+1)! bijections versus
# |PGL(2, F_p)| = (p+1)p(p-1) projective ones.  Equal only for p = 2, 3.
print("p : bijections vs projective")
for p in (2, 3, 5, 7, 11):
    bij, proj = bijection_vs_projective(p)
    marker = "==" if bij == proj else "> "
    print(f"{p:2d}: {bij:9d} {marker} {proj}")

# The subspace bound that feeds the counting argument, checked exactly.
print("\nsubspaces of F_2^m vs the closed-form bound")
for m in range(1, 5):
    total, bound = subspace_counts(2, m)
    print(f"m = {m}: {total:3d} <= {float(bound):9.2f}")

# Where the main inequality first tips, per prime.  The Stirling form is
# what the general argument uses; replacing it with the exact factorial
# moves the p = 13 threshold from n = 3 down to n = 2.
print("\nsmallest n with a guaranteed non-bilinear span set")
print(" p : stirling  exact factorial")
for p in (2, 3, 5, 7, 11, 13, 17):
    print(f"{p:2d} : {n0_estimate(p, 'stirling'):8d}  {n0_estimate(p, 'exact_factorial'):15d}")

# The boundary cases themselves.
print("\n(2, 10):", inequality_check(2, 10), "  (2, 11):", inequality_check(2, 11))
print("(11, 2) exact:", inequality_check(11, 2, "exact_factorial"),
      "  (13, 2) exact:", inequality_check(13, 2, "exact_factorial"))
