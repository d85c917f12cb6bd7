"""
The corrected form basis
========================

Plain products d_I of odd generators are not equivariant under the full
matrix algebra because overlapping pairs spawn vector field terms.  The
omega elements add signed lower-height corrections over self
intersection free position sets, and three independent evaluation routes
agree on every input.
"""

from e510.omega_basis import (
    omega, omega_direct, omega_recursive, omega_symmetrized,
    ricomega_residual, dw_product_residual, equivariance_residual,
)
from e510.uminus import format_monomial

# a disjoint pair of forms picks up one correction term
pairs = ((1, 2), (3, 4))
print("omega_12,34 =",
      {format_monomial(m): str(c) for m, c in omega(pairs).items()})

# the three routes: direct sum over matchings, head recursion, and a
# symmetrized average over all orderings
tp = ((1, 2), (1, 3), (2, 4), (3, 5))
a, b, c = omega_direct(tp), omega_recursive(tp), omega_symmetrized(tp)
print("routes agree on a 4-form tuple:", a == b == c,
      "with", len(a), "terms")

# reordering the tuple only changes the overall sign
print("transposition flips the sign:",
      omega(((1, 3), (1, 2))) ==
      {m: -v for m, v in omega(((1, 2), (1, 3))).items()})

# removal identity: contracting one pair out of omega_I reproduces the
# signed sum over positions, and the residual vanishes identically
print("removal residual empty:", ricomega_residual(tp) == {})

# multiplying by a fresh form from the left stays inside the basis
print("product residual empty:", dw_product_residual(4, 5, ((1, 2), (1, 3))) == {})

# equivariance: the matrix algebra acts by index substitution alone
print("equivariance residual empty:",
      equivariance_residual(2, 5, tp) == {})
