"""
Duality and the vector field baseline
=====================================

Reversing a weight flips a module map around: a degree-d singular vector
over mu at weight nu mirrors to one over nu* at weight mu*.  The even
part alone (divergence-free vector fields) has its own classical Verma
theory with exactly six singular vectors, a useful cross-check model.
"""

from e510.singular_search import dual_pair_check
from e510.s5_verma import search_s5, rudakov_vectors

# kernel dimensions agree across the mirror for the degree-2 catalog cell
chk = dual_pair_check((0, 0, 1, 1), 2, (1, 0, 0, 0))
print("M(%s) deg %d: kernel %d, mirrored M(%s): kernel %d, consistent %s"
      % (chk["mu"], chk["degree"], chk["kernel_dim"], chk["dual_mu"],
         chk["dual_kernel_dim"], chk["consistent"]))

# the vector field model: exhaustive search over the five fundamental
# weights at degrees 2 and 4 finds the six classical vectors
cells = []
for lam in [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0),
            (0, 0, 0, 1)]:
    for d in (2, 4):
        for cert in search_s5(lam, d):
            cells.append((lam, d, cert["weight"]))
print("vector field model cells found:", len(cells))

for name, (lam, deg, vec) in sorted(rudakov_vectors().items()):
    print("%s: weight %s, degree %d, %d terms" % (name, lam, deg, len(vec)))
