"""
Normal-ordered monomials and finite Verma modules
=================================================

The negative part is generated by the odd forms d_ij; products are
rewritten into the normal order p^M d_{f1} ... d_{fk} with strictly
increasing form indices.  A finite Verma module is U_- tensor F(mu).
"""

from e510.uminus import d_elem, pbw_product, dim_u_minus, format_monomial
from e510.sl5_reps import build_irrep, weyl_dim
from e510.verma import VermaModule

# swapping two overlapping forms is a plain sign flip; disjoint forms also
# produce a vector field correction term
u = pbw_product(d_elem(3, 4), d_elem(1, 2))
print("d34 * d12 =", {format_monomial(m): c for m, c in u.items()})

# squares of odd generators vanish
print("d12 * d12 =", pbw_product(d_elem(1, 2), d_elem(1, 2)))

# graded dimensions of U_- (degree counts p twice, d once)
print("dim (U_-)_d for d = 0..7:",
      [dim_u_minus(d) for d in range(8)])

# finite irreducible coefficient modules arrive with exact bases; their
# closure dimension always matches the Weyl product formula
for w in [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 3)]:
    rep = build_irrep(w)
    assert rep.dim == weyl_dim(w)
    print("dim F%s = %d" % (w, rep.dim))

# the module M(F(0,0,0,1)): act with a raising operator on d_23 (x) x5*
mod = VermaModule((0, 0, 0, 1))
v = mod.tensor(d_elem(2, 3), {mod.rep.dim - 1: 1})
out = mod.act_e(1, 2, v)
print("e_12 moves the tensor to",
      [(format_monomial(m), i) for (m, i) in out])
