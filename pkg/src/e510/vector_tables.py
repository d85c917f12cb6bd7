"""Term tables for the two largest catalog vectors.

Each degree-4 dual-family row is (sign, partial exponents, form pairs,
(e1, e2, e3, e4, k)) standing for the tensor term
sign * partials * d_forms (x) f1^e1 f2^e2 f3^e3 f4^e4 f5^(n+k).
Each degree-11 row is (sign, partial exponents, form pairs, i) standing for
sign * partials * d_forms (x) f_i; the common prefix d12 d13 d14 d15 is
applied by the builder.
"""

# degree-4 dual family, 200 terms
W4E_TERMS = (
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (1, 4), (1, 5)), (3, 0, 0, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 4), (1, 5), (2, 3)), (2, 1, 0, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (1, 4), (1, 5), (2, 3)), (2, 0, 1, 0, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (1, 5), (2, 4)), (2, 1, 0, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (1, 4), (1, 5), (2, 4)), (2, 0, 0, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 5), (2, 3), (2, 4)), (1, 2, 0, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (1, 5), (2, 3), (2, 4)), (1, 1, 1, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (1, 5), (2, 3), (2, 4)), (1, 1, 0, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (1, 4), (2, 5)), (2, 1, 0, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (1, 4), (1, 5), (2, 5)), (2, 0, 0, 0, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (1, 4), (2, 3), (2, 5)), (1, 2, 0, 0, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 4), (2, 3), (2, 5)), (1, 1, 1, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (1, 5), (2, 3), (2, 5)), (1, 1, 0, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (2, 4), (2, 5)), (1, 2, 0, 0, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 4), (2, 4), (2, 5)), (1, 1, 0, 1, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 5), (2, 4), (2, 5)), (1, 1, 0, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 3), (2, 4), (2, 5)), (0, 3, 0, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 3), (2, 4), (2, 5)), (0, 2, 1, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 3), (2, 4), (2, 5)), (0, 2, 0, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 3), (2, 4), (2, 5)), (0, 2, 0, 0, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (1, 5), (3, 4)), (2, 0, 1, 0, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (1, 4), (1, 5), (3, 4)), (2, 0, 0, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 5), (2, 3), (3, 4)), (1, 1, 1, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (1, 5), (2, 3), (3, 4)), (1, 0, 2, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (1, 5), (2, 3), (3, 4)), (1, 0, 1, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 5), (2, 4), (3, 4)), (1, 1, 0, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (1, 5), (2, 4), (3, 4)), (1, 0, 1, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (1, 5), (2, 4), (3, 4)), (1, 0, 0, 2, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (2, 5), (3, 4)), (1, 1, 1, 0, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (1, 4), (2, 5), (3, 4)), (1, 1, 0, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (1, 5), (2, 5), (3, 4)), (1, 0, 1, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (1, 5), (2, 5), (3, 4)), (1, 0, 0, 1, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (2, 3), (2, 5), (3, 4)), (0, 2, 1, 0, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (2, 3), (2, 5), (3, 4)), (0, 1, 2, 0, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 4), (2, 3), (2, 5), (3, 4)), (0, 1, 1, 1, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 5), (2, 3), (2, 5), (3, 4)), (0, 1, 1, 0, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (2, 4), (2, 5), (3, 4)), (0, 2, 0, 1, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (2, 4), (2, 5), (3, 4)), (0, 1, 1, 1, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 4), (2, 4), (2, 5), (3, 4)), (0, 1, 0, 2, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 5), (2, 4), (2, 5), (3, 4)), (0, 1, 0, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (1, 4), (3, 5)), (2, 0, 1, 0, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (1, 4), (1, 5), (3, 5)), (2, 0, 0, 0, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (1, 4), (2, 3), (3, 5)), (1, 1, 1, 0, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 4), (2, 3), (3, 5)), (1, 0, 2, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (1, 5), (2, 3), (3, 5)), (1, 0, 1, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (2, 4), (3, 5)), (1, 1, 1, 0, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 4), (2, 4), (3, 5)), (1, 0, 1, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 5), (2, 4), (3, 5)), (1, 1, 0, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (1, 5), (2, 4), (3, 5)), (1, 0, 0, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 3), (2, 4), (3, 5)), (0, 2, 1, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 3), (2, 4), (3, 5)), (0, 1, 2, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 3), (2, 4), (3, 5)), (0, 1, 1, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 3), (2, 4), (3, 5)), (0, 1, 1, 0, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (1, 4), (2, 5), (3, 5)), (1, 1, 0, 0, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 4), (2, 5), (3, 5)), (1, 0, 1, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (1, 5), (2, 5), (3, 5)), (1, 0, 0, 0, 2)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (2, 4), (2, 5), (3, 5)), (0, 2, 0, 0, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (2, 4), (2, 5), (3, 5)), (0, 1, 1, 0, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 4), (2, 4), (2, 5), (3, 5)), (0, 1, 0, 1, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 5), (2, 4), (2, 5), (3, 5)), (0, 1, 0, 0, 2)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (3, 4), (3, 5)), (1, 0, 2, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 4), (3, 4), (3, 5)), (1, 0, 1, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 5), (3, 4), (3, 5)), (1, 0, 1, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 3), (3, 4), (3, 5)), (0, 1, 2, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 3), (3, 4), (3, 5)), (0, 0, 3, 0, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 3), (3, 4), (3, 5)), (0, 0, 2, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 3), (3, 4), (3, 5)), (0, 0, 2, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 4), (3, 4), (3, 5)), (0, 1, 1, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 4), (3, 4), (3, 5)), (0, 0, 2, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 4), (3, 4), (3, 5)), (0, 0, 1, 2, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 4), (3, 4), (3, 5)), (0, 0, 1, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 5), (3, 4), (3, 5)), (0, 1, 1, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 5), (3, 4), (3, 5)), (0, 0, 2, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 5), (3, 4), (3, 5)), (0, 0, 1, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 5), (3, 4), (3, 5)), (0, 0, 1, 0, 2)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (1, 4), (4, 5)), (2, 0, 0, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (1, 5), (4, 5)), (2, 0, 0, 0, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (1, 4), (2, 3), (4, 5)), (1, 1, 0, 1, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 4), (2, 3), (4, 5)), (1, 0, 1, 1, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 2), (1, 5), (2, 3), (4, 5)), (1, 1, 0, 0, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 5), (2, 3), (4, 5)), (1, 0, 1, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (2, 4), (4, 5)), (1, 1, 0, 1, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 4), (2, 4), (4, 5)), (1, 0, 0, 2, 0)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 5), (2, 4), (4, 5)), (1, 0, 0, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 3), (2, 4), (4, 5)), (0, 2, 0, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 3), (2, 4), (4, 5)), (0, 1, 1, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 3), (2, 4), (4, 5)), (0, 1, 0, 2, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 3), (2, 4), (4, 5)), (0, 1, 0, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (2, 5), (4, 5)), (1, 1, 0, 0, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 4), (2, 5), (4, 5)), (1, 0, 0, 1, 1)),
    (-1, (0, 0, 0, 0, 0), ((1, 3), (1, 5), (2, 5), (4, 5)), (1, 0, 0, 0, 2)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 3), (2, 5), (4, 5)), (0, 2, 0, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 3), (2, 5), (4, 5)), (0, 1, 1, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 3), (2, 5), (4, 5)), (0, 1, 0, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 3), (2, 5), (4, 5)), (0, 1, 0, 0, 2)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (3, 4), (4, 5)), (1, 0, 1, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 4), (3, 4), (4, 5)), (1, 0, 0, 2, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 5), (3, 4), (4, 5)), (1, 0, 0, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 3), (3, 4), (4, 5)), (0, 1, 1, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 3), (3, 4), (4, 5)), (0, 0, 2, 1, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 3), (3, 4), (4, 5)), (0, 0, 1, 2, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 3), (3, 4), (4, 5)), (0, 0, 1, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 4), (3, 4), (4, 5)), (0, 1, 0, 2, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 4), (3, 4), (4, 5)), (0, 0, 1, 2, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 4), (3, 4), (4, 5)), (0, 0, 0, 3, 0)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 4), (3, 4), (4, 5)), (0, 0, 0, 2, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 5), (3, 4), (4, 5)), (0, 1, 0, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 5), (3, 4), (4, 5)), (0, 0, 1, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 5), (3, 4), (4, 5)), (0, 0, 0, 2, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 5), (3, 4), (4, 5)), (0, 0, 0, 1, 2)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 3), (3, 5), (4, 5)), (1, 0, 1, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 4), (3, 5), (4, 5)), (1, 0, 0, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (1, 5), (3, 5), (4, 5)), (1, 0, 0, 0, 2)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 3), (3, 5), (4, 5)), (0, 1, 1, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 3), (3, 5), (4, 5)), (0, 0, 2, 0, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 3), (3, 5), (4, 5)), (0, 0, 1, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 3), (3, 5), (4, 5)), (0, 0, 1, 0, 2)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 4), (3, 5), (4, 5)), (0, 1, 0, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 4), (3, 5), (4, 5)), (0, 0, 1, 1, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 4), (3, 5), (4, 5)), (0, 0, 0, 2, 1)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 4), (3, 5), (4, 5)), (0, 0, 0, 1, 2)),
    (1, (0, 0, 0, 0, 0), ((1, 2), (2, 5), (3, 5), (4, 5)), (0, 1, 0, 0, 2)),
    (1, (0, 0, 0, 0, 0), ((1, 3), (2, 5), (3, 5), (4, 5)), (0, 0, 1, 0, 2)),
    (1, (0, 0, 0, 0, 0), ((1, 4), (2, 5), (3, 5), (4, 5)), (0, 0, 0, 1, 2)),
    (1, (0, 0, 0, 0, 0), ((1, 5), (2, 5), (3, 5), (4, 5)), (0, 0, 0, 0, 3)),
    (1, (1, 0, 0, 0, 0), ((1, 2), (1, 3)), (1, 1, 1, 0, 0)),
    (1, (1, 0, 0, 0, 0), ((1, 2), (1, 4)), (1, 1, 0, 1, 0)),
    (1, (1, 0, 0, 0, 0), ((1, 2), (1, 5)), (1, 1, 0, 0, 1)),
    (1, (1, 0, 0, 0, 0), ((1, 2), (2, 3)), (0, 2, 1, 0, 0)),
    (1, (1, 0, 0, 0, 0), ((1, 3), (2, 3)), (0, 1, 2, 0, 0)),
    (1, (1, 0, 0, 0, 0), ((1, 4), (2, 3)), (0, 1, 1, 1, 0)),
    (1, (1, 0, 0, 0, 0), ((1, 5), (2, 3)), (0, 1, 1, 0, 1)),
    (1, (1, 0, 0, 0, 0), ((1, 2), (2, 4)), (0, 2, 0, 1, 0)),
    (1, (1, 0, 0, 0, 0), ((1, 3), (2, 4)), (0, 1, 1, 1, 0)),
    (1, (1, 0, 0, 0, 0), ((1, 4), (2, 4)), (0, 1, 0, 2, 0)),
    (1, (1, 0, 0, 0, 0), ((1, 5), (2, 4)), (0, 1, 0, 1, 1)),
    (1, (1, 0, 0, 0, 0), ((1, 2), (2, 5)), (0, 2, 0, 0, 1)),
    (1, (1, 0, 0, 0, 0), ((1, 3), (2, 5)), (0, 1, 1, 0, 1)),
    (1, (1, 0, 0, 0, 0), ((1, 4), (2, 5)), (0, 1, 0, 1, 1)),
    (1, (1, 0, 0, 0, 0), ((1, 5), (2, 5)), (0, 1, 0, 0, 2)),
    (-1, (0, 1, 0, 0, 0), ((1, 2), (1, 3)), (2, 0, 1, 0, 0)),
    (-1, (0, 1, 0, 0, 0), ((1, 2), (1, 4)), (2, 0, 0, 1, 0)),
    (-1, (0, 1, 0, 0, 0), ((1, 2), (1, 5)), (2, 0, 0, 0, 1)),
    (-1, (0, 1, 0, 0, 0), ((1, 2), (2, 3)), (1, 1, 1, 0, 0)),
    (-1, (0, 1, 0, 0, 0), ((1, 3), (2, 3)), (1, 0, 2, 0, 0)),
    (-1, (0, 1, 0, 0, 0), ((1, 4), (2, 3)), (1, 0, 1, 1, 0)),
    (-1, (0, 1, 0, 0, 0), ((1, 5), (2, 3)), (1, 0, 1, 0, 1)),
    (-1, (0, 1, 0, 0, 0), ((1, 2), (2, 4)), (1, 1, 0, 1, 0)),
    (-1, (0, 1, 0, 0, 0), ((1, 3), (2, 4)), (1, 0, 1, 1, 0)),
    (-1, (0, 1, 0, 0, 0), ((1, 4), (2, 4)), (1, 0, 0, 2, 0)),
    (-1, (0, 1, 0, 0, 0), ((1, 5), (2, 4)), (1, 0, 0, 1, 1)),
    (-1, (0, 1, 0, 0, 0), ((1, 2), (2, 5)), (1, 1, 0, 0, 1)),
    (-1, (0, 1, 0, 0, 0), ((1, 3), (2, 5)), (1, 0, 1, 0, 1)),
    (-1, (0, 1, 0, 0, 0), ((1, 4), (2, 5)), (1, 0, 0, 1, 1)),
    (-1, (0, 1, 0, 0, 0), ((1, 5), (2, 5)), (1, 0, 0, 0, 2)),
    (1, (0, 0, 1, 0, 0), ((1, 2), (1, 3)), (2, 1, 0, 0, 0)),
    (-1, (0, 0, 1, 0, 0), ((1, 3), (1, 4)), (2, 0, 0, 1, 0)),
    (-1, (0, 0, 1, 0, 0), ((1, 3), (1, 5)), (2, 0, 0, 0, 1)),
    (1, (0, 0, 1, 0, 0), ((1, 2), (2, 3)), (1, 2, 0, 0, 0)),
    (1, (0, 0, 1, 0, 0), ((1, 3), (2, 3)), (1, 1, 1, 0, 0)),
    (1, (0, 0, 1, 0, 0), ((1, 4), (2, 3)), (1, 1, 0, 1, 0)),
    (1, (0, 0, 1, 0, 0), ((1, 5), (2, 3)), (1, 1, 0, 0, 1)),
    (-1, (0, 0, 1, 0, 0), ((1, 2), (3, 4)), (1, 1, 0, 1, 0)),
    (-1, (0, 0, 1, 0, 0), ((1, 3), (3, 4)), (1, 0, 1, 1, 0)),
    (-1, (0, 0, 1, 0, 0), ((1, 4), (3, 4)), (1, 0, 0, 2, 0)),
    (-1, (0, 0, 1, 0, 0), ((1, 5), (3, 4)), (1, 0, 0, 1, 1)),
    (-1, (0, 0, 1, 0, 0), ((1, 2), (3, 5)), (1, 1, 0, 0, 1)),
    (-1, (0, 0, 1, 0, 0), ((1, 3), (3, 5)), (1, 0, 1, 0, 1)),
    (-1, (0, 0, 1, 0, 0), ((1, 4), (3, 5)), (1, 0, 0, 1, 1)),
    (-1, (0, 0, 1, 0, 0), ((1, 5), (3, 5)), (1, 0, 0, 0, 2)),
    (1, (0, 0, 0, 1, 0), ((1, 2), (1, 4)), (2, 1, 0, 0, 0)),
    (1, (0, 0, 0, 1, 0), ((1, 3), (1, 4)), (2, 0, 1, 0, 0)),
    (-1, (0, 0, 0, 1, 0), ((1, 4), (1, 5)), (2, 0, 0, 0, 1)),
    (1, (0, 0, 0, 1, 0), ((1, 2), (2, 4)), (1, 2, 0, 0, 0)),
    (1, (0, 0, 0, 1, 0), ((1, 3), (2, 4)), (1, 1, 1, 0, 0)),
    (1, (0, 0, 0, 1, 0), ((1, 4), (2, 4)), (1, 1, 0, 1, 0)),
    (1, (0, 0, 0, 1, 0), ((1, 5), (2, 4)), (1, 1, 0, 0, 1)),
    (1, (0, 0, 0, 1, 0), ((1, 2), (3, 4)), (1, 1, 1, 0, 0)),
    (1, (0, 0, 0, 1, 0), ((1, 3), (3, 4)), (1, 0, 2, 0, 0)),
    (1, (0, 0, 0, 1, 0), ((1, 4), (3, 4)), (1, 0, 1, 1, 0)),
    (1, (0, 0, 0, 1, 0), ((1, 5), (3, 4)), (1, 0, 1, 0, 1)),
    (-1, (0, 0, 0, 1, 0), ((1, 2), (4, 5)), (1, 1, 0, 0, 1)),
    (-1, (0, 0, 0, 1, 0), ((1, 3), (4, 5)), (1, 0, 1, 0, 1)),
    (-1, (0, 0, 0, 1, 0), ((1, 4), (4, 5)), (1, 0, 0, 1, 1)),
    (-1, (0, 0, 0, 1, 0), ((1, 5), (4, 5)), (1, 0, 0, 0, 2)),
    (1, (0, 0, 0, 0, 1), ((1, 2), (1, 5)), (2, 1, 0, 0, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 3), (1, 5)), (2, 0, 1, 0, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 4), (1, 5)), (2, 0, 0, 1, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 2), (2, 5)), (1, 2, 0, 0, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 3), (2, 5)), (1, 1, 1, 0, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 4), (2, 5)), (1, 1, 0, 1, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 5), (2, 5)), (1, 1, 0, 0, 1)),
    (1, (0, 0, 0, 0, 1), ((1, 2), (3, 5)), (1, 1, 1, 0, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 3), (3, 5)), (1, 0, 2, 0, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 4), (3, 5)), (1, 0, 1, 1, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 5), (3, 5)), (1, 0, 1, 0, 1)),
    (1, (0, 0, 0, 0, 1), ((1, 2), (4, 5)), (1, 1, 0, 1, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 3), (4, 5)), (1, 0, 1, 1, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 4), (4, 5)), (1, 0, 0, 2, 0)),
    (1, (0, 0, 0, 0, 1), ((1, 5), (4, 5)), (1, 0, 0, 1, 1)),
)

# degree-11 vector, 50 inner terms
W11_TERMS = (
    (-1, (0, 1, 0, 0, 0), ((2, 3), (2, 4), (2, 5), (3, 5), (4, 5)), 5),
    (-1, (0, 1, 0, 0, 0), ((2, 3), (2, 4), (2, 5), (3, 4), (4, 5)), 4),
    (-1, (0, 1, 0, 0, 0), ((2, 3), (2, 4), (2, 5), (3, 4), (3, 5)), 3),
    (1, (0, 0, 1, 0, 0), ((2, 3), (2, 5), (3, 4), (3, 5), (4, 5)), 5),
    (1, (0, 0, 1, 0, 0), ((2, 3), (2, 4), (3, 4), (3, 5), (4, 5)), 4),
    (1, (0, 0, 1, 0, 0), ((2, 3), (2, 4), (2, 5), (3, 4), (3, 5)), 2),
    (1, (0, 0, 0, 1, 0), ((2, 4), (2, 5), (3, 4), (3, 5), (4, 5)), 5),
    (-1, (0, 0, 0, 1, 0), ((2, 3), (2, 4), (3, 4), (3, 5), (4, 5)), 3),
    (1, (0, 0, 0, 1, 0), ((2, 3), (2, 4), (2, 5), (3, 4), (4, 5)), 2),
    (-1, (0, 0, 0, 0, 1), ((2, 4), (2, 5), (3, 4), (3, 5), (4, 5)), 4),
    (-1, (0, 0, 0, 0, 1), ((2, 3), (2, 5), (3, 4), (3, 5), (4, 5)), 3),
    (1, (0, 0, 0, 0, 1), ((2, 3), (2, 4), (2, 5), (3, 5), (4, 5)), 2),
    (-1, (1, 1, 0, 0, 0), ((2, 3), (2, 4), (2, 5)), 2),
    (1, (0, 2, 0, 0, 0), ((2, 3), (2, 4), (2, 5)), 1),
    (1, (1, 0, 1, 0, 0), ((2, 3), (2, 5), (3, 4)), 2),
    (-1, (0, 1, 1, 0, 0), ((2, 3), (2, 5), (3, 4)), 1),
    (1, (1, 0, 0, 1, 0), ((2, 4), (2, 5), (3, 4)), 2),
    (-1, (0, 1, 0, 1, 0), ((2, 4), (2, 5), (3, 4)), 1),
    (-1, (1, 0, 1, 0, 0), ((2, 3), (2, 4), (3, 5)), 2),
    (1, (0, 1, 1, 0, 0), ((2, 3), (2, 4), (3, 5)), 1),
    (1, (1, 0, 0, 0, 1), ((2, 4), (2, 5), (3, 5)), 2),
    (-1, (0, 1, 0, 0, 1), ((2, 4), (2, 5), (3, 5)), 1),
    (-1, (1, 0, 1, 0, 0), ((2, 3), (3, 4), (3, 5)), 3),
    (1, (0, 0, 2, 0, 0), ((2, 3), (3, 4), (3, 5)), 1),
    (-1, (1, 0, 0, 1, 0), ((2, 4), (3, 4), (3, 5)), 3),
    (1, (0, 0, 1, 1, 0), ((2, 4), (3, 4), (3, 5)), 1),
    (-1, (1, 0, 0, 0, 1), ((2, 5), (3, 4), (3, 5)), 3),
    (1, (0, 0, 1, 0, 1), ((2, 5), (3, 4), (3, 5)), 1),
    (-1, (1, 0, 0, 1, 0), ((2, 3), (2, 4), (4, 5)), 2),
    (1, (0, 1, 0, 1, 0), ((2, 3), (2, 4), (4, 5)), 1),
    (-1, (1, 0, 0, 0, 1), ((2, 3), (2, 5), (4, 5)), 2),
    (1, (0, 1, 0, 0, 1), ((2, 3), (2, 5), (4, 5)), 1),
    (-1, (1, 0, 1, 0, 0), ((2, 3), (3, 4), (4, 5)), 4),
    (1, (0, 0, 1, 1, 0), ((2, 3), (3, 4), (4, 5)), 1),
    (-1, (1, 0, 0, 1, 0), ((2, 4), (3, 4), (4, 5)), 4),
    (1, (0, 0, 0, 2, 0), ((2, 4), (3, 4), (4, 5)), 1),
    (-1, (1, 0, 0, 0, 1), ((2, 5), (3, 4), (4, 5)), 4),
    (1, (0, 0, 0, 1, 1), ((2, 5), (3, 4), (4, 5)), 1),
    (-1, (1, 0, 1, 0, 0), ((2, 3), (3, 5), (4, 5)), 5),
    (1, (0, 0, 1, 0, 1), ((2, 3), (3, 5), (4, 5)), 1),
    (-1, (1, 0, 0, 1, 0), ((2, 4), (3, 5), (4, 5)), 5),
    (1, (0, 0, 0, 1, 1), ((2, 4), (3, 5), (4, 5)), 1),
    (-1, (1, 0, 0, 0, 1), ((2, 5), (3, 5), (4, 5)), 5),
    (1, (0, 0, 0, 0, 2), ((2, 5), (3, 5), (4, 5)), 1),
    (-1, (2, 0, 1, 0, 0), ((2, 3),), 2),
    (1, (1, 1, 1, 0, 0), ((2, 3),), 1),
    (-1, (2, 0, 0, 1, 0), ((2, 4),), 2),
    (1, (1, 1, 0, 1, 0), ((2, 4),), 1),
    (-1, (2, 0, 0, 0, 1), ((2, 5),), 2),
    (1, (1, 1, 0, 0, 1), ((2, 5),), 1),
)
