"""Baseline Verma modules over the divergence-free algebra on five variables.

The negative part is the abelian span of p_1..p_5 (each of degree 2, to
match the grading conventions used elsewhere), the zero part is sl5, and
the positive part is generated by the 70 divergence-free quadratic fields
x_a x_b p_k.  Modules are C[p] (x) F(lambda), elements are dicts
(exponent 5-tuple, rep index) -> scalar.

A quadratic field X acts on p^M (x) v in closed form by commuting it past
the p's: single derivatives leave linear (gl5) symbols acting on the rep
factor, double derivatives leave constant fields multiplying back in.
Singularity means annihilation by e_1..e_4 and by all 70 quadratic fields;
the annihilator of a vector is operator-bracket-closed, and the positive
part is generated by the quadratic component, so nothing else needs
checking.
"""

from .scalars import Q
from .uminus import add_scaled, format_monomial, parse_monomial
from .sl5_reps import (
    build_irrep, parse_weight, weight_str, is_dominant, eps_to_coords,
)
from .linalg import kernel_basis
from .verma import proportional as s5_proportional  # noqa: F401  (generic)
from .scalars import qstr, qparse

s5_add = add_scaled

TOOL_VERSION = "0.1.0"


def quadratic_fields():
    """Spanning set of the divergence-free quadratic fields, 70 entries.

    x_a x_b p_k with k outside {a, b}, plus x_a x_b p_a - 1/2 x_b^2 p_b for
    a != b.  Fields are dicts (a, b, k) -> scalar with a <= b.
    """
    out = []
    for a in range(1, 6):
        for b in range(a, 6):
            for k in range(1, 6):
                if k not in (a, b):
                    out.append({(a, b, k): Q(1)})
    for a in range(1, 6):
        for b in range(1, 6):
            if a != b:
                lo, hi = min(a, b), max(a, b)
                out.append({(lo, hi, a): Q(1), (b, b, b): Q(-1, 2)})
    return out


def _first_derivative(a, b, i):
    """d/dx_i (x_a x_b) as a list of (variable, integer coefficient)."""
    if a == b:
        return [(a, 2)] if i == a else []
    out = []
    if i == a:
        out.append((b, 1))
    if i == b:
        out.append((a, 1))
    return out


class S5Verma:
    """C[p_1..p_5] (x) F(lambda) with exact generator actions."""

    def __init__(self, lam):
        self.lam = parse_weight(lam) if isinstance(lam, str) else tuple(lam)
        self.rep = build_irrep(self.lam)

    def vacuum(self):
        return {((0, 0, 0, 0, 0), 0): Q(1)}

    def tensor(self, u, coeffs):
        out = {}
        for m, cu in u.items():
            for i, cv in coeffs.items():
                s5_add(out, {(m, i): Q(1)}, cu * cv)
        return out

    def mult_p(self, k, elem):
        out = {}
        for (m, i), c in elem.items():
            m2 = list(m)
            m2[k - 1] += 1
            out[(tuple(m2), i)] = c
        return out

    def act_e(self, a, b, elem):
        """gl5 symbol x_a p_b; [x_a p_b, p_c] = -delta_ca p_b on monomials."""
        out = {}
        for (m, i), c in elem.items():
            if m[a - 1]:
                m2 = list(m)
                m2[a - 1] -= 1
                m2[b - 1] += 1
                s5_add(out, {(tuple(m2), i): Q(1)}, Q(-m[a - 1]) * c)
            for i2, cv in self.rep.mat(a, b)[i].items():
                s5_add(out, {(m, i2): Q(1)}, c * cv)
        return out

    def act_quad(self, field, elem):
        """A quadratic field (dict (a,b,k) -> scalar) on an element."""
        out = {}
        for (m, idx), c in elem.items():
            for (a, b, k), cf in field.items():
                c0 = c * cf
                for i in range(1, 6):
                    if not m[i - 1]:
                        continue
                    # one derivative: a linear symbol acts on the rep factor
                    for var, dc in _first_derivative(a, b, i):
                        base = list(m)
                        base[i - 1] -= 1
                        cc = Q(-m[i - 1]) * dc * c0
                        for i2, cv in self.rep.mat(var, k)[idx].items():
                            s5_add(out, {(tuple(base), i2): Q(1)}, cc * cv)
                for i in range(1, 6):
                    for j in range(i, 6):
                        mult = m[i - 1] * (m[j - 1] - (1 if i == j else 0))
                        if i == j:
                            mult //= 2
                        if not mult:
                            continue
                        # (ad p_j)(ad p_i)(x_a x_b p_k) as a constant field
                        const = 0
                        for var, dc in _first_derivative(a, b, i):
                            if var == j:
                                const += dc
                        if not const:
                            continue
                        m2 = list(m)
                        m2[i - 1] -= 1
                        m2[j - 1] -= 1
                        m2[k - 1] += 1
                        s5_add(out, {(tuple(m2), idx): Q(1)},
                               Q(mult * const) * c0)
        return out

    def act_raisings_and_quads(self, elem):
        for i in range(1, 5):
            yield ("e%d" % i, self.act_e(i, i + 1, elem))
        for n, field in enumerate(quadratic_fields()):
            yield ("q%d" % n, self.act_quad(field, elem))

    def element_degree(self, elem):
        degs = {2 * sum(m) for m, _ in elem}
        if len(degs) != 1:
            raise ValueError("element is not degree-homogeneous")
        return degs.pop()

    def element_weight(self, elem):
        ws = set()
        for m, i in elem:
            rw = self.rep.eps_weights[i]
            ws.add(tuple(r - x for x, r in zip(m, rw)))
        if len(ws) != 1:
            raise ValueError("element is not weight-homogeneous")
        return ws.pop()

    def element_coords(self, elem):
        return eps_to_coords(self.element_weight(elem))

    def weight_space(self, d, nu):
        if d % 2:
            return []
        total = d // 2
        nu = tuple(nu)
        out = []
        for m in _exponents_of_total(total):
            mw = tuple(-x for x in m)
            for i, rw in enumerate(self.rep.eps_weights):
                if eps_to_coords(tuple(x + y for x, y in zip(mw, rw))) == nu:
                    out.append((m, i))
        out.sort()
        return out

    def is_singular(self, elem):
        if not elem:
            return False
        return all(not img for _, img in self.act_raisings_and_quads(elem))


def _exponents_of_total(total):
    out = []
    for m1 in range(total + 1):
        for m2 in range(total - m1 + 1):
            for m3 in range(total - m1 - m2 + 1):
                for m4 in range(total - m1 - m2 - m3 + 1):
                    out.append((m1, m2, m3, m4,
                                total - m1 - m2 - m3 - m4))
    out.sort()
    return out


def candidate_weights_s5(module, d):
    if d % 2:
        return []
    seen = set()
    for m in _exponents_of_total(d // 2):
        mw = tuple(-x for x in m)
        for rw in module.rep.eps_weights:
            c = eps_to_coords(tuple(x + y for x, y in zip(mw, rw)))
            if is_dominant(c):
                seen.add(c)
    return sorted(seen)


def s5_terms(elem):
    rows = []
    for (m, i), c in elem.items():
        rows.append({"monomial": format_monomial((m, ())), "index": i,
                     "coeff": qstr(c)})
    rows.sort(key=lambda t: (t["monomial"], t["index"]))
    return rows


def s5_from_terms(terms):
    out = {}
    for t in terms:
        mono = parse_monomial(t["monomial"])
        s5_add(out, {(mono[0], t["index"]): Q(1)}, qparse(t["coeff"]))
    return out


def search_s5(lam, d, entry_cap=200000):
    """Certificates for singular vectors of degree d in the baseline module."""
    lam = parse_weight(lam) if isinstance(lam, str) else tuple(lam)
    module = S5Verma(lam)
    certs = []
    for nu in candidate_weights_s5(module, d):
        block = module.weight_space(d, nu)
        rows = {}
        for j, pair in enumerate(block):
            v = {pair: Q(1)}
            for label, img in module.act_raisings_and_quads(v):
                for key, c in img.items():
                    rows.setdefault((label, key), {})[j] = c
        kern = kernel_basis(list(rows.values()), list(range(len(block))),
                            entry_cap=entry_cap)
        if not kern:
            continue
        vectors = []
        for k in kern:
            out = {}
            for j, c in k.items():
                s5_add(out, {block[j]: Q(1)}, c)
            if not module.is_singular(out):
                raise AssertionError("kernel vector fails the action re-check")
            vectors.append(out)
        certs.append({
            "algebra": "S5",
            "mu": weight_str(lam),
            "degree": d,
            "weight": weight_str(nu),
            "block_dim": len(block),
            "kernel_dim": len(vectors),
            "vectors": [s5_terms(v) for v in vectors],
            "tool_version": TOOL_VERSION,
        })
    return certs


def rudakov_vectors():
    """The classical degree 2 and 4 singular vectors, by label.

    Returns {label: (lambda, degree, element)}. R6 is p_5 times R1.
    """
    from .sl5_reps import ambient_monomial

    def unit(i):
        m = [0] * 5
        m[i - 1] = 1
        return tuple(m)

    out = {}
    m1 = S5Verma((1, 0, 0, 0))
    r1 = {}
    for i in range(1, 6):
        s5_add(r1, m1.tensor({unit(i): Q(1)},
                             m1.rep.coords({ambient_monomial(x=(i,)): Q(1)})),
               Q(1))
    out["R1"] = ((1, 0, 0, 0), 2, r1)

    m2 = S5Verma((0, 1, 0, 0))
    r2 = {}
    for j in range(2, 6):
        coeffs = m2.rep.coords({ambient_monomial(w=((1, j),)): Q(1)})
        s5_add(r2, m2.tensor({unit(j): Q(1)}, coeffs), Q(1))
    out["R2"] = ((0, 1, 0, 0), 2, r2)

    m3 = S5Verma((0, 0, 1, 0))
    r3 = {}
    # p3 (x) x45* + p4 (x) x53* + p5 (x) x34*, with x53* = -x35*
    for i, pair, sgn in ((3, (4, 5), 1), (4, (3, 5), -1), (5, (3, 4), 1)):
        coeffs = m3.rep.coords({ambient_monomial(dw=(pair,)): Q(sgn)})
        s5_add(r3, m3.tensor({unit(i): Q(1)}, coeffs), Q(1))
    out["R3"] = ((0, 0, 1, 0), 2, r3)

    m4 = S5Verma((0, 0, 0, 1))
    r4 = {}
    for i, sgn in ((4, 1), (5, -1)):
        coeffs = m4.rep.coords(
            {ambient_monomial(dx=(9 - i,)): Q(1)})
        s5_add(r4, m4.tensor({unit(i): Q(1)}, coeffs), Q(sgn))
    out["R4"] = ((0, 0, 0, 1), 2, r4)

    m5 = S5Verma((0, 0, 0, 0))
    out["R5"] = ((0, 0, 0, 0), 2, m5.tensor({unit(5): Q(1)}, {0: Q(1)}))

    r6 = m1.mult_p(5, r1)
    out["R6"] = ((1, 0, 0, 0), 4, r6)
    return out
