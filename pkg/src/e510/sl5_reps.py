"""Finite irreducible sl5 modules, realized inside tensor products.

F(a,b,c,d) is generated by the highest weight vector

    x1^a x12^b (x45*)^c (x5*)^d

inside Sym^a(C^5) x Sym^b(L) x Sym^c(L*) x Sym^d(C^5*), with L the second
exterior power of C^5.  Weights are written in fundamental coordinates
(a, b, c, d); simple raising/lowering operators are e_i = x_i p_{i+1} and
f_i = x_{i+1} p_i.  Dual module: F(a,b,c,d)* = F(d,c,b,a), with the dual
action (X f)(v) = -f(X v).

Ambient monomials are 4-tuples of exponent tuples (5, 10, 10, 5 slots); a
vector is a dict monomial -> scalar.  Basis construction closes the highest
weight vector under f_1..f_4, keeping an exact echelon per weight block, and
records for each basis vector which lowering operator produced it from which
earlier vector (used to transport vectors along module morphisms).
"""

from functools import lru_cache

from .scalars import Q
from .linalg import Echelon
from .uminus import PAIRS, PAIR_INDEX

# block order inside an ambient monomial key
_X, _W, _WD, _XD = 0, 1, 2, 3


def parse_weight(text: str):
    parts = tuple(int(x) for x in text.split(","))
    if len(parts) != 4:
        raise ValueError("weights have four fundamental coordinates: %r" % text)
    return parts


def weight_str(w) -> str:
    return ",".join(str(x) for x in w)


def is_dominant(w) -> bool:
    return all(x >= 0 for x in w)


def dual_weight(w):
    return tuple(reversed(tuple(w)))


def eps_to_coords(w5):
    """Fundamental coordinates of an eps-weight (well defined mod (1,..,1))."""
    return (w5[0] - w5[1], w5[1] - w5[2], w5[2] - w5[3], w5[3] - w5[4])


def weyl_dim(w) -> int:
    """Dimension of F(w) by the Weyl product formula over positive roots."""
    a, b, c, d = w
    lam = (a, b, c, d)
    num, den = 1, 1
    for i in range(4):
        for j in range(i, 4):
            span = sum(lam[i:j + 1]) + (j - i + 1)
            num *= span
            den *= (j - i + 1)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("Weyl dimension is not an integer")
    return q


def gt_pattern_count(w) -> int:
    """Dimension of F(w) by counting Gelfand-Tsetlin branching patterns.

    Independent of weyl_dim: recursively counts chains of interlacing
    partitions down the gl5 > gl4 > ... > gl1 restriction tower.
    """
    a, b, c, d = w
    top = (a + b + c + d, b + c + d, c + d, d, 0)

    @lru_cache(maxsize=None)
    def count(row):
        if len(row) == 1:
            return 1
        total = 0
        for nxt in _interlacing(row):
            total += count(nxt)
        return total

    def _interlacing(row):
        def rec(i, prefix):
            if i == len(row) - 1:
                yield tuple(prefix)
                return
            lo, hi = row[i + 1], row[i]
            for v in range(lo, hi + 1):
                yield from rec(i + 1, prefix + [v])
        yield from rec(0, [])

    return count(top)


def _pair_step(i, j, b, a):
    """e_ab applied to the wedge symbol with indices (i, j): list of
    ((i', j'), sign) with i' < j', empty when the image vanishes."""
    out = []
    if b == i:
        if a != j:
            out.append(((a, j), 1) if a < j else ((j, a), -1))
    if b == j:
        if a != i:
            out.append(((i, a), 1) if i < a else ((a, i), -1))
    return out


def act_ambient(a, b, vec):
    """Action of the gl5 element x_a p_b on an ambient vector."""
    out = {}
    for mono, c in vec.items():
        if a == b:
            ev = _eps_weight(mono)[a - 1]
            if ev:
                s = out.get(mono, 0) + c * ev
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
            continue
        xs, ws, wds, xds = mono
        # Sym(C^5): x_b -> x_a
        k = xs[b - 1]
        if k:
            nx = list(xs)
            nx[b - 1] -= 1
            nx[a - 1] += 1
            _bump(out, (tuple(nx), ws, wds, xds), c * k)
        # Sym(L): derivation over each wedge factor
        for f, e in enumerate(ws):
            if not e:
                continue
            i, j = PAIRS[f]
            for pq, sgn in _pair_step(i, j, b, a):
                nw = list(ws)
                nw[f] -= 1
                nw[PAIR_INDEX[pq]] += 1
                _bump(out, (xs, tuple(nw), wds, xds), c * e * sgn)
        # Sym(L*): e_ab . x*_kl = -delta_ak x*_bl - delta_al x*_kb
        for f, e in enumerate(wds):
            if not e:
                continue
            k_, l_ = PAIRS[f]
            for pq, sgn in _dual_pair_step(k_, l_, a, b):
                nw = list(wds)
                nw[f] -= 1
                nw[PAIR_INDEX[pq]] += 1
                _bump(out, (xs, ws, tuple(nw), xds), -c * e * sgn)
        # Sym(C^5*): e_ab . x*_a = -x*_b
        k = xds[a - 1]
        if k:
            nx = list(xds)
            nx[a - 1] -= 1
            nx[b - 1] += 1
            _bump(out, (xs, ws, wds, tuple(nx)), -c * k)
    return out


def _dual_pair_step(k, l, a, b):
    out = []
    if a == k:
        if b != l:
            out.append(((b, l), 1) if b < l else ((l, b), -1))
    if a == l:
        if b != k:
            out.append(((k, b), 1) if k < b else ((b, k), -1))
    return out


def _bump(out, key, c):
    if not c:
        return
    s = out.get(key, 0) + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


@lru_cache(maxsize=None)
def _mono_eps_weight(mono):
    w = [0] * 5
    xs, ws, wds, xds = mono
    for i in range(5):
        w[i] += xs[i] - xds[i]
    for f in range(10):
        i, j = PAIRS[f]
        w[i - 1] += ws[f] - wds[f]
        w[j - 1] += ws[f] - wds[f]
    return tuple(w)


def _eps_weight(mono):
    return _mono_eps_weight(mono)


def _mono_profile(mono):
    return tuple(sum(part) for part in mono)


@lru_cache(maxsize=None)
def _profile_monomials(profile):
    """Every ambient monomial with the given per-factor degrees."""
    from itertools import combinations_with_replacement as cwr

    def exps(slots, total):
        out = []
        for combo in cwr(range(slots), total):
            e = [0] * slots
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        return out

    return tuple((a, b, c, d)
                 for a in exps(5, profile[0])
                 for b in exps(10, profile[1])
                 for c in exps(10, profile[2])
                 for d in exps(5, profile[3]))


class Irrep:
    """A concrete F(a,b,c,d) with basis, weights and cached actions."""

    def __init__(self, weight):
        self.weight = tuple(weight)
        if not is_dominant(self.weight):
            raise ValueError("highest weight must be dominant: %s" % (weight,))
        a, b, c, d = self.weight
        hw = ((a, 0, 0, 0, 0),
              (b,) + (0,) * 9,
              (0,) * 9 + (c,),
              (0, 0, 0, 0, d))
        self.basis = [{hw: Q(1)}]
        self.eps_weights = [_eps_weight(hw)]
        self.parents = [None]  # index -> (parent index, lowering op i)
        self._blocks = {self.eps_weights[0]: Echelon()}
        self._blocks[self.eps_weights[0]].insert(self.basis[0], 0)
        self._close()
        self._mats = {}
        self._split = None
        if len(self.basis) != weyl_dim(self.weight):
            raise AssertionError(
                "closure dimension %d disagrees with Weyl formula %d for %s"
                % (len(self.basis), weyl_dim(self.weight), self.weight))
        self.dim = len(self.basis)

    def _close(self):
        i = 0
        while i < len(self.basis):
            for low in range(1, 5):
                img = act_ambient(low + 1, low, self.basis[i])
                if not img:
                    continue
                wkey = _eps_weight(next(iter(img)))
                block = self._blocks.setdefault(wkey, Echelon())
                if block.insert(img, len(self.basis)):
                    self.basis.append(img)
                    self.eps_weights.append(wkey)
                    self.parents.append((i, low))
            i += 1

    def coords(self, vec):
        """Coordinates of an ambient vector, split per weight block."""
        if not vec:
            return {}
        split = {}
        for mono, c in vec.items():
            split.setdefault(_eps_weight(mono), {})[mono] = c
        out = {}
        for wkey, part in split.items():
            block = self._blocks.get(wkey)
            combo = block.coords(part) if block is not None else None
            if combo is None:
                raise ValueError("vector outside the module span")
            out.update(combo)
        return {k: v for k, v in out.items() if v}

    def mat(self, a, b):
        """Columns of x_a p_b on the basis: list of dicts row -> Q."""
        key = (a, b)
        if key not in self._mats:
            cols = []
            for j in range(self.dim):
                if a == b:
                    ev = self.eps_weights[j][a - 1]
                    cols.append({j: Q(ev)} if ev else {})
                else:
                    cols.append(self.coords(act_ambient(a, b, self.basis[j])))
            self._mats[key] = cols
        return self._mats[key]

    def act(self, a, b, coeffs):
        """x_a p_b on a coordinate vector (dict index -> scalar)."""
        cols = self.mat(a, b)
        out = {}
        for j, c in coeffs.items():
            for i, v in cols[j].items():
                _bump(out, i, c * v)
        return out

    def coord_weight(self, idx):
        return eps_to_coords(self.eps_weights[idx])

    def project(self, vec):
        """Coordinates of the component of an ambient vector along this module.

        The space of ambient vectors with this module's multidegree splits as
        the module plus an invariant complement (the other isotypic pieces);
        project splits vec accordingly and returns the module component in
        basis coordinates.  Agrees with coords on vectors already in the span.
        """
        if not vec:
            return {}
        profiles = {_mono_profile(m) for m in vec}
        if len(profiles) != 1:
            raise ValueError("projection needs a single multidegree")
        prof = profiles.pop()
        if prof != self.weight:
            raise ValueError(
                "multidegree %s does not match the realization of F%s"
                % (prof, self.weight))
        blocks = self._split_blocks()
        split = {}
        for mono, c in vec.items():
            split.setdefault(_eps_weight(mono), {})[mono] = c
        out = {}
        for wkey, part in split.items():
            combo = blocks[wkey].coords(part)
            if combo is None:
                raise AssertionError("multidegree decomposition misses a vector")
            for (kind, idx), v in combo.items():
                if kind == 0:
                    _bump(out, idx, v)
        return {k: v for k, v in out.items() if v}

    def _split_blocks(self):
        """Weight -> echelon over the whole multidegree space; module basis
        vectors carry tags (0, i), complement vectors tags (1, k)."""
        if self._split is not None:
            return self._split
        from .linalg import kernel_basis
        monos = _profile_monomials(self.weight)
        byw = {}
        for m in monos:
            byw.setdefault(_eps_weight(m), []).append(m)
        top = _eps_weight(next(iter(self.basis[0])))
        seeds = []
        for wkey, ms in byw.items():
            # highest weight vectors only live in gl-dominant blocks
            if any(wkey[i] < wkey[i + 1] for i in range(4)):
                continue
            rows = {}
            for i in range(1, 5):
                for m in ms:
                    for im, v in act_ambient(i, i + 1, {m: Q(1)}).items():
                        rows.setdefault((i, im), {})[m] = v
            hws = kernel_basis(rows.values(), ms)
            if wkey == top:
                if len(hws) != 1:
                    raise AssertionError(
                        "extreme weight multiplicity %d; complement is not "
                        "canonical" % len(hws))
                continue
            seeds.extend(hws)
        blocks = {}
        closure = []

        def _insert(vec, tag):
            wkey = _eps_weight(next(iter(vec)))
            blk = blocks.setdefault(wkey, Echelon())
            return blk.insert(vec, tag)

        for v in seeds:
            if _insert(v, (1, len(closure))):
                closure.append(v)
        i = 0
        while i < len(closure):
            for low in range(1, 5):
                img = act_ambient(low + 1, low, closure[i])
                if img and _insert(img, (1, len(closure))):
                    closure.append(img)
            i += 1
        for idx, v in enumerate(self.basis):
            if not _insert(v, (0, idx)):
                raise AssertionError("module meets its invariant complement")
        if sum(b.rank() for b in blocks.values()) != len(monos):
            raise AssertionError("isotypic decomposition misses the space")
        self._split = blocks
        return blocks


@lru_cache(maxsize=None)
def build_irrep(weight) -> Irrep:
    return Irrep(weight)


def highest_weight_vectors(rep: Irrep):
    """Indices-with-coefficients of the joint kernel of e_1..e_4.

    Returns a list of coordinate dicts; for an irreducible module this is a
    single vector supported on index 0.
    """
    from .linalg import kernel_basis
    rows = {}
    for i in range(1, 5):
        cols = rep.mat(i, i + 1)
        for j in range(rep.dim):
            for r, v in cols[j].items():
                rows.setdefault((i, r), {})[j] = v
    return kernel_basis(rows.values(), list(range(rep.dim)))


def ambient_monomial(x=(), w=(), dw=(), dx=()):
    """Ambient key from factor lists.

    x and dx list vector / dual vector indices, w and dw list wedge / dual
    wedge pairs; pairs must be given with i < j (orientation signs are the
    caller's business).
    """
    ex = [0] * 5
    for i in x:
        ex[i - 1] += 1
    ew = [0] * 10
    for pr in w:
        ew[PAIR_INDEX[tuple(pr)]] += 1
    edw = [0] * 10
    for pr in dw:
        edw[PAIR_INDEX[tuple(pr)]] += 1
    edx = [0] * 5
    for i in dx:
        edx[i - 1] += 1
    return (tuple(ex), tuple(ew), tuple(edw), tuple(edx))
