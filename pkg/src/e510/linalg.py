"""Sparse exact linear algebra over the rationals.

Rows are dicts column_key -> value with arbitrary orderable column keys.
Internally every row is scaled to a primitive integer vector (gcd 1); the
elimination never divides, so no rational arithmetic happens until kernel
back-substitution.  All orderings are canonical, which makes results
byte-for-byte reproducible.
"""

from math import gcd

from .scalars import Q


class MatrixTooLargeError(RuntimeError):
    """Raised before building a search block that exceeds the entry cap."""


def _row_to_int(row):
    """Primitive integer version of a rational row (returns a new dict)."""
    if not row:
        return {}
    denleast = 1
    for v in row.values():
        denleast = denleast * v.denominator // gcd(denleast, int(v.denominator))
    out = {}
    g = 0
    for k, v in row.items():
        n = int(v.numerator) * (denleast // int(v.denominator))
        if n:
            out[k] = n
            g = gcd(g, n)
    if g > 1:
        for k in out:
            out[k] //= g
    return out


def _make_primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for k in row:
            row[k] //= g
    return row


def _eliminate(residual, pivval, coefficient, pivrow):
    """residual <- pivval * residual - coefficient * pivrow, in place."""
    if pivval != 1:
        for k in residual:
            residual[k] *= pivval
    for k, v in pivrow.items():
        s = residual.get(k, 0) - coefficient * v
        if s:
            residual[k] = s
        else:
            residual.pop(k, None)
    return residual


class Echelon:
    """Incremental row echelon over Q with member-coordinate tracking.

    Rows are stored monic at their leading column.  When rows are inserted
    with a tag, coords() can later express any vector of the span as a
    combination of the tagged members.
    """

    def __init__(self):
        self.pivots = {}  # leading column -> (monic row, combo dict tag -> Q)

    def rank(self):
        return len(self.pivots)

    def _reduce(self, row, combo):
        # invariant: current row == original row - sum combo[t] * member_t
        while row:
            lead = min(row)
            hit = self.pivots.get(lead)
            if hit is None:
                break
            prow, pcombo = hit
            c = row.pop(lead)
            for k, v in prow.items():
                if k == lead:
                    continue
                s = row.get(k, 0) - c * v
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
            if combo is not None:
                for t, v in pcombo.items():
                    s = combo.get(t, 0) + c * v
                    if s:
                        combo[t] = s
                    else:
                        combo.pop(t, None)
        return row, combo

    def insert(self, row, tag):
        """Add a vector as the member called tag; True if it was independent."""
        row = {k: Q(1) * v for k, v in row.items() if v}
        row, combo = self._reduce(row, {})
        if not row:
            return False
        lead = min(row)
        m = row.pop(lead)
        stored = {lead: Q(1)}
        for k, v in row.items():
            stored[k] = v / m
        pcombo = {tag: 1 / m}
        for t, v in combo.items():
            pcombo[t] = -v / m
        self.pivots[lead] = (stored, pcombo)
        return True

    def coords(self, row):
        """Coordinates of row w.r.t. the tagged members, or None if outside."""
        row = {k: Q(1) * v for k, v in row.items() if v}
        row, combo = self._reduce(row, {})
        if row:
            return None
        return combo

    def contains(self, row):
        row = {k: Q(1) * v for k, v in row.items() if v}
        row, _ = self._reduce(row, None)
        return not row


def kernel_basis(rows, column_order, entry_cap=None):
    """Exact kernel of the linear map given by constraint rows.

    rows: iterable of dicts column_key -> scalar (each row is one constraint).
    column_order: list fixing the canonical coordinate order.
    Returns kernel vectors as dicts column_key -> Q, each normalized so its
    first nonzero coordinate (in column_order) is 1, sorted by the position
    of that coordinate.
    """
    rows = [r for r in rows if r]
    if entry_cap is not None:
        entries = sum(len(r) for r in rows)
        if entries > entry_cap:
            raise MatrixTooLargeError(
                "search block has %d stored entries (cap %d); raise the cap "
                "to proceed" % (entries, entry_cap))
    colpos = {c: i for i, c in enumerate(column_order)}
    introws = sorted((_row_to_int(r) for r in rows),
                     key=lambda r: (len(r), sorted(colpos[c] for c in r)))
    pivots = {}  # col position -> row (keyed by col position)
    for row in introws:
        row = {colpos[c]: v for c, v in row.items()}
        while row:
            lead = min(row)
            pivrow = pivots.get(lead)
            if pivrow is None:
                break
            rv = row.pop(lead)
            _eliminate(row, pivrow[lead], rv,
                       {k: v for k, v in pivrow.items() if k != lead})
            _make_primitive(row)
        if row:
            pivots[min(row)] = _make_primitive(row)

    free = [i for i in range(len(column_order)) if i not in pivots]
    basis = []
    for f in free:
        x = {f: Q(1)}
        for p in sorted(pivots, reverse=True):
            prow = pivots[p]
            acc = Q(0)
            for c, v in prow.items():
                if c != p and c in x:
                    acc += v * x[c]
            if acc:
                x[p] = -acc / prow[p]
        first = min(x)
        lead = x[first]
        vec = {column_order[i]: v / lead for i, v in x.items() if v}
        basis.append((first, vec))
    basis.sort(key=lambda t: t[0])
    return [vec for _, vec in basis]


def rank_of(rows, column_order):
    colpos = {c: i for i, c in enumerate(column_order)}
    pivots = {}
    for r in rows:
        row = {colpos[c]: v for c, v in _row_to_int(r).items()}
        while row:
            lead = min(row)
            pivrow = pivots.get(lead)
            if pivrow is None:
                break
            rv = row.pop(lead)
            _eliminate(row, pivrow[lead], rv,
                       {k: v for k, v in pivrow.items() if k != lead})
            _make_primitive(row)
        if row:
            pivots[min(row)] = _make_primitive(row)
    return len(pivots)
